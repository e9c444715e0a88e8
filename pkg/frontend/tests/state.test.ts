import { describe, expect, it } from "vitest";

import {
  defaultViewState,
  flattenBreadcrumbs,
  popBreadcrumb,
  pushBreadcrumb,
  stateFromFragment,
  stateToFragment,
} from "../src/state.js";
import type { ViewState } from "../src/state.js";

describe("breadcrumbs", () => {
  it("a node step appends one keyword, a cell step two", () => {
    let state = defaultViewState();
    state = pushBreadcrumb(state, { kind: "node", keyword: "eu" });
    expect(state.spec.navigation).toEqual(["eu"]);
    state = pushBreadcrumb(state, { kind: "cell", a: "vote", b: "uk" });
    expect(state.spec.navigation).toEqual(["eu", "vote", "uk"]);
    expect(flattenBreadcrumbs(state.breadcrumbs)).toEqual(["eu", "vote", "uk"]);
  });

  it("push then pop restores the exact prior query spec", () => {
    let state = defaultViewState();
    state.spec = {
      relation_kind: "word_similarity",
      pct_range: [25, 75],
      node_count: 12,
      sort: { key: "alphabetical", direction: "ascending" },
    };
    const before = JSON.stringify(state.spec);
    const pushed = pushBreadcrumb(state, { kind: "node", keyword: "eu" });
    expect(pushed.spec.navigation).toEqual(["eu"]);
    const popped = popBreadcrumb(pushed);
    expect(JSON.stringify(popped.spec)).toBe(before);
    expect(popped.breadcrumbs).toHaveLength(0);
  });

  it("pop round-trips through nested navigation", () => {
    let state = defaultViewState();
    state = pushBreadcrumb(state, { kind: "node", keyword: "eu" });
    const oneLevel = JSON.stringify(state.spec);
    state = pushBreadcrumb(state, { kind: "cell", a: "vote", b: "uk" });
    state = popBreadcrumb(state);
    expect(JSON.stringify(state.spec)).toBe(oneLevel);
  });

  it("popping an empty path is a no-op", () => {
    const state = defaultViewState();
    expect(popBreadcrumb(state)).toBe(state);
  });
});

describe("URL fragment round-trip", () => {
  it("serializes and restores the full view state", () => {
    let state: ViewState = {
      mode: "timeline",
      timelineMode: "overlapping",
      granularity: "day",
      spec: { node_count: 15, navigation: ["eu"] },
      breadcrumbs: [{ kind: "node", keyword: "eu" }],
    };
    const fragment = stateToFragment(state);
    const restored = stateFromFragment(`#${fragment}`);
    expect(restored).toEqual(state);
  });

  it("rejects garbage fragments", () => {
    expect(stateFromFragment("")).toBeNull();
    expect(stateFromFragment("#not-json")).toBeNull();
    expect(stateFromFragment("#%7B%22foo%22%3A1%7D")).toBeNull();
  });
});
