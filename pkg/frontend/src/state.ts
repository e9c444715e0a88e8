/** View state: the single source of truth driving every query.
 *
 * Breadcrumbs record the drill-down path (a node step adds one keyword,
 * a cell step adds two); flattening them yields the spec's navigation
 * list. Popping a breadcrumb therefore restores the exact prior query.
 * The whole state round-trips through the URL fragment for deep links.
 */

import type {
  Breadcrumb,
  Granularity,
  QuerySpec,
  TimelineMode,
} from "./types.js";

export interface ViewState {
  mode: "summary" | "timeline";
  timelineMode: TimelineMode;
  granularity: Granularity;
  spec: QuerySpec;
  breadcrumbs: Breadcrumb[];
}

export function defaultViewState(): ViewState {
  return {
    mode: "summary",
    timelineMode: "discrete",
    granularity: "day",
    spec: {},
    breadcrumbs: [],
  };
}

export function flattenBreadcrumbs(breadcrumbs: Breadcrumb[]): string[] {
  const navigation: string[] = [];
  for (const crumb of breadcrumbs) {
    if (crumb.kind === "node") navigation.push(crumb.keyword);
    else navigation.push(crumb.a, crumb.b);
  }
  return navigation;
}

/** Immutable push; the spec's navigation is re-derived from the crumbs. */
export function pushBreadcrumb(state: ViewState, crumb: Breadcrumb): ViewState {
  const breadcrumbs = [...state.breadcrumbs, crumb];
  return {
    ...state,
    breadcrumbs,
    spec: { ...state.spec, navigation: flattenBreadcrumbs(breadcrumbs) },
  };
}

/** Immutable pop; restores the exact prior spec (push then pop is identity). */
export function popBreadcrumb(state: ViewState): ViewState {
  if (state.breadcrumbs.length === 0) return state;
  const breadcrumbs = state.breadcrumbs.slice(0, -1);
  const navigation = flattenBreadcrumbs(breadcrumbs);
  const spec: QuerySpec = { ...state.spec };
  if (navigation.length > 0) spec.navigation = navigation;
  else delete spec.navigation;
  return { ...state, breadcrumbs, spec };
}

export function breadcrumbLabel(crumb: Breadcrumb): string {
  return crumb.kind === "node" ? crumb.keyword : `${crumb.a} × ${crumb.b}`;
}

/** Serialize the view state into a URL fragment (deep-linkable). */
export function stateToFragment(state: ViewState): string {
  return encodeURIComponent(JSON.stringify(state));
}

export function stateFromFragment(fragment: string): ViewState | null {
  if (!fragment) return null;
  try {
    const parsed = JSON.parse(decodeURIComponent(fragment.replace(/^#/, "")));
    if (parsed && typeof parsed === "object" && "mode" in parsed && "spec" in parsed) {
      return parsed as ViewState;
    }
  } catch {
    // malformed fragments fall back to the default state
  }
  return null;
}
