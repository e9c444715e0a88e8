/** Explorer bootstrap: filter panel, matrix area, tweet panel, linking.
 *
 * All view state lives in one ViewState object; every edit re-issues
 * the affected queries through a latest-request-wins gate and
 * serializes the state into the URL fragment for deep links.
 */

import { ApiClient, LatestRequestGate } from "./api.js";
import { columnsForWidth, layoutTimeline } from "./layout.js";
import {
  attachZoomPan,
  clearHighlights,
  closeNavigationMenu,
  createTooltip,
  highlightCell,
  highlightKeyword,
  openNavigationMenu,
} from "./interactions.js";
import { cellTooltip, keywordTooltip, renderMatrix } from "./render.js";
import {
  breadcrumbLabel,
  defaultViewState,
  popBreadcrumb,
  pushBreadcrumb,
  stateFromFragment,
  stateToFragment,
  type ViewState,
} from "./state.js";
import type { Breadcrumb, MatrixView, TweetTarget } from "./types.js";

interface Rendered {
  views: MatrixView[];
}

export class ExplorerApp {
  private state: ViewState;
  private gate = new LatestRequestGate();
  private tweetGate = new LatestRequestGate();
  private rendered: Rendered = { views: [] };
  private tweetTarget: TweetTarget = "all";

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
  ) {
    this.state = stateFromFragment(location.hash) ?? defaultViewState();
  }

  async start(): Promise<void> {
    this.renderChrome();
    await this.refresh();
  }

  private setState(next: ViewState): void {
    this.state = next;
    history.replaceState(null, "", `#${stateToFragment(next)}`);
    void this.refresh();
  }

  // -- data flow ----------------------------------------------------------

  private async refresh(): Promise<void> {
    this.syncPanel();
    const { state } = this;
    const result = await this.gate.issue(async () => {
      if (state.mode === "summary") {
        return [await this.api.matrix(state.spec)];
      }
      const response = await this.api.timeline(state.spec, state.timelineMode, state.granularity);
      return response.views;
    });
    if (result === null) return; // superseded by a newer query
    this.rendered = { views: result };
    this.renderMatrices(result);
    void this.refreshTweets();
  }

  private async refreshTweets(offset = 0): Promise<void> {
    const page = await this.tweetGate.issue(() =>
      this.api.tweets(this.state.spec, this.tweetTarget, offset, 50),
    );
    if (page === null) return;
    const panel = this.root.querySelector("#kre-tweets")!;
    panel.innerHTML = "";
    const header = document.createElement("div");
    header.className = "kre-tweets-header";
    const targetLabel =
      this.tweetTarget === "all"
        ? "all records"
        : "keyword" in this.tweetTarget
          ? `keyword ${this.tweetTarget.keyword}`
          : `cell ${this.tweetTarget.cell.join(" × ")}`;
    header.textContent = `${page.total} tweets (${targetLabel})`;
    panel.appendChild(header);
    for (const item of page.items) {
      const entry = document.createElement("div");
      entry.className = `kre-tweet kre-tweet-${item.polarity}`;
      entry.textContent = `[${item.timestamp}] ${item.text}`;
      entry.addEventListener("mouseenter", () => {
        clearHighlights(this.matrixArea());
        for (const keyword of item.matched_keywords) {
          highlightKeyword(this.matrixArea(), keyword);
        }
      });
      entry.addEventListener("mouseleave", () => clearHighlights(this.matrixArea()));
      panel.appendChild(entry);
    }
  }

  // -- rendering ----------------------------------------------------------

  private matrixArea(): HTMLElement {
    return this.root.querySelector("#kre-matrices") as HTMLElement;
  }

  private renderMatrices(views: MatrixView[]): void {
    const area = this.matrixArea();
    area.innerHTML = "";
    const tooltip = createTooltip(this.root);

    if (this.state.mode === "summary") {
      const svg = renderMatrix(area, views[0]);
      attachZoomPan(svg);
    } else {
      const columns = columnsForWidth(area.clientWidth || window.innerWidth);
      const positions = layoutTimeline(views.length, columns);
      area.style.display = "grid";
      area.style.gridTemplateColumns = `repeat(${columns}, max-content)`;
      views.forEach((view, index) => {
        const svg = renderMatrix(area, view, index);
        const panel = svg.closest(".kre-matrix") as HTMLElement;
        panel.style.gridRow = String(positions[index].row + 1);
        panel.style.gridColumn = String(positions[index].column + 1);
        attachZoomPan(svg);
      });
    }
    this.wireMatrixEvents(area, tooltip);
    this.renderBreadcrumbs();
  }

  private wireMatrixEvents(area: HTMLElement, tooltip: ReturnType<typeof createTooltip>): void {
    area.addEventListener("mouseover", (event) => {
      const target = event.target as Element;
      const matrix = target.closest(".kre-matrix");
      if (!matrix) return;
      const viewIndex = Number((matrix as HTMLElement).dataset.bucket ?? 0);
      const view = this.rendered.views[viewIndex];
      const keyword = target.getAttribute("data-keyword");
      if (keyword) {
        clearHighlights(area);
        highlightKeyword(area, keyword);
        const entry = view?.keywords.find((kw) => kw.text === keyword);
        if (entry) tooltip.show(keywordTooltip(entry), event.pageX, event.pageY);
        return;
      }
      if (target.classList.contains("kre-cell")) {
        const a = target.getAttribute("data-a")!;
        const b = target.getAttribute("data-b")!;
        clearHighlights(area);
        const fullRowColumn = (this.root.querySelector("#f-full-rowcol") as HTMLInputElement)
          ?.checked;
        highlightCell(area, a, b, { fullRowColumn });
        const cell = view?.cells.find(
          (c) =>
            (view.keywords[c.i].text === a && view.keywords[c.j].text === b) ||
            (view.keywords[c.i].text === b && view.keywords[c.j].text === a),
        );
        if (cell && view) tooltip.show(cellTooltip(view, cell), event.pageX, event.pageY);
      }
    });
    area.addEventListener("mouseout", () => {
      clearHighlights(area);
      tooltip.hide();
    });
    area.addEventListener("click", (event) => {
      const target = event.target as Element;
      const keyword = target.getAttribute("data-keyword");
      let crumb: Breadcrumb | null = null;
      if (keyword) crumb = { kind: "node", keyword };
      else if (target.classList.contains("kre-cell")) {
        crumb = {
          kind: "cell",
          a: target.getAttribute("data-a")!,
          b: target.getAttribute("data-b")!,
        };
      }
      if (!crumb) {
        closeNavigationMenu(this.root);
        return;
      }
      openNavigationMenu(this.root, crumb, { x: event.pageX, y: event.pageY }, {
        onNavigate: (chosen) => this.setState(pushBreadcrumb(this.state, chosen)),
      });
    });
  }

  private renderBreadcrumbs(): void {
    const nav = this.root.querySelector("#kre-breadcrumbs")!;
    nav.innerHTML = "";
    const home = document.createElement("button");
    home.textContent = "⌂ all";
    home.addEventListener("click", () => {
      let state = this.state;
      while (state.breadcrumbs.length) state = popBreadcrumb(state);
      this.setState(state);
    });
    nav.appendChild(home);
    this.state.breadcrumbs.forEach((crumb, index) => {
      const button = document.createElement("button");
      button.textContent = breadcrumbLabel(crumb);
      button.title = "pop back to this step";
      button.addEventListener("click", () => {
        let state = this.state;
        while (state.breadcrumbs.length > index + 1) state = popBreadcrumb(state);
        this.setState(state);
      });
      nav.appendChild(button);
    });
  }

  // -- filter panel ---------------------------------------------------------

  private renderChrome(): void {
    this.root.innerHTML = `
      <header id="kre-header">
        <h1>keyword relation explorer</h1>
        <nav id="kre-breadcrumbs"></nav>
      </header>
      <aside id="kre-filters">
        <label>view
          <select id="f-mode">
            <option value="summary">summary</option>
            <option value="timeline">timeline evolution</option>
          </select>
        </label>
        <label>timeline mode
          <select id="f-timeline-mode">
            <option>discrete</option><option>accumulative</option><option>overlapping</option>
          </select>
        </label>
        <label>granularity
          <select id="f-granularity">
            <option>hour</option><option>day</option><option>week</option><option>month</option>
          </select>
        </label>
        <label>relation
          <select id="f-relation">
            <option value="cooccurrence">co-occurrence</option>
            <option value="word_similarity">word similarity</option>
          </select>
        </label>
        <label>relation % range
          <input id="f-pct-lo" type="number" min="0" max="100" value="0">
          <input id="f-pct-hi" type="number" min="0" max="100" value="100">
        </label>
        <label>nodes <input id="f-nodes" type="number" min="1" value="20"></label>
        <label>time range
          <input id="f-time-start" placeholder="2016-07-01T00:00:00Z">
          <input id="f-time-end" placeholder="2016-07-07T00:00:00Z">
        </label>
        <fieldset id="f-kinds">
          <legend>keyword kinds</legend>
          <label><input type="checkbox" value="hashtag" checked>hashtags</label>
          <label><input type="checkbox" value="noun" checked>nouns</label>
          <label><input type="checkbox" value="verb" checked>verbs</label>
        </fieldset>
        <label>sort
          <select id="f-sort-key">
            <option>frequency</option><option>alphabetical</option><option>relation_sum</option>
          </select>
          <select id="f-sort-dir">
            <option>descending</option><option>ascending</option>
          </select>
        </label>
        <label class="kre-toggle">
          <input id="f-full-rowcol" type="checkbox">highlight full row/column on cell hover
        </label>
        <button id="f-apply">apply</button>
      </aside>
      <main id="kre-matrices"></main>
      <aside id="kre-tweets"></aside>
    `;
    this.root.querySelector("#f-apply")!.addEventListener("click", () => this.applyPanel());
    this.root.querySelector("#f-mode")!.addEventListener("change", () => this.applyPanel());
    this.syncPanel();
  }

  private input(id: string): HTMLInputElement {
    return this.root.querySelector(`#${id}`) as HTMLInputElement;
  }

  private select(id: string): HTMLSelectElement {
    return this.root.querySelector(`#${id}`) as HTMLSelectElement;
  }

  private syncPanel(): void {
    const { state } = this;
    if (!this.root.querySelector("#f-mode")) return;
    this.select("f-mode").value = state.mode;
    this.select("f-timeline-mode").value = state.timelineMode;
    this.select("f-granularity").value = state.granularity;
    this.select("f-relation").value = state.spec.relation_kind ?? "cooccurrence";
    const [lo, hi] = state.spec.pct_range ?? [0, 100];
    this.input("f-pct-lo").value = String(lo);
    this.input("f-pct-hi").value = String(hi);
    this.input("f-nodes").value = String(state.spec.node_count ?? 20);
    this.input("f-time-start").value = state.spec.time_range?.start ?? "";
    this.input("f-time-end").value = state.spec.time_range?.end ?? "";
    const kinds = new Set(state.spec.keyword_kinds ?? ["hashtag", "noun", "verb"]);
    for (const box of this.root.querySelectorAll<HTMLInputElement>("#f-kinds input")) {
      box.checked = kinds.has(box.value as never);
    }
    this.select("f-sort-key").value = state.spec.sort?.key ?? "frequency";
    this.select("f-sort-dir").value = state.spec.sort?.direction ?? "descending";
  }

  private applyPanel(): void {
    const kinds = [...this.root.querySelectorAll<HTMLInputElement>("#f-kinds input")]
      .filter((box) => box.checked)
      .map((box) => box.value) as ViewState["spec"]["keyword_kinds"];
    const start = this.input("f-time-start").value.trim();
    const end = this.input("f-time-end").value.trim();
    const next: ViewState = {
      ...this.state,
      mode: this.select("f-mode").value as ViewState["mode"],
      timelineMode: this.select("f-timeline-mode").value as ViewState["timelineMode"],
      granularity: this.select("f-granularity").value as ViewState["granularity"],
      spec: {
        ...this.state.spec,
        relation_kind: this.select("f-relation").value as never,
        pct_range: [Number(this.input("f-pct-lo").value), Number(this.input("f-pct-hi").value)],
        node_count: Number(this.input("f-nodes").value),
        keyword_kinds: kinds,
        sort: {
          key: this.select("f-sort-key").value as never,
          direction: this.select("f-sort-dir").value as never,
        },
        ...(start && end ? { time_range: { start, end } } : {}),
      },
    };
    if (!start || !end) delete next.spec.time_range;
    this.setState(next);
  }
}

export function bootstrap(): void {
  const root = document.getElementById("kre-app");
  if (!root) throw new Error("missing #kre-app mount point");
  const baseUrl = root.dataset.apiBase ?? "http://127.0.0.1:8080";
  const app = new ExplorerApp(root, new ApiClient(baseUrl));
  void app.start();
}
