/** SVG rendering of one enhanced adjacency matrix.
 *
 * Keywords line the top and left edges in the view's order (sorting is
 * server-authoritative). Each node carries a frequency bar split into
 * green/blue/red sentiment segments; relation cells are grey only,
 * shaded by opacity, so cell shading is never confused with the bars'
 * sentiment colors. The diagonal stays blank.
 */

import { barSegments, cellOpacity, matrixGeometry, maxFrequency } from "./layout.js";
import type { CellEntry, KeywordEntry, MatrixView } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const SENTIMENT_COLORS = {
  positive: "#2e8b57", // green
  neutral: "#4169b2", // blue
  negative: "#c43b3b", // red
} as const;

const CELL_COLOR = "#555555";

function svgElement<K extends keyof SVGElementTagNameMap>(tag: K): SVGElementTagNameMap[K] {
  return document.createElementNS(SVG_NS, tag);
}

function windowLabel(view: MatrixView): string {
  if (!view.time_range) return "no data";
  return `${view.time_range.start} … ${view.time_range.end}`;
}

function appendBar(
  group: SVGGElement,
  entry: KeywordEntry,
  maxFreq: number,
  lengthPx: number,
  thickness: number,
  vertical: boolean,
): void {
  const segments = barSegments(entry, maxFreq, lengthPx);
  let offset = 0;
  for (const part of ["positive", "neutral", "negative"] as const) {
    const length = segments[part];
    if (length <= 0) continue;
    const rect = svgElement("rect");
    rect.setAttribute("class", `kre-bar-segment kre-bar-${part}`);
    rect.setAttribute("fill", SENTIMENT_COLORS[part]);
    if (vertical) {
      rect.setAttribute("x", "0");
      rect.setAttribute("y", String(offset));
      rect.setAttribute("width", String(thickness));
      rect.setAttribute("height", String(length));
    } else {
      rect.setAttribute("x", String(offset));
      rect.setAttribute("y", "0");
      rect.setAttribute("width", String(length));
      rect.setAttribute("height", String(thickness));
    }
    group.appendChild(rect);
    offset += length;
  }
}

export function keywordTooltip(entry: KeywordEntry): string {
  const s = entry.sentiment;
  return (
    `${entry.text} (${entry.kinds.join(", ")})\n` +
    `${entry.frequency} associated tweets\n` +
    `positive ${s.positive} / neutral ${s.neutral} / negative ${s.negative}\n` +
    `average confidence ${entry.avg_confidence.toFixed(1)}%`
  );
}

export function cellTooltip(view: MatrixView, cell: CellEntry): string {
  const a = view.keywords[cell.i].text;
  const b = view.keywords[cell.j].text;
  const value =
    view.relation_kind === "cooccurrence" ? String(cell.value) : cell.value.toFixed(3);
  return (
    `${a} × ${b}\n` +
    `relation value ${value} (${cell.pct.toFixed(1)}%)\n` +
    `${cell.tweet_count} associated tweets to this relation`
  );
}

/**
 * Render a MatrixView into a container element. Returns the svg root.
 * An empty view renders a placeholder panel labeled with its window so
 * a timeline grid keeps its slot.
 */
export function renderMatrix(container: Element, view: MatrixView, bucketIndex?: number): SVGSVGElement {
  const panel = document.createElement("div");
  panel.className = "kre-matrix";
  if (bucketIndex !== undefined) panel.dataset.bucket = String(bucketIndex);
  container.appendChild(panel);

  const caption = document.createElement("div");
  caption.className = "kre-matrix-caption";
  caption.textContent =
    (bucketIndex !== undefined ? `[${bucketIndex}] ` : "") +
    `${windowLabel(view)} — ${view.record_count} records`;
  panel.appendChild(caption);

  const svg = svgElement("svg");
  panel.appendChild(svg);

  const n = view.keywords.length;
  if (n === 0) {
    panel.classList.add("kre-matrix-empty");
    const note = document.createElement("div");
    note.className = "kre-matrix-placeholder";
    note.textContent = "no keywords in this window";
    panel.appendChild(note);
    svg.setAttribute("width", "0");
    svg.setAttribute("height", "0");
    return svg;
  }

  const geometry = matrixGeometry(n);
  const { labelGutter, barGutter, cellSize } = geometry;
  svg.setAttribute("width", String(geometry.size));
  svg.setAttribute("height", String(geometry.size));
  svg.setAttribute("viewBox", `0 0 ${geometry.size} ${geometry.size}`);

  // zoomable/pannable content group; interactions mutate its transform
  const content = svgElement("g");
  content.setAttribute("class", "kre-zoom-group");
  svg.appendChild(content);

  const origin = labelGutter + barGutter;
  const maxFreq = maxFrequency(view);
  const barLength = barGutter - 4;

  view.keywords.forEach((entry, index) => {
    const center = origin + index * cellSize + cellSize / 2;

    const rowLabel = svgElement("text");
    rowLabel.setAttribute("class", "kre-label kre-row-label");
    rowLabel.setAttribute("data-keyword", entry.text);
    rowLabel.setAttribute("x", String(labelGutter - 4));
    rowLabel.setAttribute("y", String(center + 4));
    rowLabel.setAttribute("text-anchor", "end");
    rowLabel.textContent = entry.text;
    content.appendChild(rowLabel);

    const colLabel = svgElement("text");
    colLabel.setAttribute("class", "kre-label kre-col-label");
    colLabel.setAttribute("data-keyword", entry.text);
    colLabel.setAttribute("text-anchor", "start");
    colLabel.setAttribute(
      "transform",
      `translate(${center + 4}, ${labelGutter - 4}) rotate(-60)`,
    );
    colLabel.textContent = entry.text;
    content.appendChild(colLabel);

    // horizontal bar beside the row label, vertical bar under the column label
    const rowBar = svgElement("g");
    rowBar.setAttribute("class", "kre-bar");
    rowBar.setAttribute("data-keyword", entry.text);
    rowBar.setAttribute("transform", `translate(${labelGutter}, ${center - 5})`);
    appendBar(rowBar, entry, maxFreq, barLength, 10, false);
    content.appendChild(rowBar);

    const colBar = svgElement("g");
    colBar.setAttribute("class", "kre-bar");
    colBar.setAttribute("data-keyword", entry.text);
    colBar.setAttribute("transform", `translate(${center - 5}, ${labelGutter})`);
    appendBar(colBar, entry, maxFreq, barLength, 10, true);
    content.appendChild(colBar);
  });

  // grid outline cells (unpainted background, diagonal left blank)
  const grid = svgElement("g");
  grid.setAttribute("class", "kre-grid");
  content.appendChild(grid);
  for (let row = 0; row < n; row++) {
    for (let col = 0; col < n; col++) {
      if (row === col) continue;
      const outline = svgElement("rect");
      outline.setAttribute("class", "kre-cell-outline");
      outline.setAttribute("x", String(origin + col * cellSize));
      outline.setAttribute("y", String(origin + row * cellSize));
      outline.setAttribute("width", String(cellSize));
      outline.setAttribute("height", String(cellSize));
      outline.setAttribute("fill", "none");
      outline.setAttribute("stroke", "#e3e3e3");
      grid.appendChild(outline);
    }
  }

  // painted relation cells: grey, opacity from pct, symmetric
  for (const cell of view.cells) {
    for (const [row, col] of [
      [cell.i, cell.j],
      [cell.j, cell.i],
    ]) {
      const rect = svgElement("rect");
      rect.setAttribute("class", "kre-cell");
      rect.setAttribute("data-a", view.keywords[cell.i].text);
      rect.setAttribute("data-b", view.keywords[cell.j].text);
      rect.setAttribute("data-pct", String(cell.pct));
      rect.setAttribute("data-tweet-count", String(cell.tweet_count));
      rect.setAttribute("x", String(origin + col * cellSize + 1));
      rect.setAttribute("y", String(origin + row * cellSize + 1));
      rect.setAttribute("width", String(cellSize - 2));
      rect.setAttribute("height", String(cellSize - 2));
      rect.setAttribute("fill", CELL_COLOR);
      rect.setAttribute("fill-opacity", cellOpacity(cell.pct).toFixed(4));
      grid.appendChild(rect);
    }
  }

  return svg;
}
