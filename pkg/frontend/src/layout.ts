/** Pure geometry: timeline grid placement, frequency bars, cell shading. */

import type { KeywordEntry, MatrixView } from "./types.js";

export interface GridPosition {
  row: number;
  column: number;
}

/**
 * Boustrophedon grid placement: even rows run left to right, odd rows
 * right to left (rows counted from the top), so the eye sweeps
 * continuously from one matrix to the next.
 */
export function layoutTimeline(n: number, columns: number): GridPosition[] {
  if (columns < 1) throw new RangeError(`columns must be >= 1, got ${columns}`);
  const positions: GridPosition[] = [];
  for (let i = 0; i < n; i++) {
    const row = Math.floor(i / columns);
    const within = i % columns;
    const column = row % 2 === 0 ? within : columns - 1 - within;
    positions.push({ row, column });
  }
  return positions;
}

export interface BarSegments {
  total: number; // bar length in px, proportional to frequency
  positive: number; // green
  neutral: number; // blue
  negative: number; // red
}

/**
 * Frequency bar geometry for one keyword: length proportional to
 * frequency (normalized to the view's max), split into
 * positive|neutral|negative segments proportional to the sentiment
 * counts. Segments are rounded but always sum to the rounded total
 * (the remainder is folded into the last non-empty segment), keeping
 * the 1px contract.
 */
export function barSegments(entry: KeywordEntry, maxFrequency: number, maxLengthPx: number): BarSegments {
  if (maxFrequency <= 0 || entry.frequency <= 0) {
    return { total: 0, positive: 0, neutral: 0, negative: 0 };
  }
  const total = Math.round((maxLengthPx * entry.frequency) / maxFrequency);
  const { positive, neutral } = entry.sentiment;
  const positivePx = Math.round((total * positive) / entry.frequency);
  const neutralPx = Math.round((total * neutral) / entry.frequency);
  let negativePx = total - positivePx - neutralPx;
  if (negativePx < 0) negativePx = 0; // rounding overflow folds into neutral
  const drift = total - (positivePx + neutralPx + negativePx);
  return {
    total,
    positive: positivePx,
    neutral: neutralPx + drift,
    negative: negativePx,
  };
}

/** Opacity floor keeps weak-but-present relations visible. */
export const CELL_OPACITY_FLOOR = 0.15;

/**
 * Map a cell's relation percentage onto grey opacity: pct 0..100 is
 * scaled linearly onto [0.15, 1.0]. Absent cells are simply not
 * painted, so the floor never applies to "no relation".
 */
export function cellOpacity(pct: number): number {
  const clamped = Math.max(0, Math.min(100, pct));
  return CELL_OPACITY_FLOOR + (1 - CELL_OPACITY_FLOOR) * (clamped / 100);
}

/** Max keyword frequency in a view (bar normalization base). */
export function maxFrequency(view: MatrixView): number {
  return view.keywords.reduce((acc, kw) => Math.max(acc, kw.frequency), 0);
}

export interface MatrixGeometry {
  labelGutter: number; // px reserved for row/column labels
  barGutter: number; // px reserved for frequency bars
  cellSize: number;
  size: number; // full svg edge length
}

export function matrixGeometry(nodeCount: number, cellSize = 22, labelGutter = 86, barGutter = 44): MatrixGeometry {
  return {
    labelGutter,
    barGutter,
    cellSize,
    size: labelGutter + barGutter + cellSize * Math.max(nodeCount, 1),
  };
}

/** Timeline columns per row: 3 by default, fewer on narrow viewports. */
export function columnsForWidth(viewportPx: number, matrixPx = 560, maxColumns = 3): number {
  return Math.max(1, Math.min(maxColumns, Math.floor(viewportPx / matrixPx)));
}
