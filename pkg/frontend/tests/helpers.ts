import type { CellEntry, KeywordEntry, MatrixView } from "../src/types.js";

export function keywordEntry(
  text: string,
  frequency: number,
  sentiment: [number, number, number] = [frequency, 0, 0],
): KeywordEntry {
  return {
    text,
    kinds: ["noun"],
    frequency,
    sentiment: { positive: sentiment[0], neutral: sentiment[1], negative: sentiment[2] },
    avg_confidence: 75.0,
  };
}

export function cellEntry(i: number, j: number, value: number, pct: number): CellEntry {
  return { i, j, value, pct, tweet_count: value };
}

export function matrixView(keywords: KeywordEntry[], cells: CellEntry[]): MatrixView {
  return {
    relation_kind: "cooccurrence",
    time_range: { start: "2016-07-01T00:00:00Z", end: "2016-07-02T00:00:00Z" },
    record_count: 100,
    keywords,
    cells,
  };
}
