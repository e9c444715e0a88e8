/** Wire types for the engine's HTTP/JSON API (the only coupling point). */

export type RelationKind = "cooccurrence" | "word_similarity";
export type KeywordKind = "hashtag" | "noun" | "verb";
export type SortKey = "alphabetical" | "frequency" | "relation_sum";
export type SortDirection = "ascending" | "descending";
export type TimelineMode = "discrete" | "accumulative" | "overlapping";
export type Granularity = "hour" | "day" | "week" | "month";

export interface SortSpec {
  key: SortKey;
  direction: SortDirection;
}

export interface TimeRange {
  start: string; // ISO-8601 UTC
  end: string;
}

/** Full filter state sent with every query; fields are optional on the
 * wire, the server applies the documented defaults. */
export interface QuerySpec {
  relation_kind?: RelationKind;
  pct_range?: [number, number];
  node_count?: number;
  time_range?: TimeRange | null;
  keyword_kinds?: KeywordKind[];
  navigation?: string[];
  sort?: SortSpec;
}

export interface KeywordEntry {
  text: string;
  kinds: KeywordKind[];
  frequency: number;
  sentiment: { positive: number; neutral: number; negative: number };
  avg_confidence: number;
}

export interface CellEntry {
  i: number;
  j: number;
  value: number;
  pct: number;
  tweet_count: number;
}

export interface MatrixView {
  relation_kind: RelationKind;
  time_range: TimeRange | null;
  record_count: number;
  keywords: KeywordEntry[];
  cells: CellEntry[];
}

export interface TimelineResponse {
  mode: TimelineMode;
  granularity: Granularity;
  views: MatrixView[];
}

export type TweetTarget = "all" | { keyword: string } | { cell: [string, string] };

export interface TweetItem {
  id: string;
  text: string;
  timestamp: string;
  polarity: "positive" | "neutral" | "negative";
  confidence: number;
  matched_keywords: string[];
}

export interface TweetPage {
  total: number;
  offset: number;
  limit: number;
  items: TweetItem[];
}

export interface CorpusInfo {
  record_count: number;
  time_range: TimeRange | null;
  distinct_keywords: number;
}

/** One drill-down step: a single keyword node or a two-keyword cell. */
export type Breadcrumb = { kind: "node"; keyword: string } | { kind: "cell"; a: string; b: string };
