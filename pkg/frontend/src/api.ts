/** HTTP client for the engine, with latest-request-wins reconciliation.
 *
 * Rapid filter edits can leave several queries in flight; only the most
 * recently issued request of each kind may update the screen, so stale
 * responses are dropped instead of flickering in.
 */

import type {
  CorpusInfo,
  Granularity,
  MatrixView,
  QuerySpec,
  TimelineMode,
  TimelineResponse,
  TweetPage,
  TweetTarget,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public fields: string[] = [],
  ) {
    super(fields.length ? `validation: ${fields.join("; ")}` : `HTTP ${status}`);
  }
}

async function postJson<T>(baseUrl: string, path: string, payload: unknown): Promise<T> {
  const response = await fetch(`${baseUrl}${path}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  });
  if (!response.ok) {
    let fields: string[] = [];
    try {
      fields = (await response.json()).fields ?? [];
    } catch {
      // non-JSON error body
    }
    throw new ApiError(response.status, fields);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  async info(): Promise<CorpusInfo> {
    const response = await fetch(`${this.baseUrl}/api/info`);
    if (!response.ok) throw new ApiError(response.status);
    return (await response.json()) as CorpusInfo;
  }

  matrix(spec: QuerySpec): Promise<MatrixView> {
    return postJson(this.baseUrl, "/api/matrix", spec);
  }

  timeline(spec: QuerySpec, mode: TimelineMode, granularity: Granularity): Promise<TimelineResponse> {
    return postJson(this.baseUrl, "/api/timeline", { ...spec, mode, granularity });
  }

  tweets(spec: QuerySpec, target: TweetTarget, offset = 0, limit = 50): Promise<TweetPage> {
    return postJson(this.baseUrl, "/api/tweets", { ...spec, target, offset, limit });
  }
}

/**
 * Gate that applies only the latest issued request's response. Each
 * issue() invalidates all earlier tickets; a resolved promise whose
 * ticket is stale resolves to null and must be ignored by the caller.
 */
export class LatestRequestGate {
  private ticket = 0;

  async issue<T>(work: () => Promise<T>): Promise<T | null> {
    const mine = ++this.ticket;
    const result = await work();
    return mine === this.ticket ? result : null;
  }

  /** True if no request was issued after the currently running one. */
  get current(): number {
    return this.ticket;
  }
}
