/** Typed client for the lexkit curation service (HTTP/JSON only). */

export type Decision = "accept" | "reject";

export interface MethodsResponse {
  methods: string[];
  unavailable: Record<string, string>;
  colex_languages: string[];
  defaults: { lang: string; tau: number };
}

export interface Counts {
  total: number;
  accepted: number;
  rejected: number;
  pending: number;
}

export interface ExpandResponse {
  session_id: string;
  method: string;
  seeds: string[];
  expanded: string[];
  new_words: string[];
  unmatched: string[];
  expandable: boolean;
  counts: Counts;
  decisions: Record<string, Decision>;
}

export interface SessionSnapshot {
  session_id: string;
  method: string;
  params: Record<string, unknown>;
  annotator: string;
  seeds: string[];
  candidates: string[];
  unmatched: string[];
  decisions: Record<string, Decision>;
  counts: Counts;
}

export interface ExportResponse {
  session_id: string;
  wordlist: string;
  annotations_csv: string;
  counts: Counts;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(base: string, path: string,
                          init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(base + path, init);
  } catch (err) {
    throw new ApiError(0, `backend unreachable: ${String(err)}`);
  }
  const body = await response.text();
  if (!response.ok) {
    let detail = body;
    try {
      const parsed = JSON.parse(body) as { detail?: string };
      if (parsed.detail) detail = parsed.detail;
    } catch {
      /* plain-text error body */
    }
    throw new ApiError(response.status, detail);
  }
  return JSON.parse(body) as T;
}

function post<T>(base: string, path: string, payload: unknown): Promise<T> {
  return request<T>(base, path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  });
}

export class LexkitClient {
  constructor(readonly base: string) {}

  methods(): Promise<MethodsResponse> {
    return request<MethodsResponse>(this.base, "/methods");
  }

  expand(args: {
    seeds: string[];
    method: string;
    params?: Record<string, unknown>;
    sessionId?: string;
    annotator?: string;
  }): Promise<ExpandResponse> {
    return post<ExpandResponse>(this.base, "/expand", {
      seeds: args.seeds,
      method: args.method,
      params: args.params ?? {},
      session_id: args.sessionId ?? null,
      annotator: args.annotator ?? "curator",
    });
  }

  decide(sessionId: string, word: string,
         decision: Decision): Promise<{ ok: boolean; counts: Counts }> {
    return post(this.base, `/session/${sessionId}/decide`,
                { word, decision });
  }

  session(sessionId: string): Promise<SessionSnapshot> {
    return request<SessionSnapshot>(this.base, `/session/${sessionId}`);
  }

  export(sessionId: string): Promise<ExportResponse> {
    return request<ExportResponse>(this.base, `/session/${sessionId}/export`);
  }
}
