/** Typed client for the lexcomp HTTP service. All numbers displayed in the
 * UI come from these responses; nothing is computed locally. */

export interface AnalyzedToken {
  surface: string;
  lemma: string;
  pos: string;
  cs: number | null;
  content_word: boolean;
}

export interface AnalyzeResponse {
  tokens: AnalyzedToken[];
  sentence_lix: number;
  band: string;
}

export interface Suggestion {
  lemma: string;
  cosine_similarity: number;
  cs: number | null;
  n: number | null;
}

export interface HealthResponse {
  status: string;
  m: number;
  entries: number;
  dim: number | null;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class LexcompClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  analyze(text: string): Promise<AnalyzeResponse> {
    return this.request<AnalyzeResponse>("/analyze", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  suggest(lemma: string, k: number, exclude: Iterable<string>): Promise<Suggestion[]> {
    const params = new URLSearchParams({ lemma, k: String(k) });
    const excluded = [...exclude];
    if (excluded.length > 0) {
      params.set("exclude", excluded.join(","));
    }
    return this.request<Suggestion[]>(`/suggest?${params.toString()}`);
  }

  health(): Promise<HealthResponse> {
    return this.request<HealthResponse>("/health");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // keep the bare status
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }
}
