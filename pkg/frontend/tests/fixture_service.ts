/** A canned stand-in for the lexcomp service, injected as the client's fetch.
 * Analyze responses are keyed by exact text with hand-computed LIX values;
 * the suggest route honours the exclude parameter like the real service. */

import type { AnalyzeResponse, FetchLike, Suggestion } from "../src/api.js";

export const ORIGINAL_TEXT = "Hvor mye ubehag medfører tvangstankene?";
// 5 tokens, 1 sentence, 2 long words: LIX = 5/1 + 2*100/5 = 45
export const EDITED_TEXT = "Hvor mye ubehag bety tvangstankene?";
// "bety" is short: LIX = 5/1 + 1*100/5 = 25
export const SIMPLE_TEXT = "Hvor mye smerte?";
// one indexed word only: LIX = 3/1 + 0 = 3

function token(surface: string, cs: number | null) {
  return {
    surface,
    lemma: surface.toLowerCase(),
    pos: "OTHER",
    cs,
    content_word: cs !== null,
  };
}

export const ANALYZE_RESPONSES: Record<string, AnalyzeResponse> = {
  [ORIGINAL_TEXT]: {
    tokens: [
      token("Hvor", null),
      token("mye", null),
      token("ubehag", 38.37),
      token("medfører", 25.2),
      token("tvangstankene", null),
    ],
    sentence_lix: 45.0,
    band: "Difficult",
  },
  [EDITED_TEXT]: {
    tokens: [
      token("Hvor", null),
      token("mye", null),
      token("ubehag", 38.37),
      token("bety", 3.0),
      token("tvangstankene", null),
    ],
    sentence_lix: 25.0,
    band: "Easy",
  },
  [SIMPLE_TEXT]: {
    tokens: [token("Hvor", null), token("mye", null), token("smerte", 31.71)],
    sentence_lix: 3.0,
    band: "VeryEasy",
  },
};

export const SUGGESTIONS: Record<string, Suggestion[]> = {
  medfører: [
    { lemma: "medfører", cosine_similarity: 1.0, cs: 25.2, n: 3984 },
    { lemma: "bety", cosine_similarity: 0.9939, cs: 3.0, n: 18330 },
    { lemma: "resultere", cosine_similarity: 0.9701, cs: 32.0, n: 1675 },
  ],
  smerte: [{ lemma: "smerte", cosine_similarity: 1.0, cs: 31.71, n: 2685 }],
};

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export interface FixtureFetch extends FetchLike {
  calls: string[];
}

export function fixtureFetch(): FixtureFetch {
  const calls: string[] = [];
  const impl = (async (input: string, init?: RequestInit) => {
    calls.push(input);
    const url = new URL(input, "http://fixture.local");
    if (url.pathname.endsWith("/analyze")) {
      const body = JSON.parse(String(init?.body ?? "{}")) as { text?: string };
      const text = body.text ?? "";
      const canned = ANALYZE_RESPONSES[text];
      if (canned) return json(canned);
      if (text.trim() === "") return json({ detail: "no token with a letter in input" }, 400);
      return json({ detail: `fixture has no analysis for ${JSON.stringify(text)}` }, 400);
    }
    if (url.pathname.endsWith("/suggest")) {
      const lemma = url.searchParams.get("lemma") ?? "";
      const excluded = new Set(
        (url.searchParams.get("exclude") ?? "").split(",").filter((w) => w !== ""),
      );
      const canned = SUGGESTIONS[lemma];
      if (!canned) return json({ detail: `${lemma} not in embedding vocabulary` }, 404);
      const [reference, ...candidates] = canned;
      const kept = candidates.filter((c) => !excluded.has(c.lemma));
      if (kept.length === 0) return json([]);
      return json([reference, ...kept]);
    }
    if (url.pathname.endsWith("/health")) {
      return json({ status: "ok", m: 10, entries: 6, dim: 3 });
    }
    return json({ detail: "unknown route" }, 404);
  }) as FixtureFetch;
  impl.calls = calls;
  return impl;
}

export function unreachableFetch(): FetchLike {
  return async () => {
    throw new TypeError("fetch failed");
  };
}
