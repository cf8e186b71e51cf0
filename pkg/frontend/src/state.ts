/** Editor state: the pasted item, chosen replacements, per-lemma exclusions,
 * and the latest service responses.
 *
 * The current text is always derived by applying the selections to the
 * original text, never edited in place. Token positions are whitespace
 * chunks that keep an alphanumeric core after stripping edge punctuation —
 * the same surviving-token rule the service's fallback tokenizer uses — so
 * token index k in an analyze response addresses chunk k here, and attached
 * punctuation survives a replacement.
 */

import {
  type AnalyzeResponse,
  type AnalyzedToken,
  ApiError,
  type LexcompClient,
  type Suggestion,
} from "./api.js";

const ALNUM = /[\p{L}\p{N}]/u;

/** Bounds of the token core inside a chunk, or null for pure punctuation. */
export function tokenCore(chunk: string): { start: number; end: number } | null {
  let start = 0;
  let end = chunk.length;
  while (start < end && !ALNUM.test(chunk.charAt(start))) start += 1;
  while (end > start && !ALNUM.test(chunk.charAt(end - 1))) end -= 1;
  return start < end ? { start, end } : null;
}

/** Replace the cores of selected tokens, preserving all whitespace and
 * attached punctuation. Keys are token indices (punctuation-only chunks do
 * not count). */
export function applySelections(original: string, selections: Map<number, string>): string {
  const parts = original.split(/(\s+)/);
  let tokenIndex = 0;
  return parts
    .map((part) => {
      if (part === "" || /^\s+$/.test(part)) return part;
      const core = tokenCore(part);
      if (core === null) return part;
      const index = tokenIndex;
      tokenIndex += 1;
      const replacement = selections.get(index);
      if (replacement === undefined) return part;
      return part.slice(0, core.start) + replacement + part.slice(core.end);
    })
    .join("");
}

export interface EditorSnapshot {
  originalText: string;
  currentText: string;
  tokens: AnalyzedToken[];
  sentenceLix: number | null;
  band: string | null;
  openToken: { index: number; lemma: string } | null;
  suggestions: Suggestion[] | null;
  error: string | null;
}

type Listener = (snapshot: EditorSnapshot) => void;

export class EditorStore {
  private originalText = "";
  private selections = new Map<number, string>();
  private exclusions = new Map<string, Set<string>>();
  private analysis: AnalyzeResponse | null = null;
  private openToken: { index: number; lemma: string } | null = null;
  private suggestions: Suggestion[] | null = null;
  private error: string | null = null;
  private listeners: Listener[] = [];
  private analyzeSeq = 0;

  constructor(
    private readonly client: LexcompClient,
    private readonly k: number = 10,
  ) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  snapshot(): EditorSnapshot {
    return {
      originalText: this.originalText,
      currentText: this.currentText(),
      tokens: this.analysis ? this.analysis.tokens : [],
      sentenceLix: this.analysis ? this.analysis.sentence_lix : null,
      band: this.analysis ? this.analysis.band : null,
      openToken: this.openToken,
      suggestions: this.suggestions,
      error: this.error,
    };
  }

  currentText(): string {
    return applySelections(this.originalText, this.selections);
  }

  /** Load a fresh item, dropping selections and exclusions. */
  async setText(text: string): Promise<void> {
    this.originalText = text;
    this.selections = new Map();
    this.exclusions = new Map();
    this.openToken = null;
    this.suggestions = null;
    await this.refreshAnalysis();
  }

  /** Re-fetch the analysis for the current text; state survives failures. */
  private async refreshAnalysis(): Promise<void> {
    const seq = ++this.analyzeSeq;
    try {
      const analysis = await this.client.analyze(this.currentText());
      if (seq !== this.analyzeSeq) return; // a newer request superseded this one
      this.analysis = analysis;
      this.error = null;
    } catch (err) {
      if (seq !== this.analyzeSeq) return;
      this.error = err instanceof ApiError ? err.message : String(err);
    }
    this.emit();
  }

  /** Open the suggestion panel for a token in the strip. */
  async openSuggestions(index: number, lemma: string): Promise<void> {
    this.openToken = { index, lemma };
    await this.refreshSuggestions();
  }

  private async refreshSuggestions(): Promise<void> {
    if (this.openToken === null) return;
    const lemma = this.openToken.lemma;
    const excluded = this.exclusions.get(lemma) ?? new Set<string>();
    try {
      this.suggestions = await this.client.suggest(lemma, this.k, excluded);
      this.error = null;
    } catch (err) {
      this.suggestions = null;
      this.error = err instanceof ApiError ? err.message : String(err);
    }
    this.emit();
  }

  /** Swap the open token's surface for a candidate lemma and re-score. */
  async applyCandidate(candidate: string): Promise<void> {
    if (this.openToken === null) return;
    this.selections.set(this.openToken.index, candidate);
    this.openToken = null;
    this.suggestions = null;
    await this.refreshAnalysis();
  }

  /** Remember a wrong-sense candidate for this lemma and refetch. */
  async excludeCandidate(candidate: string): Promise<void> {
    if (this.openToken === null) return;
    const lemma = this.openToken.lemma;
    const set = this.exclusions.get(lemma) ?? new Set<string>();
    set.add(candidate);
    this.exclusions.set(lemma, set);
    await this.refreshSuggestions();
  }

  closePanel(): void {
    this.openToken = null;
    this.suggestions = null;
    this.emit();
  }

  /** Restore the original item: selections and exclusions are cleared. */
  async reset(): Promise<void> {
    this.selections = new Map();
    this.exclusions = new Map();
    this.openToken = null;
    this.suggestions = null;
    await this.refreshAnalysis();
  }

  private emit(): void {
    const snapshot = this.snapshot();
    for (const listener of this.listeners) listener(snapshot);
  }
}
