/** DOM rendering for the editor: token strip, score line, suggestion panel
 * and error banner. Pure construction from a snapshot; event wiring comes in
 * through handler callbacks. */

import type { Suggestion } from "./api.js";
import type { EditorSnapshot } from "./state.js";

/** Five-step colour ramp aligned to the LIX band boundaries, so a word's
 * highlight reads on the same scale as the sentence band. */
export function csBandClass(cs: number | null): string {
  if (cs === null) return "cs-none";
  if (cs < 25) return "cs-band-0";
  if (cs < 35) return "cs-band-1";
  if (cs < 45) return "cs-band-2";
  if (cs < 55) return "cs-band-3";
  return "cs-band-4";
}

export interface Handlers {
  onOpen: (index: number, lemma: string) => void;
  onApply: (candidate: string) => void;
  onExclude: (candidate: string) => void;
}

export function renderScore(element: HTMLElement, snapshot: EditorSnapshot): void {
  if (snapshot.sentenceLix === null) {
    element.textContent = "";
    return;
  }
  element.textContent = `LIX ${snapshot.sentenceLix.toFixed(2)} (${snapshot.band})`;
}

export function renderTokenStrip(
  container: HTMLElement,
  snapshot: EditorSnapshot,
  handlers: Handlers,
): void {
  container.replaceChildren();
  snapshot.tokens.forEach((token, index) => {
    const span = document.createElement("span");
    span.className = `token ${csBandClass(token.cs)}`;
    span.textContent = token.surface;
    span.dataset.index = String(index);
    span.dataset.lemma = token.lemma;
    if (token.cs !== null) {
      span.title = `${token.lemma}: cs ${token.cs.toFixed(2)}`;
    }
    if (token.content_word) {
      span.classList.add("content-word");
      span.addEventListener("click", () => handlers.onOpen(index, token.lemma));
    }
    container.append(span, document.createTextNode(" "));
  });
}

function suggestionRow(suggestion: Suggestion, isReference: boolean, handlers: Handlers): HTMLElement {
  const row = document.createElement("li");
  row.className = isReference ? "suggestion reference" : "suggestion";
  row.dataset.lemma = suggestion.lemma;
  const label = document.createElement("span");
  label.className = "suggestion-lemma";
  label.textContent = suggestion.lemma;
  const score = document.createElement("span");
  score.className = "suggestion-cs";
  score.textContent = suggestion.cs === null ? "not indexed" : `cs ${suggestion.cs.toFixed(2)}`;
  const detail = document.createElement("span");
  detail.className = "suggestion-detail";
  detail.textContent =
    suggestion.n === null
      ? `sim ${suggestion.cosine_similarity.toFixed(3)}`
      : `sim ${suggestion.cosine_similarity.toFixed(3)}, in ${suggestion.n} docs`;
  row.append(label, score, detail);
  if (isReference) {
    const marker = document.createElement("span");
    marker.className = "reference-marker";
    marker.textContent = "current word";
    row.append(marker);
  } else {
    const apply = document.createElement("button");
    apply.className = "apply";
    apply.textContent = "Apply";
    apply.addEventListener("click", () => handlers.onApply(suggestion.lemma));
    const exclude = document.createElement("button");
    exclude.className = "exclude";
    exclude.textContent = "Exclude";
    exclude.addEventListener("click", () => handlers.onExclude(suggestion.lemma));
    row.append(apply, exclude);
  }
  return row;
}

export function renderSuggestionPanel(
  container: HTMLElement,
  snapshot: EditorSnapshot,
  handlers: Handlers,
): void {
  container.replaceChildren();
  if (snapshot.openToken === null || snapshot.suggestions === null) {
    container.hidden = true;
    return;
  }
  container.hidden = false;
  const heading = document.createElement("h2");
  heading.textContent = `Alternatives for "${snapshot.openToken.lemma}"`;
  container.append(heading);
  const candidates = snapshot.suggestions.slice(1);
  const reference = snapshot.suggestions[0];
  const list = document.createElement("ul");
  list.className = "suggestion-list";
  if (reference) {
    list.append(suggestionRow(reference, true, handlers));
  }
  for (const candidate of candidates) {
    list.append(suggestionRow(candidate, false, handlers));
  }
  container.append(list);
  if (candidates.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "No simpler alternatives.";
    container.append(empty);
  }
  const caveat = document.createElement("p");
  caveat.className = "caveat";
  caveat.textContent = "Replacements insert the base form; inflecting it is up to you.";
  container.append(caveat);
}

export function renderError(banner: HTMLElement, snapshot: EditorSnapshot): void {
  if (snapshot.error === null) {
    banner.hidden = true;
    banner.textContent = "";
  } else {
    banner.hidden = false;
    banner.textContent = snapshot.error;
  }
}

export function renderCurrentText(element: HTMLElement, snapshot: EditorSnapshot): void {
  element.textContent = snapshot.currentText;
}
