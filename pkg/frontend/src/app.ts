/** Builds the editor UI inside a root element and wires it to a client.
 * Kept separate from the bootstrap so tests can inject a fixture service. */

import type { LexcompClient } from "./api.js";
import {
  type Handlers,
  renderCurrentText,
  renderError,
  renderScore,
  renderSuggestionPanel,
  renderTokenStrip,
} from "./render.js";
import { EditorStore } from "./state.js";

export interface App {
  store: EditorStore;
  elements: {
    input: HTMLTextAreaElement;
    analyzeButton: HTMLButtonElement;
    resetButton: HTMLButtonElement;
    score: HTMLElement;
    strip: HTMLElement;
    panel: HTMLElement;
    banner: HTMLElement;
    current: HTMLElement;
  };
}

export function initApp(root: HTMLElement, client: LexcompClient): App {
  root.innerHTML = `
    <div class="editor">
      <div class="banner" hidden></div>
      <textarea class="item-input" rows="3"
        placeholder="Paste an assessment item, e.g. Hvor mye ubehag medfører tvangstankene?"></textarea>
      <div class="controls">
        <button class="analyze">Analyze</button>
        <button class="reset">Reset</button>
        <span class="score"></span>
      </div>
      <p class="current-text"></p>
      <div class="token-strip"></div>
      <div class="suggestion-panel" hidden></div>
    </div>
  `;
  const elements: App["elements"] = {
    input: root.querySelector(".item-input") as HTMLTextAreaElement,
    analyzeButton: root.querySelector(".analyze") as HTMLButtonElement,
    resetButton: root.querySelector(".reset") as HTMLButtonElement,
    score: root.querySelector(".score") as HTMLElement,
    strip: root.querySelector(".token-strip") as HTMLElement,
    panel: root.querySelector(".suggestion-panel") as HTMLElement,
    banner: root.querySelector(".banner") as HTMLElement,
    current: root.querySelector(".current-text") as HTMLElement,
  };

  const store = new EditorStore(client);
  const handlers: Handlers = {
    onOpen: (index, lemma) => void store.openSuggestions(index, lemma),
    onApply: (candidate) => void store.applyCandidate(candidate),
    onExclude: (candidate) => void store.excludeCandidate(candidate),
  };

  store.subscribe((snapshot) => {
    renderError(elements.banner, snapshot);
    renderScore(elements.score, snapshot);
    renderCurrentText(elements.current, snapshot);
    renderTokenStrip(elements.strip, snapshot, handlers);
    renderSuggestionPanel(elements.panel, snapshot, handlers);
  });

  elements.analyzeButton.addEventListener("click", () => {
    void store.setText(elements.input.value);
  });
  elements.resetButton.addEventListener("click", () => {
    void store.reset();
  });

  return { store, elements };
}
