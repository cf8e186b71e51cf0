import { describe, expect, it } from "vitest";

import { applySelections, tokenCore } from "../src/state.js";

describe("tokenCore", () => {
  it("strips edge punctuation", () => {
    expect(tokenCore("her.")).toEqual({ start: 0, end: 3 });
    expect(tokenCore("«hus»")).toEqual({ start: 1, end: 4 });
    expect(tokenCore("1250")).toEqual({ start: 0, end: 4 });
  });

  it("returns null for punctuation-only chunks", () => {
    expect(tokenCore("—")).toBeNull();
    expect(tokenCore("...")).toBeNull();
  });
});

describe("applySelections", () => {
  const original = "Hvor mye ubehag medfører tvangstankene?";

  it("is the identity without selections", () => {
    expect(applySelections(original, new Map())).toBe(original);
  });

  it("replaces exactly the selected token", () => {
    const edited = applySelections(original, new Map([[3, "bety"]]));
    expect(edited).toBe("Hvor mye ubehag bety tvangstankene?");
    const before = original.split(/\s+/);
    const after = edited.split(/\s+/);
    expect(after.length).toBe(before.length);
    const changed = before.filter((w, i) => after[i] !== w);
    expect(changed).toEqual(["medfører"]);
  });

  it("keeps attached punctuation", () => {
    const edited = applySelections(original, new Map([[4, "tankene"]]));
    expect(edited.endsWith("tankene?")).toBe(true);
  });

  it("skips punctuation-only chunks when counting tokens", () => {
    const text = "Per — er «her».";
    // tokens: Per(0), er(1), her(2); the dash is not a token
    expect(applySelections(text, new Map([[2, "der"]]))).toBe("Per — er «der».");
  });

  it("supports several selections at once", () => {
    const edited = applySelections(original, new Map([[2, "smerte"], [3, "bety"]]));
    expect(edited).toBe("Hvor mye smerte bety tvangstankene?");
  });

  it("preserves all whitespace", () => {
    const spread = "Hvor  mye\tubehag\nmedfører tvangstankene?";
    const edited = applySelections(spread, new Map([[3, "bety"]]));
    expect(edited).toBe("Hvor  mye\tubehag\nbety tvangstankene?");
  });
});
