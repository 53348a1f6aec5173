import { describe, expect, it } from "vitest";

import { fracText, gtHalf, percentText } from "../src/fraction.js";

describe("exact fraction handling", () => {
  it("compares against one half with BigInt, not floats", () => {
    expect(gtHalf({ num: "41", den: "81" })).toBe(true);
    expect(gtHalf({ num: "40", den: "81" })).toBe(false);
    expect(gtHalf({ num: "1", den: "2" })).toBe(false);
    // far beyond double precision
    expect(gtHalf({ num: "500000000000000000001", den: "1000000000000000000000" })).toBe(true);
    expect(gtHalf({ num: "500000000000000000000", den: "1000000000000000000000" })).toBe(false);
  });

  it("formats fractions and exact percentages", () => {
    expect(fracText({ num: "41", den: "81" })).toBe("41/81");
    expect(percentText({ num: "41", den: "81" })).toBe("50.61%");
    expect(percentText({ num: "1", den: "2" })).toBe("50.00%");
    expect(percentText({ num: "2", den: "3" })).toBe("66.66%");
  });
});
