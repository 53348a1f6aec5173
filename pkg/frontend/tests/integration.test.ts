// Live-engine checks: any two picked dice yield a recommendation whose
// exact odds both clear one half, and a seeded 10000-trial roll-off gives
// identical tallies on every run.

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { gtHalf } from "../src/fraction.js";
import { runRolloff } from "../src/rolloff.js";
import type { Action, Tally } from "../src/state.js";

const BASE = "http://127.0.0.1:8655";
const api = new ApiClient(BASE);

function pairs(labels: string[]): [string, string][] {
  const out: [string, string][] = [];
  for (let i = 0; i < labels.length; i += 1) {
    for (let j = i + 1; j < labels.length; j += 1) {
      out.push([labels[i], labels[j]]);
    }
  }
  return out;
}

describe("against a live engine with the jeffries-five fixture", () => {
  it("serves the fixture", async () => {
    const sets = await api.catalog();
    expect(sets.map((s) => s.name)).toContain("jeffries-five");
    const doc = await api.diceSet("jeffries-five");
    expect(doc.dice).toHaveLength(5);
  });

  it("every 2-dice pick gets a recommendation with both exact odds above 1/2", async () => {
    const doc = await api.diceSet("jeffries-five");
    const labels = doc.dice.map((d) => d.label);
    for (const [a, b] of pairs(labels)) {
      const rec = await api.advise("jeffries-five", [a, b], labels.length);
      expect(rec.opponents).toEqual([a, b]);
      expect(rec.odds).toHaveLength(2);
      for (const odds of rec.odds) {
        expect(gtHalf(odds.win)).toBe(true);
      }
      expect([a, b]).not.toContain(rec.die);
    }
  }, 60000);

  it("a seeded 10000-trial roll-off reproduces identical tallies across two runs", async () => {
    const rec = await api.advise("jeffries-five", ["D1", "D2"], 5);

    async function run(): Promise<Record<string, Tally>> {
      const tallies: Record<string, Tally> = {
        D1: { wins: 0, ties: 0, losses: 0 },
        D2: { wins: 0, ties: 0, losses: 0 },
      };
      const dispatch = (action: Action) => {
        if (action.type === "ROLLOFF_PROGRESS") {
          const t = tallies[action.opponent];
          t.wins += action.delta.wins;
          t.ties += action.delta.ties;
          t.losses += action.delta.losses;
        }
        if (action.type === "ROLLOFF_FAILED") {
          throw new Error(action.message);
        }
      };
      await runRolloff(
        api, "jeffries-five", rec.die, rec.rolls, ["D1", "D2"], 10000, 424242, dispatch,
      );
      return tallies;
    }

    const first = await run();
    const second = await run();
    expect(second).toEqual(first);
    for (const opp of ["D1", "D2"]) {
      const t = first[opp];
      expect(t.wins + t.ties + t.losses).toBe(10000);
    }
  }, 120000);

  it("raw simulate with one seed is itself reproducible", async () => {
    const one = await api.simulate("jeffries-five", "D3", "D1", 3, 10000, 7);
    const two = await api.simulate("jeffries-five", "D3", "D1", 3, 10000, 7);
    expect(two).toEqual(one);
  });
});
