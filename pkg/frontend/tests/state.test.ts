import { describe, expect, it } from "vitest";

import {
  Action,
  GameState,
  PHASE_ORDER,
  beatMoreOftenThanNot,
  initialState,
  picksComplete,
  reducer,
} from "../src/state.js";
import type { AdviseResponse } from "../src/types.js";

const DICE = [
  { label: "D1", faces: [10, 10, 10] },
  { label: "D2", faces: [0, 0, 30] },
  { label: "D3", faces: [7, 7, 19] },
  { label: "D4", faces: [9, 9, 14] },
  { label: "D5", faces: [3, 3, 26] },
];

const RECOMMENDATION: AdviseResponse = {
  die: "D3",
  rolls: 3,
  opponents: ["D1", "D2"],
  odds: [
    { win: { num: "19", den: "27" }, tie: { num: "0", den: "1" }, loss: { num: "8", den: "27" } },
    { win: { num: "148", den: "243" }, tie: { num: "0", den: "1" }, loss: { num: "95", den: "243" } },
  ],
};

function withSet(): GameState {
  return reducer(initialState, { type: "SELECT_SET", name: "jeffries-five", dice: DICE });
}

function advisedState(): GameState {
  let s = withSet();
  s = reducer(s, { type: "PICK", label: "D1" });
  s = reducer(s, { type: "PICK", label: "D2" });
  s = reducer(s, { type: "ADVICE_REQUESTED" });
  return reducer(s, { type: "ADVICE_RECEIVED", recommendation: RECOMMENDATION });
}

describe("picking", () => {
  it("accepts distinct picks up to the opponent count", () => {
    let s = withSet();
    s = reducer(s, { type: "PICK", label: "D1" });
    expect(s.picks).toEqual(["D1"]);
    expect(picksComplete(s)).toBe(false);
    s = reducer(s, { type: "PICK", label: "D4" });
    expect(s.picks).toEqual(["D1", "D4"]);
    expect(picksComplete(s)).toBe(true);
  });

  it("rejects duplicate picks in-view without losing state", () => {
    let s = reducer(withSet(), { type: "PICK", label: "D1" });
    const rejected = reducer(s, { type: "PICK", label: "D1" });
    expect(rejected.picks).toEqual(["D1"]);
    expect(rejected.notice).toMatch(/already picked/);
    expect(rejected.phase).toBe("picking");
  });

  it("rejects unknown labels and over-picking", () => {
    let s = withSet();
    expect(reducer(s, { type: "PICK", label: "D9" }).notice).toMatch(/no die/);
    s = reducer(s, { type: "PICK", label: "D1" });
    s = reducer(s, { type: "PICK", label: "D2" });
    expect(reducer(s, { type: "PICK", label: "D3" }).notice).toMatch(/all opponents/);
  });

  it("hides the advisor panel semantics with zero picks", () => {
    const s = withSet();
    expect(s.recommendation).toBeNull();
    expect(s.picks).toHaveLength(0);
  });

  it("clamps the configurable opponent count to 1..dice-1", () => {
    let s = withSet();
    s = reducer(s, { type: "SET_OPPONENT_COUNT", count: 99 });
    expect(s.opponentCount).toBe(4);
    s = reducer(s, { type: "SET_OPPONENT_COUNT", count: 0 });
    expect(s.opponentCount).toBe(1);
    expect(withSet().opponentCount).toBe(2); // default matches the 3-player game
  });

  it("unpick works only while picking", () => {
    let s = reducer(withSet(), { type: "PICK", label: "D1" });
    expect(reducer(s, { type: "UNPICK", label: "D1" }).picks).toEqual([]);
    const adv = advisedState();
    expect(reducer(adv, { type: "UNPICK", label: "D1" }).picks).toEqual(["D1", "D2"]);
  });
});

describe("advice", () => {
  it("moves picking -> advised and carries the recommendation verbatim", () => {
    const s = advisedState();
    expect(s.phase).toBe("advised");
    expect(s.recommendation).toEqual(RECOMMENDATION);
    expect(s.advicePending).toBe(false);
  });

  it("failure keeps the picking phase and surfaces a retryable message", () => {
    let s = withSet();
    s = reducer(s, { type: "PICK", label: "D1" });
    s = reducer(s, { type: "PICK", label: "D2" });
    s = reducer(s, { type: "ADVICE_REQUESTED" });
    s = reducer(s, { type: "ADVICE_FAILED", message: "boom" });
    expect(s.phase).toBe("picking");
    expect(s.failure).toBe("boom");
    expect(s.recommendation).toBeNull();
  });

  it("recommendation exists only from the advised phase onward", () => {
    let s: GameState = withSet();
    expect(s.recommendation).toBeNull();
    s = advisedState();
    for (const action of [
      { type: "ROLLOFF_STARTED", trials: 100, seed: 1 },
      { type: "ROLLOFF_FINISHED" },
    ] as Action[]) {
      s = reducer(s, action);
      expect(s.recommendation).not.toBeNull();
    }
  });
});

describe("roll-off", () => {
  it("rejects trials < 1 and stays advised", () => {
    const s = advisedState();
    const rejected = reducer(s, { type: "ROLLOFF_STARTED", trials: 0, seed: 1 });
    expect(rejected.phase).toBe("advised");
    expect(rejected.notice).toMatch(/positive integer/);
  });

  it("tallies grow monotonically during rolling", () => {
    let s = reducer(advisedState(), { type: "ROLLOFF_STARTED", trials: 2000, seed: 7 });
    expect(s.phase).toBe("rolling");
    let prev = 0;
    for (let i = 0; i < 4; i += 1) {
      s = reducer(s, {
        type: "ROLLOFF_PROGRESS",
        opponent: "D1",
        delta: { wins: 300, ties: 10, losses: 190 },
      });
      const t = s.rolloff!.tallies["D1"];
      const total = t.wins + t.ties + t.losses;
      expect(total).toBeGreaterThan(prev);
      prev = total;
    }
    expect(s.rolloff!.completed["D1"]).toBe(2000);
  });

  it("banner judgement reflects only observed counts", () => {
    expect(beatMoreOftenThanNot({ wins: 51, ties: 0, losses: 49 })).toBe(true);
    expect(beatMoreOftenThanNot({ wins: 50, ties: 1, losses: 49 })).toBe(false);
  });
});

describe("state machine shape", () => {
  it("phases advance acyclically within one game", () => {
    const seen: string[] = [];
    let s = withSet();
    seen.push(s.phase);
    for (const action of [
      { type: "PICK", label: "D1" },
      { type: "PICK", label: "D2" },
      { type: "ADVICE_REQUESTED" },
      { type: "ADVICE_RECEIVED", recommendation: RECOMMENDATION },
      { type: "ROLLOFF_STARTED", trials: 10, seed: 0 },
      { type: "ROLLOFF_PROGRESS", opponent: "D1", delta: { wins: 10, ties: 0, losses: 0 } },
      { type: "ROLLOFF_FINISHED" },
    ] as Action[]) {
      s = reducer(s, action);
      seen.push(s.phase);
    }
    const ranks = seen.map((p) => PHASE_ORDER.indexOf(p as never));
    for (let i = 1; i < ranks.length; i += 1) {
      expect(ranks[i]).toBeGreaterThanOrEqual(ranks[i - 1]);
    }
    expect(s.phase).toBe("finished");
    const fresh = reducer(s, { type: "NEW_GAME" });
    expect(fresh.phase).toBe("picking");
    expect(fresh.picks).toEqual([]);
    expect(fresh.recommendation).toBeNull();
    expect(fresh.setName).toBe("jeffries-five");
  });

  it("transitions are total: stray actions never corrupt the phase", () => {
    const everywhere: Action[] = [
      { type: "ADVICE_RECEIVED", recommendation: RECOMMENDATION },
      { type: "ROLLOFF_PROGRESS", opponent: "D1", delta: { wins: 1, ties: 0, losses: 0 } },
      { type: "ROLLOFF_FINISHED" },
      { type: "ADVICE_FAILED", message: "x" },
    ];
    const fresh = withSet();
    for (const action of everywhere) {
      const out = reducer(fresh, action);
      expect(PHASE_ORDER).toContain(out.phase);
      if (action.type !== "ADVICE_RECEIVED" && action.type !== "ADVICE_FAILED") {
        expect(out).toEqual(fresh);
      }
    }
  });
});
