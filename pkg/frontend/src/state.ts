// Game session state machine.  One reducer owns every transition; the
// phases advance picking -> advised -> rolling -> finished and only
// NEW_GAME returns to the start.  All odds in the state are the exact
// strings the API sent; the client never computes a probability.

import type { AdviseResponse, DieDoc } from "./types.js";

export type Phase = "picking" | "advised" | "rolling" | "finished";

export const PHASE_ORDER: Phase[] = ["picking", "advised", "rolling", "finished"];

export interface Tally {
  wins: number;
  ties: number;
  losses: number;
}

export interface RolloffState {
  trials: number;
  seed: number;
  completed: Record<string, number>;
  tallies: Record<string, Tally>;
}

export interface GameState {
  setName: string | null;
  dice: DieDoc[];
  opponentCount: number;
  phase: Phase;
  picks: string[];
  advicePending: boolean;
  recommendation: AdviseResponse | null;
  rolloff: RolloffState | null;
  notice: string | null; // in-view validation message
  failure: string | null; // network failure; retry affordance in the view
}

export type Action =
  | { type: "SELECT_SET"; name: string; dice: DieDoc[] }
  | { type: "SET_OPPONENT_COUNT"; count: number }
  | { type: "PICK"; label: string }
  | { type: "UNPICK"; label: string }
  | { type: "ADVICE_REQUESTED" }
  | { type: "ADVICE_RECEIVED"; recommendation: AdviseResponse }
  | { type: "ADVICE_FAILED"; message: string }
  | { type: "ROLLOFF_STARTED"; trials: number; seed: number }
  | { type: "ROLLOFF_PROGRESS"; opponent: string; delta: Tally }
  | { type: "ROLLOFF_FAILED"; message: string }
  | { type: "ROLLOFF_FINISHED" }
  | { type: "NEW_GAME" };

export const initialState: GameState = {
  setName: null,
  dice: [],
  opponentCount: 2,
  phase: "picking",
  picks: [],
  advicePending: false,
  recommendation: null,
  rolloff: null,
  notice: null,
  failure: null,
};

function freshGame(state: GameState): GameState {
  return {
    ...initialState,
    setName: state.setName,
    dice: state.dice,
    opponentCount: state.opponentCount,
  };
}

export function reducer(state: GameState, action: Action): GameState {
  switch (action.type) {
    case "SELECT_SET":
      return {
        ...initialState,
        setName: action.name,
        dice: action.dice,
        opponentCount: Math.min(
          Math.max(1, initialState.opponentCount),
          Math.max(1, action.dice.length - 1),
        ),
      };

    case "SET_OPPONENT_COUNT": {
      if (state.phase !== "picking") {
        return { ...state, notice: "opponent count is fixed once the game starts" };
      }
      const max = Math.max(1, state.dice.length - 1);
      const count = Math.min(Math.max(1, action.count), max);
      return {
        ...state,
        opponentCount: count,
        picks: state.picks.slice(0, count),
        notice: null,
      };
    }

    case "PICK": {
      if (state.phase !== "picking" || state.advicePending) {
        return { ...state, notice: "picking is closed for this game" };
      }
      if (!state.dice.some((d) => d.label === action.label)) {
        return { ...state, notice: `no die labeled ${action.label}` };
      }
      if (state.picks.includes(action.label)) {
        return { ...state, notice: `${action.label} is already picked` };
      }
      if (state.picks.length >= state.opponentCount) {
        return { ...state, notice: "all opponents have picked" };
      }
      return {
        ...state,
        picks: [...state.picks, action.label],
        notice: null,
        failure: null,
      };
    }

    case "UNPICK": {
      if (state.phase !== "picking" || state.advicePending) {
        return state;
      }
      return {
        ...state,
        picks: state.picks.filter((l) => l !== action.label),
        notice: null,
      };
    }

    case "ADVICE_REQUESTED":
      if (state.phase !== "picking" || state.picks.length !== state.opponentCount) {
        return state;
      }
      return { ...state, advicePending: true, failure: null };

    case "ADVICE_RECEIVED":
      if (state.phase !== "picking") {
        return state;
      }
      return {
        ...state,
        phase: "advised",
        advicePending: false,
        recommendation: action.recommendation,
        notice: null,
      };

    case "ADVICE_FAILED":
      if (state.phase !== "picking") {
        return state;
      }
      return { ...state, advicePending: false, failure: action.message };

    case "ROLLOFF_STARTED": {
      if (state.phase !== "advised" && state.phase !== "rolling") {
        return state;
      }
      if (!Number.isInteger(action.trials) || action.trials < 1) {
        return { ...state, notice: "trials must be a positive integer" };
      }
      const tallies: Record<string, Tally> = {};
      const completed: Record<string, number> = {};
      for (const opp of state.picks) {
        tallies[opp] = { wins: 0, ties: 0, losses: 0 };
        completed[opp] = 0;
      }
      return {
        ...state,
        phase: "rolling",
        rolloff: { trials: action.trials, seed: action.seed, tallies, completed },
        notice: null,
        failure: null,
      };
    }

    case "ROLLOFF_PROGRESS": {
      if (state.phase !== "rolling" || !state.rolloff) {
        return state;
      }
      const prev = state.rolloff.tallies[action.opponent];
      if (!prev) {
        return state;
      }
      const delta = action.delta;
      const chunk = delta.wins + delta.ties + delta.losses;
      return {
        ...state,
        rolloff: {
          ...state.rolloff,
          tallies: {
            ...state.rolloff.tallies,
            [action.opponent]: {
              wins: prev.wins + delta.wins,
              ties: prev.ties + delta.ties,
              losses: prev.losses + delta.losses,
            },
          },
          completed: {
            ...state.rolloff.completed,
            [action.opponent]: state.rolloff.completed[action.opponent] + chunk,
          },
        },
      };
    }

    case "ROLLOFF_FAILED":
      if (state.phase !== "rolling") {
        return state;
      }
      return { ...state, failure: action.message };

    case "ROLLOFF_FINISHED":
      if (state.phase !== "rolling") {
        return state;
      }
      return { ...state, phase: "finished" };

    case "NEW_GAME":
      return freshGame(state);
  }
}

export function picksComplete(state: GameState): boolean {
  return (
    state.phase === "picking" &&
    !state.advicePending &&
    state.picks.length === state.opponentCount &&
    state.picks.length > 0
  );
}

export function beatMoreOftenThanNot(t: Tally): boolean {
  return t.wins > t.ties + t.losses;
}
