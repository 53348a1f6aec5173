// Chunked roll-off driver: repeated /api/simulate calls per opponent so
// the tallies grow live.  Chunk seeds derive deterministically from the
// base seed, so one (seed, trials) choice always reproduces the same
// final tallies.

import type { ApiClient } from "./api.js";
import type { Action } from "./state.js";

export const CHUNK_SIZE = 1000;

export function chunkSeed(baseSeed: number, opponentIndex: number, chunkIndex: number): number {
  return baseSeed + 1000003 * opponentIndex + 7919 * chunkIndex;
}

export async function runRolloff(
  api: ApiClient,
  setName: string,
  die: string,
  rolls: number,
  opponents: string[],
  trials: number,
  seed: number,
  dispatch: (action: Action) => void,
  chunkSize: number = CHUNK_SIZE,
): Promise<void> {
  dispatch({ type: "ROLLOFF_STARTED", trials, seed });
  if (trials < 1) {
    return;
  }
  try {
    for (let done = 0, chunk = 0; done < trials; done += chunkSize, chunk += 1) {
      const size = Math.min(chunkSize, trials - done);
      for (let o = 0; o < opponents.length; o += 1) {
        const tally = await api.simulate(
          setName,
          die,
          opponents[o],
          rolls,
          size,
          chunkSeed(seed, o, chunk),
        );
        dispatch({
          type: "ROLLOFF_PROGRESS",
          opponent: opponents[o],
          delta: { wins: tally.wins, ties: tally.ties, losses: tally.losses },
        });
      }
    }
    dispatch({ type: "ROLLOFF_FINISHED" });
  } catch (err) {
    dispatch({
      type: "ROLLOFF_FAILED",
      message: err instanceof Error ? err.message : String(err),
    });
  }
}
