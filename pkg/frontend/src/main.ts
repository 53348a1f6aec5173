// DOM shell: renders the whole view from the reducer state and wires
// events back to dispatches.  Probabilities shown are the exact fraction
// strings straight from the API (percentage derived exactly for display).

import { ApiClient } from "./api.js";
import { fracText, gtHalf, percentText } from "./fraction.js";
import {
  Action,
  GameState,
  beatMoreOftenThanNot,
  initialState,
  picksComplete,
  reducer,
} from "./state.js";
import { runRolloff } from "./rolloff.js";

const api = new ApiClient("");
let state: GameState = initialState;

function dispatch(action: Action): void {
  state = reducer(state, action);
  render();
  if (action.type === "PICK" && picksComplete(state)) {
    void requestAdvice();
  }
}

async function requestAdvice(): Promise<void> {
  const { setName, picks, dice } = state;
  if (!setName) {
    return;
  }
  dispatch({ type: "ADVICE_REQUESTED" });
  try {
    const recommendation = await api.advise(setName, picks, dice.length);
    dispatch({ type: "ADVICE_RECEIVED", recommendation });
  } catch (err) {
    dispatch({
      type: "ADVICE_FAILED",
      message: err instanceof Error ? err.message : String(err),
    });
  }
}

function startRolloff(): void {
  const trialsInput = document.querySelector<HTMLInputElement>("#trials");
  const seedInput = document.querySelector<HTMLInputElement>("#seed");
  const trials = Number(trialsInput?.value ?? "0");
  const seed = Number(seedInput?.value ?? "0");
  const rec = state.recommendation;
  if (!rec || !state.setName) {
    return;
  }
  void runRolloff(
    api,
    state.setName,
    rec.die,
    rec.rolls,
    state.picks,
    trials,
    seed,
    dispatch,
  );
}

function el(tag: string, cls?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) {
    node.className = cls;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function renderPicking(root: HTMLElement): void {
  const section = el("section", "panel");
  section.appendChild(el("h2", undefined, `Players 1..${state.opponentCount} pick dice`));

  const count = el("div", "row");
  const label = el("label", undefined, "Opponents: ");
  const select = document.createElement("select");
  for (let c = 1; c <= Math.max(1, state.dice.length - 1); c += 1) {
    const opt = document.createElement("option");
    opt.value = String(c);
    opt.textContent = String(c);
    opt.selected = c === state.opponentCount;
    select.appendChild(opt);
  }
  select.disabled = state.phase !== "picking" || state.picks.length > 0;
  select.onchange = () =>
    dispatch({ type: "SET_OPPONENT_COUNT", count: Number(select.value) });
  label.appendChild(select);
  count.appendChild(label);
  section.appendChild(count);

  const grid = el("div", "dice-grid");
  for (const die of state.dice) {
    const picked = state.picks.includes(die.label);
    const card = el("button", `die-card${picked ? " picked" : ""}`);
    card.appendChild(el("div", "die-label", die.label));
    card.appendChild(el("div", "die-faces", `[${die.faces.join(", ")}]`));
    (card as HTMLButtonElement).disabled =
      state.phase !== "picking" || state.advicePending;
    card.onclick = () =>
      dispatch(picked ? { type: "UNPICK", label: die.label } : { type: "PICK", label: die.label });
    grid.appendChild(card);
  }
  section.appendChild(grid);

  if (state.picks.length > 0) {
    section.appendChild(
      el("p", "picks", `Picked so far: ${state.picks.join(", ")}`),
    );
  }
  if (state.advicePending) {
    section.appendChild(el("p", "pending", "asking the advisor..."));
  }
  root.appendChild(section);
}

function renderAdvice(root: HTMLElement): void {
  const rec = state.recommendation;
  if (!rec || state.picks.length === 0) {
    return; // advisor panel hidden until there is something to show
  }
  const section = el("section", "panel advisor");
  section.appendChild(el("h2", undefined, "Advisor"));
  section.appendChild(
    el(
      "p",
      "recommendation",
      `Play ${rec.die} and roll ${rec.rolls} time(s) per duel.`,
    ),
  );
  const list = el("ul", "odds");
  rec.odds.forEach((odds, idx) => {
    const opp = rec.opponents[idx];
    const item = el(
      "li",
      gtHalf(odds.win) ? "favored" : "unfavored",
      `vs ${opp}: win ${fracText(odds.win)} (${percentText(odds.win)}), ` +
        `tie ${fracText(odds.tie)}, loss ${fracText(odds.loss)}`,
    );
    list.appendChild(item);
  });
  section.appendChild(list);

  if (state.phase === "advised") {
    const controls = el("div", "row controls");
    const trials = document.createElement("input");
    trials.id = "trials";
    trials.type = "number";
    trials.min = "1";
    trials.value = "10000";
    const seed = document.createElement("input");
    seed.id = "seed";
    seed.type = "number";
    seed.value = "42";
    const go = el("button", "primary", "Start roll-off") as HTMLButtonElement;
    go.onclick = startRolloff;
    controls.append("Trials: ", trials, " Seed: ", seed, " ", go);
    section.appendChild(controls);
  }
  root.appendChild(section);
}

function renderRolloff(root: HTMLElement): void {
  const roll = state.rolloff;
  const rec = state.recommendation;
  if (!roll || !rec) {
    return;
  }
  const section = el("section", "panel rolloff");
  section.appendChild(
    el(
      "h2",
      undefined,
      state.phase === "finished" ? "Roll-off result" : "Rolling...",
    ),
  );
  for (const opp of state.picks) {
    const tally = roll.tallies[opp];
    const done = roll.completed[opp];
    const block = el("div", "tally");
    block.appendChild(
      el(
        "div",
        "tally-title",
        `${rec.die} vs ${opp}: ${tally.wins} wins / ${tally.ties} ties / ` +
          `${tally.losses} losses (${done}/${roll.trials})`,
      ),
    );
    const bar = el("div", "bar");
    const total = Math.max(1, tally.wins + tally.ties + tally.losses);
    const win = el("span", "bar-win");
    win.style.width = `${(100 * tally.wins) / total}%`;
    const tie = el("span", "bar-tie");
    tie.style.width = `${(100 * tally.ties) / total}%`;
    const loss = el("span", "bar-loss");
    loss.style.width = `${(100 * tally.losses) / total}%`;
    bar.append(win, tie, loss);
    block.appendChild(bar);
    section.appendChild(block);
  }
  if (state.phase === "finished") {
    const banner = el("div", "banner");
    for (const opp of state.picks) {
      const tally = roll.tallies[opp];
      const won = beatMoreOftenThanNot(tally);
      banner.appendChild(
        el(
          "p",
          won ? "favored" : "unfavored",
          `${rec.die} rolled higher than ${opp} in ${tally.wins} of ` +
            `${roll.trials} duels: ${won ? "more often than not" : "not a majority"}.`,
        ),
      );
    }
    const again = el("button", "primary", "New game") as HTMLButtonElement;
    again.onclick = () => dispatch({ type: "NEW_GAME" });
    banner.appendChild(again);
    section.appendChild(banner);
  }
  root.appendChild(section);
}

function renderMessages(root: HTMLElement): void {
  if (state.notice) {
    root.appendChild(el("div", "notice", state.notice));
  }
  if (state.failure) {
    const box = el("div", "failure");
    box.appendChild(el("span", undefined, state.failure));
    const retry = el("button", undefined, "Retry") as HTMLButtonElement;
    retry.onclick = () => {
      if (state.phase === "picking") {
        void requestAdvice();
      } else {
        startRolloff();
      }
    };
    box.appendChild(retry);
    root.appendChild(box);
  }
}

function render(): void {
  const root = document.querySelector<HTMLElement>("#app");
  if (!root) {
    return;
  }
  root.replaceChildren();
  const heading = el("header");
  heading.appendChild(el("h1", undefined, "Unfair dice"));
  heading.appendChild(
    el(
      "p",
      "subtitle",
      state.setName
        ? `Set ${state.setName}: opponents pick first, then the advisor answers.`
        : "loading dice sets...",
    ),
  );
  root.appendChild(heading);
  renderMessages(root);
  if (state.setName) {
    renderPicking(root);
    renderAdvice(root);
    renderRolloff(root);
  }
}

async function boot(): Promise<void> {
  render();
  try {
    const sets = await api.catalog();
    if (sets.length === 0) {
      throw new Error("no dice sets on the server");
    }
    const name = sets.some((s) => s.name === "jeffries-five")
      ? "jeffries-five"
      : sets[0].name;
    const doc = await api.diceSet(name);
    dispatch({ type: "SELECT_SET", name: doc.name, dice: doc.dice });
  } catch (err) {
    const root = document.querySelector<HTMLElement>("#app");
    root?.appendChild(
      el("div", "failure", `cannot reach the engine: ${err instanceof Error ? err.message : err}`),
    );
  }
}

void boot();
