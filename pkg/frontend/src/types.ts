import type { Frac } from "./fraction.js";

export interface CatalogEntry {
  name: string;
  labels: string[];
  dice: number;
}

export interface DieDoc {
  label: string;
  faces: number[];
}

export interface DiceSetDoc {
  name: string;
  dice: DieDoc[];
}

export interface OpponentOdds {
  win: Frac;
  tie: Frac;
  loss: Frac;
}

export interface AdviseResponse {
  die: string;
  rolls: number;
  opponents: string[];
  odds: OpponentOdds[];
}

export interface SimulateResponse {
  a: string;
  b: string;
  r: number;
  seed: number;
  trials: number;
  wins: number;
  ties: number;
  losses: number;
}
