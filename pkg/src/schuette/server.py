"""Local JSON-over-HTTP API backing the dice game UI.

Stateless: every handler recomputes from the immutable fixture sets.
Exact rationals travel as numerator/denominator strings with an advisory
float, so nothing on the wire ever rounds a decision.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .dice import (
    NoDominatingChoiceError,
    UnknownLabelError,
    WinOdds,
    advise,
    realized_relations,
    relations_are_sk,
    simulate,
    win_odds,
)
from .files import dice_set_to_obj, list_fixture_sets


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _odds(o: WinOdds) -> dict:
    return {"win": _frac(o.win), "tie": _frac(o.tie), "loss": _frac(o.loss)}


class AdviseRequest(BaseModel):
    set: str
    opponents: list[str] = Field(min_length=1)
    m: int = Field(ge=1)


class SimulateRequest(BaseModel):
    set: str
    a: str
    b: str
    r: int = Field(ge=1, le=64)
    trials: int = Field(ge=1, le=1_000_000)
    seed: int


def create_app(fixture_dir: Path | None = None, ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="unfair dice game engine")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sets = list_fixture_sets(fixture_dir)

    def get_set(name: str):
        if name not in sets:
            raise HTTPException(status_code=404, detail=f"unknown dice set {name!r}")
        return sets[name]

    @app.get("/api/dice-sets")
    def catalog() -> dict:
        return {
            "sets": [
                {"name": ds.name, "labels": list(ds.labels), "dice": len(ds)}
                for ds in sets.values()
            ]
        }

    @app.get("/api/dice-sets/{name}")
    def one_set(name: str) -> dict:
        return dice_set_to_obj(get_set(name))

    @app.get("/api/dice-sets/{name}/tournaments")
    def tournaments(name: str, m: int = 1) -> dict:
        ds = get_set(name)
        if not 1 <= m <= 64:
            raise HTTPException(status_code=422, detail="m must be in 1..64")
        relations = realized_relations(ds, m)
        rolls = []
        for g in relations:
            edges = [
                {
                    "from": ds.labels[i],
                    "to": ds.labels[j],
                    "win": _frac(win_odds(ds[i], ds[j], g.r).win),
                }
                for i, j in sorted(g.edges())
            ]
            rolls.append({
                "r": g.r,
                "edges": edges,
                "unresolved": [[ds.labels[i], ds.labels[j]] for i, j in g.unresolved],
            })
        return {
            "set": name,
            "m": m,
            "labels": list(ds.labels),
            "s_k": {str(k): relations_are_sk(relations, k) for k in range(1, len(ds))},
            "tournaments": rolls,
        }

    @app.post("/api/advise")
    def advise_route(req: AdviseRequest):
        ds = get_set(req.set)
        try:
            advice = advise(ds, req.opponents, req.m)
        except UnknownLabelError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        except NoDominatingChoiceError as exc:
            return JSONResponse(
                status_code=409,
                content={
                    "detail": str(exc),
                    "opponents": list(exc.opponents),
                    "matrix": [
                        {
                            "r": r,
                            "die": label,
                            "odds": [_odds(o) for o in odds],
                        }
                        for r, label, odds in exc.matrix
                    ],
                },
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {
            "die": advice.label,
            "rolls": advice.rolls,
            "opponents": list(req.opponents),
            "odds": [_odds(o) for o in advice.odds],
        }

    @app.post("/api/simulate")
    def simulate_route(req: SimulateRequest) -> dict:
        ds = get_set(req.set)
        try:
            a = ds[ds.index_of(req.a)]
            b = ds[ds.index_of(req.b)]
        except UnknownLabelError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        tally = simulate(a, b, req.r, req.trials, req.seed)
        return {
            "a": req.a,
            "b": req.b,
            "r": req.r,
            "seed": req.seed,
            "trials": tally.trials,
            "wins": tally.wins,
            "ties": tally.ties,
            "losses": tally.losses,
        }

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app
