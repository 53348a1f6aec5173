"""JSON file formats, shipped fixtures, and DOT export.

Both formats are canonical on output: tournament edges sort
lexicographically and die faces ascend, so serialize/parse round-trips
are byte-stable.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .dice import Die, DiceSet
from .tournament import Tournament, TournamentSet

FIXTURE_DIR_ENV = "SCHUETTE_FIXTURE_DIR"


class FileFormatError(ValueError):
    """A document does not match the expected schema."""


def tournament_set_to_obj(tau: TournamentSet) -> dict:
    return {
        "n": tau.n,
        "tournaments": [{"edges": sorted(t.edges())} for t in tau.tournaments],
    }


def tournament_set_from_obj(obj: object) -> TournamentSet:
    if not isinstance(obj, dict):
        raise FileFormatError("tournament set document must be a JSON object")
    n = obj.get("n")
    members = obj.get("tournaments")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FileFormatError('"n" must be a nonnegative integer')
    if not isinstance(members, list) or not members:
        raise FileFormatError('"tournaments" must be a nonempty array')
    tournaments = []
    for idx, member in enumerate(members):
        if not isinstance(member, dict) or not isinstance(member.get("edges"), list):
            raise FileFormatError(f'tournament {idx} needs an "edges" array')
        edges = []
        for e in member["edges"]:
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
            ):
                raise FileFormatError(f"tournament {idx} has a malformed edge {e!r}")
            edges.append((e[0], e[1]))
        try:
            tournaments.append(Tournament.from_edges(n, edges))
        except ValueError as exc:
            raise FileFormatError(f"tournament {idx}: {exc}") from exc
    return TournamentSet(tuple(tournaments))


def dumps_tournament_set(tau: TournamentSet) -> str:
    return json.dumps(tournament_set_to_obj(tau), indent=2) + "\n"


def loads_tournament_set(text: str) -> TournamentSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc
    return tournament_set_from_obj(obj)


def load_tournament_set(path: str | Path) -> TournamentSet:
    return loads_tournament_set(Path(path).read_text())


def save_tournament_set(tau: TournamentSet, path: str | Path) -> None:
    Path(path).write_text(dumps_tournament_set(tau))


def dice_set_to_obj(ds: DiceSet) -> dict:
    return {
        "name": ds.name,
        "dice": [{"label": d.label, "faces": list(d.faces)} for d in ds.dice],
    }


def dice_set_from_obj(obj: object) -> DiceSet:
    if not isinstance(obj, dict):
        raise FileFormatError("dice set document must be a JSON object")
    name = obj.get("name")
    dice = obj.get("dice")
    if not isinstance(name, str) or not name:
        raise FileFormatError('"name" must be a nonempty string')
    if not isinstance(dice, list) or not dice:
        raise FileFormatError('"dice" must be a nonempty array')
    out = []
    for idx, d in enumerate(dice):
        if not isinstance(d, dict):
            raise FileFormatError(f"die {idx} must be an object")
        label = d.get("label")
        faces = d.get("faces")
        if not isinstance(label, str) or not label:
            raise FileFormatError(f'die {idx} needs a string "label"')
        if (
            not isinstance(faces, list)
            or not faces
            or not all(isinstance(f, int) and not isinstance(f, bool) for f in faces)
        ):
            raise FileFormatError(f"die {label!r} needs a nonempty integer face array")
        out.append(Die(label, tuple(faces)))
    try:
        return DiceSet(name, tuple(out))
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def dumps_dice_set(ds: DiceSet) -> str:
    return json.dumps(dice_set_to_obj(ds), indent=2) + "\n"


def loads_dice_set(text: str) -> DiceSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from exc
    return dice_set_from_obj(obj)


def load_dice_set(path: str | Path) -> DiceSet:
    return loads_dice_set(Path(path).read_text())


def save_dice_set(ds: DiceSet, path: str | Path) -> None:
    Path(path).write_text(dumps_dice_set(ds))


def export_dot(tau: TournamentSet, name: str = "T") -> str:
    """One DOT digraph block per member, with stable node and edge order."""
    blocks = []
    for idx, t in enumerate(tau.tournaments, start=1):
        lines = [f"digraph {name}{idx} {{"]
        for v in range(t.n):
            lines.append(f"  {v};")
        for i, j in sorted(t.edges()):
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def fixture_dir() -> Path:
    """Directory holding the shipped dice-set fixtures; env var overrides."""
    override = os.environ.get(FIXTURE_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("schuette").joinpath("fixtures")))


def list_fixture_sets(directory: Path | None = None) -> dict[str, DiceSet]:
    """All dice sets in the fixture directory, keyed by their wire names."""
    directory = directory or fixture_dir()
    sets: dict[str, DiceSet] = {}
    if not directory.is_dir():
        return sets
    for path in sorted(directory.glob("*.json")):
        try:
            ds = load_dice_set(path)
        except FileFormatError:
            continue
        sets[ds.name] = ds
    return sets
