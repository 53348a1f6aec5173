"""JSON formats, canonical round-trips, fixtures, and DOT export."""

import json
from math import comb

import pytest

from schuette.dice import Die, DiceSet
from schuette.files import (
    FileFormatError,
    dumps_dice_set,
    dumps_tournament_set,
    export_dot,
    fixture_dir,
    list_fixture_sets,
    loads_dice_set,
    loads_tournament_set,
    save_tournament_set,
)
from schuette.tournament import TournamentSet, paley


def test_tournament_set_round_trip(three_cycle):
    tau = TournamentSet((three_cycle, three_cycle))
    text = dumps_tournament_set(tau)
    assert loads_tournament_set(text) == tau
    assert dumps_tournament_set(loads_tournament_set(text)) == text  # byte-stable


def test_tournament_set_normalizes_noncanonical(three_cycle):
    tau = TournamentSet((three_cycle,))
    obj = json.loads(dumps_tournament_set(tau))
    obj["tournaments"][0]["edges"].reverse()
    renormalized = dumps_tournament_set(loads_tournament_set(json.dumps(obj)))
    assert renormalized == dumps_tournament_set(tau)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"n": 2}',
        '{"n": -1, "tournaments": [{"edges": []}]}',
        '{"n": 2, "tournaments": []}',
        '{"n": 2, "tournaments": [{"edges": [[0, 1], [1, 0]]}]}',
        '{"n": 2, "tournaments": [{"edges": [[0, "x"]]}]}',
        '{"n": 2, "tournaments": [{"edges": [0]}]}',
    ],
)
def test_tournament_set_rejects_malformed(text):
    with pytest.raises(FileFormatError):
        loads_tournament_set(text)


def test_dice_set_round_trip(five_dice):
    text = dumps_dice_set(five_dice)
    assert loads_dice_set(text) == five_dice
    assert dumps_dice_set(loads_dice_set(text)) == text


def test_dice_set_faces_canonical_sorted():
    ds = loads_dice_set('{"name": "x", "dice": [{"label": "a", "faces": [3, 1, 2]}]}')
    assert ds[0].faces == (1, 2, 3)


@pytest.mark.parametrize(
    "text",
    [
        '{"dice": []}',
        '{"name": "", "dice": [{"label": "a", "faces": [1]}]}',
        '{"name": "x", "dice": []}',
        '{"name": "x", "dice": [{"label": "a", "faces": []}]}',
        '{"name": "x", "dice": [{"label": "a", "faces": [1.5]}]}',
        '{"name": "x", "dice": [{"label": "a", "faces": [1]}, {"label": "a", "faces": [2]}]}',
    ],
)
def test_dice_set_rejects_malformed(text):
    with pytest.raises(FileFormatError):
        loads_dice_set(text)


def test_fixture_jeffries_five_shipped():
    sets = list_fixture_sets()
    assert "jeffries-five" in sets
    ds = sets["jeffries-five"]
    assert [list(d.faces) for d in ds.dice] == [
        [10, 10, 10], [0, 0, 30], [7, 7, 19], [9, 9, 14], [3, 3, 26]
    ]


def test_fixture_dir_env_override(tmp_path, monkeypatch, five_dice):
    monkeypatch.setenv("SCHUETTE_FIXTURE_DIR", str(tmp_path))
    assert fixture_dir() == tmp_path
    (tmp_path / "custom.json").write_text(dumps_dice_set(DiceSet("custom", (Die("z", (1, 2)),))))
    sets = list_fixture_sets()
    assert set(sets) == {"custom"}


def test_export_dot_counts(three_cycle):
    tau = TournamentSet((three_cycle, three_cycle))
    dot = export_dot(tau)
    assert dot.count("digraph") == 2
    assert dot.count("->") == 2 * comb(3, 2)
    p7 = TournamentSet((paley(7),))
    assert export_dot(p7).count("->") == comb(7, 2)


def test_save_load_file(tmp_path, three_cycle):
    tau = TournamentSet((three_cycle,))
    path = tmp_path / "set.json"
    save_tournament_set(tau, path)
    from schuette.files import load_tournament_set

    assert load_tournament_set(path) == tau
