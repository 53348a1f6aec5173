import pytest

from schuette.dice import jeffries_five
from schuette.tournament import Tournament, TournamentSet, paley


@pytest.fixture(scope="session")
def three_cycle() -> Tournament:
    return Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture(scope="session")
def five_dice():
    return jeffries_five()


@pytest.fixture(scope="session")
def paley_sets():
    return {p: TournamentSet((paley(p),)) for p in (3, 7, 19)}
