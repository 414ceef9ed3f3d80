import random

import pytest

from ncmatch.geometry import DoubleSet
from ncmatch.oracle import Matching


def globalize(m: Matching, index_map) -> Matching:
    """Map a matching on a half set into combined-set indices."""
    edges = frozenset(
        (min(index_map[i], index_map[j]), max(index_map[i], index_map[j]))
        for i, j in m.edges
    )
    return Matching(edges, frozenset(index_map[i] for i in m.runners))


def halves_maps(d: DoubleSet):
    up = {local: g for local, g in enumerate(d.upper)}
    low = {local: g for local, g in enumerate(d.lower)}
    return up, low


@pytest.fixture
def rng():
    return random.Random(0x5EED)
