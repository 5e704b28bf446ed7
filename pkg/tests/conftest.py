"""Shared builders for the test suite."""
from __future__ import annotations

import random

import pytest

from toricsheaf import (
    EquivariantReflexiveSheaf,
    KlyachkoFiltration,
    Subspace,
    hirzebruch,
    span,
)
from toricsheaf.rational_linalg import matrix_rank


def chain_filtration(jumps, generator_chain, rank):
    """Filtration from a list of generator lists; the full space is appended."""
    spaces = [span(gens, rank) for gens in generator_chain]
    spaces.append(Subspace.full(rank))
    return KlyachkoFiltration(tuple(jumps), tuple(spaces))


def rank3_example_sheaf() -> EquivariantReflexiveSheaf:
    """The rank-3 sheaf on H_3 shipped in configs/rank3_h3.json."""
    h3 = hirzebruch(3)
    return EquivariantReflexiveSheaf(h3, 3, (
        chain_filtration((-3, -1, 0), [[(3, 3, 1)], [(3, 3, 1), (4, 0, 2)]], 3),
        chain_filtration((-9, -3, 0), [[(9, 4, 8)], [(9, 4, 8), (2, 8, 8)]], 3),
        chain_filtration((-4, -1, 0), [[(0, 6, 3)], [(0, 6, 3), (7, 1, 3)]], 3),
        chain_filtration((-2, -1, 0), [[(4, 0, 4)], [(4, 0, 4), (9, 8, 0)]], 3),
    ))


def tangent_sheaf_h3() -> EquivariantReflexiveSheaf:
    """The rank-2 tangent sheaf of H_3 (configs/tangent_h3.json)."""
    h3 = hirzebruch(3)
    return EquivariantReflexiveSheaf(h3, 2, (
        chain_filtration((-1, 0), [[(3, 1)]], 2),
        chain_filtration((-1, 0), [[(0, 1)]], 2),
        chain_filtration((-1, 0), [[(1, 0)]], 2),
        chain_filtration((-1, 0), [[(1, 0)]], 2),
    ))


def random_invertible_rows(rng: random.Random, n: int) -> list[list[int]]:
    while True:
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        if matrix_rank(rows, n) == n:
            return rows


def random_filtration(rng: random.Random, rank: int, jump_lo: int, jump_hi: int):
    jumps = sorted(rng.randint(jump_lo, jump_hi) for _ in range(rank))
    distinct = sorted(set(jumps))
    mult = [jumps.count(j) for j in distinct]
    k = len(distinct)
    dims = sorted(rng.sample(range(1, rank), k - 1)) + [rank] if k > 1 else [rank]
    rows = random_invertible_rows(rng, rank)
    chain = [span(rows[:d], rank) for d in dims]
    spaces = []
    for space, m in zip(chain, mult):
        spaces.extend([space] * m)
    return KlyachkoFiltration(tuple(jumps), tuple(spaces))


def random_sheaf(rng: random.Random, variety, rank: int, jump_lo=-6, jump_hi=0):
    filts = tuple(
        random_filtration(rng, rank, jump_lo, jump_hi)
        for _ in range(variety.ray_count)
    )
    return EquivariantReflexiveSheaf(variety, rank, filts)


@pytest.fixture
def rank3_sheaf():
    return rank3_example_sheaf()


@pytest.fixture
def tangent_sheaf():
    return tangent_sheaf_h3()
