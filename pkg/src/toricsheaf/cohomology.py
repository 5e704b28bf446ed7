"""Cohomology of equivariant reflexive sheaves by direct enumeration.

Per character m, the sections over the affine piece of a cone are the
intersection of the ray filtrations evaluated at the pairings <m, n(rho)>.
H^0 and H^n come from the intersection / quotient-by-sum formulas, the Euler
characteristic from the signed sum over all cones, and the full cohomology
from the Cech complex of the cover by maximal-cone affines.

All global numbers are finite sums over a box of characters.  The box is the
bounding box (margin 1) of the vertices of the arrangement of jump
hyperplanes <m, n(rho)> = jump: dimensions are constant on the chambers of
that arrangement, and an unbounded chamber with a nonzero dimension would
contradict finite-dimensionality, so everything outside the box contributes
zero.  Per-character linear algebra only depends on the tuple of filtration
levels, which is cached.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor
from typing import Iterator, Sequence

from .errors import UnsupportedVarietyError
from .filtration import EquivariantReflexiveSheaf, twist
from .polytopes import IntervalConstraintSystem, psi_points
from .rational_linalg import (
    Subspace,
    intersect,
    matrix_rank,
    solve_square,
    subspace_sum,
)
from .toric import Cone


@dataclass(frozen=True)
class CharacterBox:
    """An axis-aligned box of lattice characters, bounds inclusive."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("bound tuples must have equal length")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError("lower bound exceeds upper bound")

    def expand(self, margin: int) -> "CharacterBox":
        return CharacterBox(
            tuple(lo - margin for lo in self.lower),
            tuple(hi + margin for hi in self.upper),
        )

    def points(self) -> Iterator[tuple[int, ...]]:
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        return product(*ranges)

    def __contains__(self, m: Sequence[int]) -> bool:
        return all(lo <= x <= hi for x, lo, hi in zip(m, self.lower, self.upper))


def enumeration_box(sheaf: EquivariantReflexiveSheaf) -> CharacterBox:
    """Bounding box of the jump-hyperplane arrangement vertices, margin 1."""
    v = sheaf.variety
    dim = v.dim
    values = [sorted(set(f.jumps)) for f in sheaf.filtrations]
    mins = [Fraction(0)] * dim
    maxs = [Fraction(0)] * dim
    seen_vertex = False
    for rayset in combinations(range(v.ray_count), dim):
        rows = [v.rays[k] for k in rayset]
        for rhs in product(*(values[k] for k in rayset)):
            sol = solve_square(rows, rhs)
            if sol is None:
                break  # singular for every rhs with these rows
            if not seen_vertex:
                mins = list(sol)
                maxs = list(sol)
                seen_vertex = True
            else:
                mins = [min(a, b) for a, b in zip(mins, sol)]
                maxs = [max(a, b) for a, b in zip(maxs, sol)]
    lower = tuple(floor(x) - 1 for x in mins)
    upper = tuple(ceil(x) + 1 for x in maxs)
    return CharacterBox(lower, upper)


def sigma_piece(sheaf: EquivariantReflexiveSheaf, cone: Cone, m: Sequence[int]) -> Subspace:
    """Sections over the cone's affine piece in degree m; full for the zero cone."""
    v = sheaf.variety
    if not cone.ray_indices:
        return Subspace.full(sheaf.rank)
    pieces = [sheaf.filtrations[k].evaluate(v.pairing(m, k)) for k in cone.ray_indices]
    return intersect(pieces)


def h0_character(sheaf: EquivariantReflexiveSheaf, m: Sequence[int]) -> int:
    v = sheaf.variety
    pieces = [f.evaluate(v.pairing(m, k)) for k, f in enumerate(sheaf.filtrations)]
    return intersect(pieces).dim


def hn_character(sheaf: EquivariantReflexiveSheaf, m: Sequence[int]) -> int:
    v = sheaf.variety
    pieces = [f.evaluate(v.pairing(m, k)) for k, f in enumerate(sheaf.filtrations)]
    return sheaf.rank - subspace_sum(pieces).dim


def euler_character(sheaf: EquivariantReflexiveSheaf, m: Sequence[int]) -> int:
    chi = 0
    for cone in sheaf.variety.cones():
        chi += (-1) ** cone.codim * sigma_piece(sheaf, cone, m).dim
    return chi


class SheafCohomology:
    """Per-sheaf evaluator caching all linear algebra by filtration levels.

    One instance serves every twist of its sheaf: twisting shifts jumps only,
    so the twisted level of a pairing value p on ray k is the base level of
    p + shift_k, and the subspace data is unchanged.
    """

    def __init__(self, sheaf: EquivariantReflexiveSheaf):
        self.sheaf = sheaf
        self.variety = sheaf.variety
        self.rank = sheaf.rank
        self._cones = self.variety.cones()
        self._max_cones = [c.ray_indices for c in self._cones if c.codim == 0]
        self._pieces: dict[tuple, Subspace] = {}
        self._h0: dict[tuple[int, ...], int] = {}
        self._hn: dict[tuple[int, ...], int] = {}
        self._chi: dict[tuple[int, ...], int] = {}
        self._cech: dict[tuple[int, ...], tuple[int, ...]] = {}
        # Cech cover bookkeeping: subsets of maximal cones and their common rays
        t = len(self._max_cones)
        self._cover_subsets: list[list[tuple[int, ...]]] = []
        for k in range(t):
            level_sets = []
            for subset in combinations(range(t), k + 1):
                common = set(self._max_cones[subset[0]])
                for i in subset[1:]:
                    common &= set(self._max_cones[i])
                level_sets.append(tuple(sorted(common)))
            self._cover_subsets.append(level_sets)

    def levels(self, m: Sequence[int], shifts: Sequence[int] | None = None) -> tuple[int, ...]:
        v = self.variety
        if shifts is None:
            return tuple(
                f.level(v.pairing(m, k)) for k, f in enumerate(self.sheaf.filtrations)
            )
        return tuple(
            f.level(v.pairing(m, k) + shifts[k])
            for k, f in enumerate(self.sheaf.filtrations)
        )

    def _twist_setup(self, c: Sequence[int]) -> tuple[CharacterBox, tuple[int, ...]]:
        shifts = self.variety.twist_divisor(c)
        return enumeration_box(twist(self.sheaf, c)), shifts

    def h0_twisted(self, c: Sequence[int]) -> int:
        box, shifts = self._twist_setup(c)
        return sum(self.h0(self.levels(m, shifts)) for m in box.points())

    def hn_twisted(self, c: Sequence[int]) -> int:
        box, shifts = self._twist_setup(c)
        return sum(self.hn(self.levels(m, shifts)) for m in box.points())

    def chi_twisted(self, c: Sequence[int]) -> int:
        box, shifts = self._twist_setup(c)
        return sum(self.chi(self.levels(m, shifts)) for m in box.points())

    def cech_twisted(self, c: Sequence[int]) -> tuple[int, ...]:
        box, shifts = self._twist_setup(c)
        totals = [0] * (self.variety.dim + 1)
        for m in box.points():
            for i, hi in enumerate(self.cech(self.levels(m, shifts))):
                totals[i] += hi
        return tuple(totals)

    def h1_identity_twisted(self, c: Sequence[int]) -> int:
        """h^0 + h^n - chi, which is h^1 on a surface."""
        box, shifts = self._twist_setup(c)
        total = 0
        for m in box.points():
            lv = self.levels(m, shifts)
            total += self.h0(lv) + self.hn(lv) - self.chi(lv)
        return total

    def h0_supported(self, c: Sequence[int]) -> int:
        """Same value as h0_twisted, summing only over the characters whose
        ray pieces are all nonzero (the rest contribute zero sections)."""
        v = self.variety
        shifts = v.twist_divisor(c)
        lower = tuple(
            f.jumps[0] - sh for f, sh in zip(self.sheaf.filtrations, shifts)
        )
        system = IntervalConstraintSystem(
            v.rays, lower, (None,) * v.ray_count
        )
        return sum(self.h0(self.levels(m, shifts)) for m in psi_points(system))

    def piece(self, rayset: tuple[int, ...], levels: tuple[int, ...]) -> Subspace:
        if not rayset:
            return Subspace.full(self.rank)
        key = (rayset, tuple(levels[k] for k in rayset))
        cached = self._pieces.get(key)
        if cached is not None:
            return cached
        if any(levels[k] == 0 for k in rayset):
            result = Subspace.zero(self.rank)
        else:
            result = intersect(
                [self.sheaf.filtrations[k].space_at_level(levels[k]) for k in rayset]
            )
        self._pieces[key] = result
        return result

    def h0(self, levels: tuple[int, ...]) -> int:
        cached = self._h0.get(levels)
        if cached is None:
            cached = self.piece(tuple(range(self.variety.ray_count)), levels).dim
            self._h0[levels] = cached
        return cached

    def hn(self, levels: tuple[int, ...]) -> int:
        cached = self._hn.get(levels)
        if cached is None:
            spaces = [
                f.space_at_level(lv) for f, lv in zip(self.sheaf.filtrations, levels)
            ]
            cached = self.rank - subspace_sum(spaces).dim
            self._hn[levels] = cached
        return cached

    def chi(self, levels: tuple[int, ...]) -> int:
        cached = self._chi.get(levels)
        if cached is None:
            cached = sum(
                (-1) ** c.codim * self.piece(c.ray_indices, levels).dim
                for c in self._cones
            )
            self._chi[levels] = cached
        return cached

    def cech(self, levels: tuple[int, ...]) -> tuple[int, ...]:
        cached = self._cech.get(levels)
        if cached is None:
            cached = self._cech_complex(levels)
            self._cech[levels] = cached
        return cached

    def _cech_complex(self, levels: tuple[int, ...]) -> tuple[int, ...]:
        t = len(self._max_cones)
        # spaces of the complex, grouped by chain degree
        chain_spaces: list[list[Subspace]] = []
        for k in range(t):
            chain_spaces.append([self.piece(rs, levels) for rs in self._cover_subsets[k]])
        dims = [sum(s.dim for s in spaces) for spaces in chain_spaces]
        ranks = []
        for k in range(t - 1):
            ranks.append(self._differential_rank(k, chain_spaces))
        h = []
        for i in range(self.variety.dim + 1):
            dim_ci = dims[i] if i < t else 0
            rank_out = ranks[i] if i < t - 1 else 0
            rank_in = ranks[i - 1] if 0 < i <= t - 1 else 0
            h.append(dim_ci - rank_out - rank_in)
        return tuple(h)

    def _differential_rank(self, k: int, chain_spaces: list[list[Subspace]]) -> int:
        """Rank of d: C^k -> C^{k+1} with signed-inclusion blocks."""
        t = len(self._max_cones)
        sources = list(combinations(range(t), k + 1))
        targets = list(combinations(range(t), k + 2))
        src_spaces = chain_spaces[k]
        tgt_spaces = chain_spaces[k + 1]
        src_offset = [0]
        for s in src_spaces:
            src_offset.append(src_offset[-1] + s.dim)
        tgt_offset = [0]
        for s in tgt_spaces:
            tgt_offset.append(tgt_offset[-1] + s.dim)
        nrows = src_offset[-1]
        ncols = tgt_offset[-1]
        if nrows == 0 or ncols == 0:
            return 0
        src_index = {subset: i for i, subset in enumerate(sources)}
        # one row per source basis vector, expressed in the target coordinates
        rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        for j_tgt, target in enumerate(targets):
            tgt_space = tgt_spaces[j_tgt]
            if tgt_space.is_zero:
                continue
            pivots = tgt_space.pivots
            for pos in range(k + 2):
                source = target[:pos] + target[pos + 1:]
                i_src = src_index[source]
                src_space = src_spaces[i_src]
                if src_space.is_zero:
                    continue
                sign = -1 if pos % 2 else 1
                # src_space is contained in tgt_space; coordinates come off pivots
                for bi, vec in enumerate(src_space.basis):
                    row = rows[src_offset[i_src] + bi]
                    for ci, p in enumerate(pivots):
                        if vec[p]:
                            row[tgt_offset[j_tgt] + ci] += sign * vec[p]
        return matrix_rank(rows, ncols)


def h0_dim(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> int:
    """dim H^0 of the sheaf twisted by the class c (the Hilbert function value)."""
    return SheafCohomology(sheaf).h0_twisted(c)


def hn_dim(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> int:
    """dim H^dim of the twisted sheaf, summed from the per-character quotients."""
    return SheafCohomology(sheaf).hn_twisted(c)


def euler_characteristic(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> int:
    return SheafCohomology(sheaf).chi_twisted(c)


def cech_cohomology(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> tuple[int, ...]:
    """(h^0, ..., h^dim) of the twisted sheaf via the maximal-cone Cech cover."""
    return SheafCohomology(sheaf).cech_twisted(c)


def h1_surface(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> int:
    """h^1 on a surface from the identity h^1 = h^0 + h^2 - chi."""
    if sheaf.variety.dim != 2:
        raise UnsupportedVarietyError("h1_surface needs a 2-dimensional variety")
    return SheafCohomology(sheaf).h1_identity_twisted(c)
