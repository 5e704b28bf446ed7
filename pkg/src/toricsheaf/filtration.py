"""Klyachko filtrations and equivariant reflexive sheaves.

A sheaf of rank l on one of the supported varieties is given by one
increasing filtration of Q^l per ray: integer jump positions i_1 <= ... <= i_l
together with subspaces E_1 <= ... <= E_l = Q^l, subject to
i_j = i_{j+1} exactly when E_j = E_{j+1}.  The filtration evaluates to 0 below
i_1, to E_j on [i_j, i_{j+1}) and to the full space from i_l on.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .errors import UnsupportedVarietyError
from .rational_linalg import Subspace
from .toric import ToricVariety


@dataclass(frozen=True)
class KlyachkoFiltration:
    jumps: tuple[int, ...]
    spaces: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(int(j) for j in self.jumps))
        object.__setattr__(self, "spaces", tuple(self.spaces))
        if len(self.jumps) != len(self.spaces):
            raise ValueError("need one subspace per jump")
        if not self.jumps:
            raise ValueError("a filtration needs at least one jump")
        ambient = self.spaces[0].ambient_dim
        if any(s.ambient_dim != ambient for s in self.spaces):
            raise ValueError("all filtration spaces must share one ambient space")

    @property
    def rank(self) -> int:
        return len(self.jumps)

    @property
    def ambient_dim(self) -> int:
        return self.spaces[0].ambient_dim

    def level(self, i: int) -> int:
        """Number of jumps <= i; 0 means the zero subspace."""
        return bisect_right(self.jumps, i)

    def space_at_level(self, level: int) -> Subspace:
        if level == 0:
            return Subspace.zero(self.ambient_dim)
        return self.spaces[level - 1]

    def evaluate(self, i: int) -> Subspace:
        """The filtration subspace at position i."""
        return self.space_at_level(self.level(i))

    def shifted(self, offset: int) -> "KlyachkoFiltration":
        """Same spaces with every jump moved by -offset (twist by a_ray = offset)."""
        if offset == 0:
            return self
        return KlyachkoFiltration(tuple(j - offset for j in self.jumps), self.spaces)


@dataclass(frozen=True)
class EquivariantReflexiveSheaf:
    variety: ToricVariety
    rank: int
    filtrations: tuple[KlyachkoFiltration, ...]

    def __post_init__(self):
        object.__setattr__(self, "filtrations", tuple(self.filtrations))
        if len(self.filtrations) != self.variety.ray_count:
            raise ValueError("need exactly one filtration per ray")
        for f in self.filtrations:
            if f.rank != self.rank or f.ambient_dim != self.rank:
                raise ValueError("filtration length and ambient must equal the rank")

    def rho_filtrations(self) -> tuple[KlyachkoFiltration, ...]:
        s = self._split_s()
        return self.filtrations[: s + 1]

    def eta_filtrations(self) -> tuple[KlyachkoFiltration, ...]:
        s = self._split_s()
        return self.filtrations[s + 1:]

    def _split_s(self) -> int:
        if not self.variety.is_split_bundle:
            raise UnsupportedVarietyError(
                f"operation requires a split-bundle variety, got {self.variety.family}"
            )
        return self.variety.split_s


def line_bundle(variety: ToricVariety, divisor_coeffs: Sequence[int]) -> EquivariantReflexiveSheaf:
    """O(D) for D = sum a_ray D_ray: rank 1, jump -a_ray, full space, per ray."""
    coeffs = [int(a) for a in divisor_coeffs]
    if len(coeffs) != variety.ray_count:
        raise ValueError("need one divisor coefficient per ray")
    full = Subspace.full(1)
    filts = tuple(KlyachkoFiltration((-a,), (full,)) for a in coeffs)
    return EquivariantReflexiveSheaf(variety, 1, filts)


def structure_sheaf(variety: ToricVariety) -> EquivariantReflexiveSheaf:
    return line_bundle(variety, [0] * variety.ray_count)


def twist(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> EquivariantReflexiveSheaf:
    """Twist by a class element, using the fixed divisor representative."""
    coeffs = sheaf.variety.twist_divisor(c)
    filts = tuple(f.shifted(a) for f, a in zip(sheaf.filtrations, coeffs))
    return EquivariantReflexiveSheaf(sheaf.variety, sheaf.rank, filts)


def delta_normalization(
    sheaf: EquivariantReflexiveSheaf,
) -> tuple[tuple[int, int], EquivariantReflexiveSheaf]:
    """Normalizing twist for a split-bundle sheaf.

    Returns the class delta of the divisor sum(top_jump(ray) * D_ray) together
    with the twist of the sheaf by that divisor, whose top jumps all vanish.
    Twisting by any other representative of delta yields the same sheaf up to
    re-indexing the characters, so all class-graded dimensions agree.
    """
    v = sheaf.variety
    s = sheaf._split_s()
    a = v.split_a
    i_top = [f.jumps[-1] for f in sheaf.rho_filtrations()]
    j_top = [f.jumps[-1] for f in sheaf.eta_filtrations()]
    delta = (
        sum(i_top) - sum(au * ju for au, ju in zip(a, j_top[1:])),
        sum(j_top),
    )
    filts = tuple(f.shifted(f.jumps[-1]) for f in sheaf.filtrations)
    return delta, EquivariantReflexiveSheaf(v, sheaf.rank, filts)


@dataclass(frozen=True)
class PresentationDegrees:
    """Multidegrees of a presentation: generators mu^j, relations m^i."""

    generator_degrees: tuple[tuple[int, ...], ...]
    relation_degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "generator_degrees", tuple(tuple(g) for g in self.generator_degrees))
        object.__setattr__(self, "relation_degrees", tuple(tuple(m) for m in self.relation_degrees))


def jump_bounds_from_presentation(pres: PresentationDegrees) -> list[tuple[int, int]]:
    """Per-ray interval [lo, hi] containing all jumps of any such quotient.

    lo = -max over generator degrees; hi = -min over relation degrees, falling
    back to -min over generator degrees when there are no relations.
    """
    if not pres.generator_degrees:
        raise ValueError("presentation needs at least one generator degree")
    nrays = len(pres.generator_degrees[0])
    if any(len(g) != nrays for g in pres.generator_degrees) or any(
        len(m) != nrays for m in pres.relation_degrees
    ):
        raise ValueError("all degree vectors must have the same length")
    bounds = []
    for k in range(nrays):
        lo = -max(g[k] for g in pres.generator_degrees)
        if pres.relation_degrees:
            hi = -min(m[k] for m in pres.relation_degrees)
        else:
            hi = -min(g[k] for g in pres.generator_degrees)
        bounds.append((lo, hi))
    return bounds


def validate(sheaf: EquivariantReflexiveSheaf) -> list[str]:
    """Check every filtration invariant; returns diagnostics, empty when valid."""
    problems: list[str] = []
    for k, f in enumerate(sheaf.filtrations):
        name = sheaf.variety.ray_names[k]
        if any(f.jumps[i] > f.jumps[i + 1] for i in range(f.rank - 1)):
            problems.append(f"ray {name}: jumps not weakly increasing: {f.jumps}")
        if not f.spaces[-1].is_full:
            problems.append(f"ray {name}: last space is not the full ambient space")
        for i in range(f.rank - 1):
            lo, hi = f.spaces[i], f.spaces[i + 1]
            if not hi.contains_subspace(lo):
                problems.append(f"ray {name}: space {i + 1} not contained in space {i + 2}")
            equal_jumps = f.jumps[i] == f.jumps[i + 1]
            equal_spaces = lo == hi
            if equal_jumps != equal_spaces:
                problems.append(
                    f"ray {name}: jump/space coincidence violated at position {i + 1}: "
                    f"jumps {'equal' if equal_jumps else 'differ'}, "
                    f"spaces {'equal' if equal_spaces else 'differ'}"
                )
    return problems
