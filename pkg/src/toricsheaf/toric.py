"""Fans, rays and class-group bookkeeping for the supported toric varieties.

Three families are supported, with a fixed ray ordering:

* projective space P^n: rays (rho0, rho1, ..., rhon) where rho0 = -e1-...-en
  and rhoi = ei; the class group is Z and every ray has degree 1.
* the split projective bundle V_s(a1,...,ar) over P^s, of dimension s+r,
  with rays (rho0, ..., rhos, eta0, ..., etar) where
  rho0 = -e1-...-es + a1 f1 + ... + ar fr, rhoi = ei, eta0 = -f1-...-fr,
  etaj = fj; the class group is Z^2 with basis ([D_rho0], [D_eta0]).
* the Hirzebruch surface H_a, which is exactly V_1(a).

Class elements are plain integer tuples of length ``class_rank``.  Divisor
representatives of a class are fixed: the whole class sits on rho0 (and eta0
for the bundle families), so twisting is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import ConfigError, UnsupportedVarietyError


@dataclass(frozen=True)
class Cone:
    """A cone of the fan, identified by the indices of its rays."""

    ray_indices: tuple[int, ...]
    codim: int

    def __post_init__(self):
        object.__setattr__(self, "ray_indices", tuple(sorted(self.ray_indices)))


@dataclass(frozen=True)
class ToricVariety:
    family: str                      # "projective" | "split_bundle"
    dim: int
    rays: tuple[tuple[int, ...], ...]
    ray_names: tuple[str, ...]
    class_rank: int
    degrees: tuple[tuple[int, ...], ...]   # class of D_ray, per ray
    split_s: int | None = None
    split_a: tuple[int, ...] | None = None

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    @property
    def is_split_bundle(self) -> bool:
        return self.family == "split_bundle"

    def pairing(self, m: Sequence[int], ray_index: int) -> int:
        """<m, n(rho)> for the indexed ray."""
        ray = self.rays[ray_index]
        if len(m) != self.dim:
            raise ValueError(f"character must have length {self.dim}")
        return sum(mi * ri for mi, ri in zip(m, ray))

    def character_embedding(self, m: Sequence[int]) -> tuple[int, ...]:
        """The tuple of pairings over all rays, i.e. the multidegree of chi^m."""
        return tuple(self.pairing(m, k) for k in range(self.ray_count))

    def cones(self) -> list[Cone]:
        """Every cone of the fan, including the zero cone."""
        if self.family == "projective":
            index_sets = [
                c
                for size in range(self.ray_count)
                for c in combinations(range(self.ray_count), size)
            ]
        else:
            s, r = self.split_s, len(self.split_a)
            rho_idx = list(range(s + 1))
            eta_idx = list(range(s + 1, s + r + 2))
            rho_parts = [
                c for size in range(s + 1) for c in combinations(rho_idx, size)
            ]
            eta_parts = [
                c for size in range(r + 1) for c in combinations(eta_idx, size)
            ]
            index_sets = [rp + ep for rp in rho_parts for ep in eta_parts]
        cones = [Cone(c, self.dim - len(c)) for c in index_sets]
        cones.sort(key=lambda c: (len(c.ray_indices), c.ray_indices))
        return cones

    def maximal_cones(self) -> list[Cone]:
        return [c for c in self.cones() if c.codim == 0]

    def check_class(self, c: Sequence[int]) -> tuple[int, ...]:
        c = tuple(int(x) for x in c)
        if len(c) != self.class_rank:
            raise ValueError(f"class element must have length {self.class_rank}")
        return c

    def twist_divisor(self, c: Sequence[int]) -> tuple[int, ...]:
        """Per-ray coefficients of the fixed divisor representative of c."""
        c = self.check_class(c)
        coeffs = [0] * self.ray_count
        coeffs[0] = c[0]
        if self.is_split_bundle:
            coeffs[self.split_s + 1] = c[1]
        return tuple(coeffs)

    def ray_index(self, name: str) -> int:
        try:
            return self.ray_names.index(name)
        except ValueError:
            raise ValueError(f"unknown ray name {name!r}; known: {self.ray_names}") from None


def projective_space(n: int) -> ToricVariety:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    rays = [tuple(-1 for _ in range(n))]
    rays += [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    names = tuple(f"rho{i}" for i in range(n + 1))
    degrees = tuple((1,) for _ in range(n + 1))
    return ToricVariety("projective", n, tuple(rays), names, 1, degrees)


def split_bundle(s: int, a_list: Sequence[int]) -> ToricVariety:
    a = tuple(int(x) for x in a_list)
    r = len(a)
    if s < 1 or r < 1:
        raise ValueError("split bundle needs s >= 1 and at least one twist weight")
    if any(x < 0 for x in a) or any(a[i] > a[i + 1] for i in range(r - 1)):
        raise ValueError("twist weights must satisfy 0 <= a1 <= ... <= ar")
    dim = s + r
    rays: list[tuple[int, ...]] = []
    rays.append(tuple([-1] * s + list(a)))
    for i in range(s):
        rays.append(tuple(1 if j == i else 0 for j in range(dim)))
    rays.append(tuple([0] * s + [-1] * r))
    for j in range(r):
        rays.append(tuple(1 if k == s + j else 0 for k in range(dim)))
    names = tuple(
        [f"rho{t}" for t in range(s + 1)] + [f"eta{u}" for u in range(r + 1)]
    )
    degrees = tuple(
        [(1, 0)] * (s + 1) + [(0, 1)] + [(-aj, 1) for aj in a]
    )
    return ToricVariety("split_bundle", dim, tuple(rays), names, 2, degrees,
                        split_s=s, split_a=a)


def hirzebruch(a: int) -> ToricVariety:
    """The Hirzebruch surface H_a; identical data to split_bundle(1, (a,))."""
    if a < 0:
        raise ValueError("Hirzebruch parameter must be non-negative")
    return split_bundle(1, (a,))


def split_data(variety: ToricVariety) -> tuple[int, tuple[int, ...]]:
    """(s, a) of a split-bundle variety; raises for the other families."""
    if not variety.is_split_bundle:
        raise UnsupportedVarietyError(
            f"operation requires a split-bundle variety, got {variety.family}"
        )
    return variety.split_s, variety.split_a


def build_variety(descriptor: dict) -> ToricVariety:
    """Build a variety from a configuration mapping.

    Accepted forms: {"family": "projective", "n": 2},
    {"family": "hirzebruch", "a": 3},
    {"family": "split_bundle", "s": 1, "a": [3]}.
    """
    try:
        family = descriptor["family"]
    except (KeyError, TypeError):
        raise ConfigError("variety descriptor needs a 'family' key") from None
    try:
        if family == "projective":
            return projective_space(int(descriptor["n"]))
        if family == "hirzebruch":
            return hirzebruch(int(descriptor["a"]))
        if family == "split_bundle":
            return split_bundle(int(descriptor["s"]), [int(x) for x in descriptor["a"]])
    except KeyError as exc:
        raise ConfigError(f"variety descriptor for {family!r} misses key {exc}") from None
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    raise ConfigError(f"unknown variety family {family!r}")
