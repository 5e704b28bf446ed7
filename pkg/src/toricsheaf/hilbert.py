"""Multigraded Hilbert functions, support bounds and Hilbert polynomials.

The Hilbert function of the twisted-section module is the sum, over all
multi-indices, of (number of integer points of the index's interval system)
times (dimension of the intersection of the indexed filtration spaces).
On split-bundle varieties the support is sandwiched between explicit
half-plane regions, and past an explicit corner the Hilbert function is a
polynomial, recovered here by exact interpolation and cross-validated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Sequence

from . import cohomology
from .errors import InternalConsistencyError
from .filtration import EquivariantReflexiveSheaf
from .polytopes import MultiIndex, omega_system, psi_points
from .rational_linalg import intersect, solve_square
from .toric import split_data


class RationalPolynomial:
    """Polynomial with exact rational coefficients in a fixed number of variables."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError("exponent tuples must be non-negative and match nvars")
            clean[exps] = clean.get(exps, Fraction(0)) + c
        self.coeffs = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, value, nvars: int = 1) -> "RationalPolynomial":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "RationalPolynomial":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_same_ring(self, other: "RationalPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial.constant(other, self.nvars)
        self._check_same_ring(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return RationalPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return RationalPolynomial(self.nvars, {e: c * f for e, c in self.coeffs.items()})
        self._check_same_ring(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return RationalPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = RationalPolynomial.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"need {self.nvars} coordinates")
        values = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.coeffs.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def coefficients_in(self, index: int) -> dict[int, "RationalPolynomial"]:
        """Decompose as sum_t coeff_t * x_index^t; coefficients drop that variable."""
        parts: dict[int, dict[tuple[int, ...], Fraction]] = {}
        for exps, c in self.coeffs.items():
            t = exps[index]
            reduced = exps[:index] + (0,) + exps[index + 1:]
            bucket = parts.setdefault(t, {})
            bucket[reduced] = bucket.get(reduced, Fraction(0)) + c
        return {t: RationalPolynomial(self.nvars, d) for t, d in parts.items()}

    def restrict(self, keep: Sequence[int]) -> "RationalPolynomial":
        """Project onto the kept variables; the others must be absent."""
        keep = list(keep)
        dropped = [i for i in range(self.nvars) if i not in keep]
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.coeffs.items():
            if any(exps[i] for i in dropped):
                raise ValueError("polynomial still involves a dropped variable")
            out[tuple(exps[i] for i in keep)] = c
        return RationalPolynomial(len(keep), out)

    def __repr__(self):
        return f"RationalPolynomial({self.nvars}, {self.coeffs})"


def compose_univariate(
    poly: RationalPolynomial, inner: RationalPolynomial
) -> RationalPolynomial:
    """Evaluate a univariate polynomial at another polynomial (Horner)."""
    if poly.nvars != 1:
        raise ValueError("outer polynomial must be univariate")
    degree = poly.degree_in(0)
    table = {e[0]: c for e, c in poly.coeffs.items()}
    result = RationalPolynomial.constant(table.get(degree, Fraction(0)), inner.nvars)
    for d in range(degree - 1, -1, -1):
        result = result * inner + RationalPolynomial.constant(table.get(d, Fraction(0)), inner.nvars)
    return result


def format_polynomial(poly: RationalPolynomial, names: Sequence[str]) -> str:
    """Degree-lexicographic rendering, earlier names first within a degree."""
    if len(names) != poly.nvars:
        raise ValueError("need one name per variable")
    if poly.is_zero():
        return "0"

    def key(exps):
        return (-sum(exps), tuple(-e for e in exps))

    terms = []
    for exps in sorted(poly.coeffs, key=key):
        c = poly.coeffs[exps]
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not body:
            term = str(c)
        elif c == 1:
            term = body
        elif c == -1:
            term = f"-{body}"
        else:
            term = f"{c}*{body}"
        terms.append(term)
    text = " + ".join(terms)
    return text.replace("+ -", "- ")


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2 (forced by the power-sum identity)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for k in range(n):
        total += comb(n + 1, k) * bernoulli_number(k)
    return -total / (n + 1)


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x) = sum_k C(n, k) B_{n-k} x^k."""
    if n < 0:
        raise ValueError("index must be non-negative")
    coeffs = {(k,): comb(n, k) * bernoulli_number(n - k) for k in range(n + 1)}
    return RationalPolynomial(1, coeffs)


def faulhaber_sum(t: int) -> RationalPolynomial:
    """The polynomial equal to sum_{k=0}^{q} k^t for all q >= 0 (0^0 = 1)."""
    if t < 0:
        raise ValueError("exponent must be non-negative")
    b = bernoulli_polynomial(t + 1)
    q_plus_1 = RationalPolynomial(1, {(0,): Fraction(1), (1,): Fraction(1)})
    shifted = compose_univariate(b, q_plus_1)
    constant = b.evaluate((1,))
    poly = (shifted - constant) * Fraction(1, t + 1)
    if t == 0:
        poly = poly + 1
    return poly


def simplex_sum(poly: RationalPolynomial, k: int) -> RationalPolynomial:
    """Closed form of the sum of P(q, e_1..e_k) over e_i >= 0, e_1+...+e_k <= q.

    Variables are ordered (q, e_1, ..., e_k, spectators...).  Innermost sums
    are replaced by power-sum polynomials evaluated at the remaining budget,
    eliminating one e-variable at a time.
    """
    if k < 1:
        raise ValueError("need at least one summation variable")
    if poly.nvars < k + 1:
        raise ValueError("polynomial must contain q and the summation variables")
    n = poly.nvars
    for i in range(k, 0, -1):
        budget = RationalPolynomial.variable(0, n)
        for j in range(1, i):
            budget = budget - RationalPolynomial.variable(j, n)
        parts = poly.coefficients_in(i)
        acc = RationalPolynomial(n)
        for t, coeff in parts.items():
            acc = acc + coeff * compose_univariate(faulhaber_sum(t), budget)
        poly = acc
    return poly.restrict([0] + list(range(k + 1, n)))


def _valid_levels(filtration, rank: int) -> list[int]:
    """Indices whose jump interval is nonempty."""
    return [
        j for j in range(1, rank + 1)
        if j == rank or filtration.jumps[j - 1] < filtration.jumps[j]
    ]


@lru_cache(maxsize=64)
def _index_table(sheaf: EquivariantReflexiveSheaf) -> tuple[tuple[MultiIndex, int], ...]:
    """Pruned multi-indices with positive intersection dimension."""
    level_lists = [_valid_levels(f, sheaf.rank) for f in sheaf.filtrations]
    table = []
    for idx in product(*level_lists):
        d = intersect([f.spaces[j - 1] for f, j in zip(sheaf.filtrations, idx)]).dim
        if d:
            table.append((idx, d))
    return tuple(table)


def intersection_dim(sheaf: EquivariantReflexiveSheaf, idx: Sequence[int]) -> int:
    """Dimension of the intersection of the indexed filtration spaces."""
    idx = tuple(int(i) for i in idx)
    if len(idx) != sheaf.variety.ray_count or any(
        i < 1 or i > sheaf.rank for i in idx
    ):
        raise ValueError("multi-index must pick one level in 1..rank per ray")
    return intersect([f.spaces[j - 1] for f, j in zip(sheaf.filtrations, idx)]).dim


def hilbert_function(sheaf: EquivariantReflexiveSheaf, c: Sequence[int]) -> int:
    """Value of the Hilbert function of the section module at the class c."""
    c = sheaf.variety.check_class(c)
    total = 0
    for idx, d in _index_table(sheaf):
        total += len(psi_points(omega_system(sheaf, idx, c))) * d
    return total


@dataclass(frozen=True)
class HalfPlane:
    """The set of (p, q) with p_coeff * p + q_coeff * q >= bound."""

    p_coeff: int
    q_coeff: int
    bound: int

    def contains(self, p: int, q: int) -> bool:
        return self.p_coeff * p + self.q_coeff * q >= self.bound

    def __str__(self):
        terms = []
        if self.p_coeff:
            terms.append("p" if self.p_coeff == 1 else f"{self.p_coeff}*p")
        if self.q_coeff:
            terms.append("q" if self.q_coeff == 1 else f"{self.q_coeff}*q")
        left = " + ".join(terms) if terms else "0"
        return f"{left} >= {self.bound}"


@dataclass(frozen=True)
class SupportRegion:
    """Intersection of two half-planes in the (p, q) class plane."""

    kind: str            # "L", "I", "J" or "omega"
    index: int | None
    planes: tuple[HalfPlane, HalfPlane]

    def contains(self, p: int, q: int) -> bool:
        return all(pl.contains(p, q) for pl in self.planes)

    def __str__(self):
        label = self.kind if self.index is None else f"{self.kind}({self.index})"
        return f"{label}: " + " and ".join(str(pl) for pl in self.planes)


def _first_and_top_jumps(sheaf):
    i_first = [f.jumps[0] for f in sheaf.rho_filtrations()]
    i_top = [f.jumps[-1] for f in sheaf.rho_filtrations()]
    j_first = [f.jumps[0] for f in sheaf.eta_filtrations()]
    j_top = [f.jumps[-1] for f in sheaf.eta_filtrations()]
    return i_first, i_top, j_first, j_top


def _bound_region(a, i_sel, j_sel, kind, index) -> SupportRegion:
    ar = a[-1]
    q_bound = sum(j_sel)
    p_bound = sum(i_sel) + ar * j_sel[0] + sum(
        (ar - au) * ju for au, ju in zip(a, j_sel[1:])
    )
    return SupportRegion(kind, index, (HalfPlane(0, 1, q_bound), HalfPlane(1, ar, p_bound)))


def lower_support_region(sheaf: EquivariantReflexiveSheaf) -> SupportRegion:
    """The half-plane region containing the whole support (all first jumps)."""
    _, a = split_data(sheaf.variety)
    i_first, _, j_first, _ = _first_and_top_jumps(sheaf)
    return _bound_region(a, i_first, j_first, "L", None)


def upper_support_regions(sheaf: EquivariantReflexiveSheaf) -> list[SupportRegion]:
    """Regions certain to carry sections: top jumps with one first jump swapped in."""
    s, a = split_data(sheaf.variety)
    i_first, i_top, j_first, j_top = _first_and_top_jumps(sheaf)
    regions = []
    for k in range(s + 1):
        i_sel = list(i_top)
        i_sel[k] = i_first[k]
        regions.append(_bound_region(a, i_sel, j_top, "I", k))
    for k in range(len(a) + 1):
        j_sel = list(j_top)
        j_sel[k] = j_first[k]
        regions.append(_bound_region(a, i_top, j_sel, "J", k))
    return regions


def in_support_lower_bound(sheaf: EquivariantReflexiveSheaf, p: int, q: int) -> bool:
    return lower_support_region(sheaf).contains(p, q)


def in_support_upper_bound(sheaf: EquivariantReflexiveSheaf, p: int, q: int) -> bool:
    return any(r.contains(p, q) for r in upper_support_regions(sheaf))


def regularity_thresholds(sheaf: EquivariantReflexiveSheaf) -> tuple[int, int]:
    """Corner (P0, Q0): the Hilbert function is a polynomial on p>=P0, q>=Q0."""
    _, a = split_data(sheaf.variety)
    _, i_top, j_first, j_top = _first_and_top_jumps(sheaf)
    p0 = sum(i_top) - sum(au * jf for au, jf in zip(a, j_first[1:])) - 1
    q0 = sum(j_top) - 1
    return p0, q0


def regularity_region(sheaf: EquivariantReflexiveSheaf) -> SupportRegion:
    p0, q0 = regularity_thresholds(sheaf)
    return SupportRegion("omega", None, (HalfPlane(1, 0, p0), HalfPlane(0, 1, q0)))


def hilbert_polynomial(sheaf: EquivariantReflexiveSheaf) -> RationalPolynomial:
    """The bivariate polynomial matching the Hilbert function on the corner region.

    Interpolated exactly on a triangular grid at the region's corner, then
    validated on the rest of the square grid, on extra points further out,
    and against the Euler-characteristic path.  Any mismatch is a bug, never
    a property of the input, hence the internal-consistency error.
    """
    s, a = split_data(sheaf.variety)
    d = s + len(a)
    p0, q0 = regularity_thresholds(sheaf)
    grid_pts = [(p0 + i, q0 + j) for i in range(d + 1) for j in range(d + 1)]
    fit_pts = [(p, q) for (p, q) in grid_pts if (p - p0) + (q - q0) <= d]
    monomials = [
        (alpha, beta)
        for alpha in range(d + 1)
        for beta in range(d + 1 - alpha)
    ]
    rows = [
        [Fraction(p) ** alpha * Fraction(q) ** beta for alpha, beta in monomials]
        for (p, q) in fit_pts
    ]
    rhs = [hilbert_function(sheaf, (p, q)) for (p, q) in fit_pts]
    solution = solve_square(rows, rhs)
    if solution is None:
        raise InternalConsistencyError("interpolation grid was not unisolvent")
    poly = RationalPolynomial(
        2, {m: c for m, c in zip(monomials, solution)}
    )
    check_pts = [pt for pt in grid_pts if pt not in fit_pts]
    check_pts += [(p0 + d + t, q0 + d + t) for t in range(1, d + 2)]
    check_pts += [(p0 + d + t, q0) for t in range(1, d + 1)]
    check_pts += [(p0, q0 + d + t) for t in range(1, d + 1)]
    for (p, q) in check_pts:
        if poly.evaluate((p, q)) != hilbert_function(sheaf, (p, q)):
            raise InternalConsistencyError(
                f"interpolated polynomial disagrees with the Hilbert function at {(p, q)}"
            )
    for pt in [(p0, q0), (p0 + 1, q0 + d), (p0 + d, q0 + 1)]:
        if poly.evaluate(pt) != cohomology.euler_characteristic(sheaf, pt):
            raise InternalConsistencyError(
                f"interpolated polynomial disagrees with the Euler characteristic at {pt}"
            )
    return poly


def rank1_hilbert_polynomial(sheaf: EquivariantReflexiveSheaf) -> RationalPolynomial:
    """Closed-form Hilbert polynomial of a rank-1 sheaf, assembled from the
    power-sum machinery rather than interpolation; an independent cross-check."""
    if sheaf.rank != 1:
        raise ValueError("closed form implemented for rank 1 only")
    s, a = split_data(sheaf.variety)
    r = len(a)
    i_jumps = [f.jumps[0] for f in sheaf.rho_filtrations()]
    j_jumps = [f.jumps[0] for f in sheaf.eta_filtrations()]
    # variables (Q, e_1..e_r, p): Q the eta budget, e the shifted eta slice
    n = r + 2
    p_var = RationalPolynomial.variable(n - 1, n)
    t_poly = p_var - sum(i_jumps) + sum(au * ju for au, ju in zip(a, j_jumps[1:]))
    for u in range(1, r + 1):
        t_poly = t_poly + a[u - 1] * RationalPolynomial.variable(u, n)
    inner = RationalPolynomial.constant(Fraction(1, factorial(s)), n)
    for step in range(1, s + 1):
        inner = inner * (t_poly + step)
    summed = simplex_sum(inner, r)          # variables (Q, p)
    p_final = RationalPolynomial.variable(0, 2)
    q_shifted = RationalPolynomial.variable(1, 2) - sum(j_jumps)
    result = RationalPolynomial(2)
    for (e_q, e_p), c in summed.coeffs.items():
        result = result + c * (q_shifted ** e_q) * (p_final ** e_p)
    return result
