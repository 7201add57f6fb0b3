"""Dominance order, degrees/codegrees, normalization, decomposition.

For a seed t, an exponent vector g' is dominated by g when g' = g + B n
for some nonnegative integer vector n on the unfrozen vertices. Since B
has full column rank, membership is decided by solving for the unique
rational candidate n and checking integrality and sign.

The degree (codegree) of a torus element is the unique dominance-maximal
(minimal) exponent of its support, when there is one. An element is
pointed (copointed) when the extremal coefficient is 1; normalization
divides by a unit extremal coefficient.

decompose() peels a pointed element against a degree-keyed set of
pointed elements, greedily eliminating a maximal support degree per
step; the mirror decompose_co() works from the bottom against a
codegree-keyed set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import lcm

from . import _linalg
from .qtorus import QTElem, VCoeff, vec_add, vec_sub


class NonUnitLeading(ArithmeticError):
    """Normalization needs the extremal coefficient to be +-v**a."""


DECOMPOSE_ITERATION_CAP = 10 ** 5


@lru_cache(maxsize=None)
def _dominance_data(seed):
    """Per-seed exact helpers for dominance tests.

    Returns (w, p_num, p_den):
      w      integer functional with w . (B n) < 0 for every n >= 0, n != 0,
             so the degree of a pointed element strictly maximizes w;
      p_num / p_den   integer left inverse of B: n = p_num (g'-g) / p_den.
    """
    bt = _linalg.transpose(seed.B)
    nuf = len(seed.unfrozen)
    w_frac = _linalg.solve_any(bt, (-1,) * nuf)
    gram_inv = _linalg.invert(_linalg.mat_mul(bt, seed.B))
    if w_frac is None or gram_inv is None:
        raise ValueError("exchange matrix lacks full column rank")
    den = lcm(*(f.denominator for f in w_frac))
    w = tuple(int(f * den) for f in w_frac)
    pinv = _linalg.mat_mul(gram_inv, bt)
    p_den = lcm(*(f.denominator for row in pinv for f in row))
    p_num = tuple(tuple(int(f * p_den) for f in row) for row in pinv)
    return w, p_num, p_den


def dominance_n(seed, gp, g):
    """The n >= 0 with gp = g + B n, or None when gp is not dominated by g."""
    diff = vec_sub(gp, g)
    _, p_num, p_den = _dominance_data(seed)
    num = _linalg.mat_vec(p_num, diff)
    if any(x % p_den for x in num):
        return None
    n = tuple(x // p_den for x in num)
    if any(x < 0 for x in n):
        return None
    if _linalg.mat_vec(seed.B, n) != diff:
        return None
    return n


def dominance_leq(seed, gp, g):
    """True iff gp is dominated by g in the seed's dominance order."""
    return dominance_n(seed, gp, g) is not None


def _w_value(seed, m):
    w, _, _ = _dominance_data(seed)
    return sum(a * b for a, b in zip(w, m))


def degree(seed, z):
    """Unique dominance-maximal support exponent, or None if not unique."""
    return _extremal(seed, z, top=True)


def codegree(seed, z):
    """Unique dominance-minimal support exponent, or None if not unique."""
    return _extremal(seed, z, top=False)


def _extremal(seed, z, top):
    if not z:
        raise ValueError("zero element has no degree")
    supp = list(z.terms)
    vals = [_w_value(seed, m) for m in supp]
    best = max(vals) if top else min(vals)
    cands = [m for m, v in zip(supp, vals) if v == best]
    if len(cands) > 1:
        return None
    g = cands[0]
    for m in supp:
        if m == g:
            continue
        ok = dominance_leq(seed, m, g) if top else dominance_leq(seed, g, m)
        if not ok:
            return None
    return g


@dataclass(frozen=True)
class Bidegree:
    deg: tuple
    codeg: tuple


def bidegree(seed, z):
    """Bidegree (degree, codegree) or None when either end is ambiguous."""
    d = degree(seed, z)
    c = codegree(seed, z)
    if d is None or c is None:
        return None
    return Bidegree(d, c)


def is_pointed(seed, z, g=None):
    d = degree(seed, z)
    if d is None or (g is not None and d != g):
        return False
    return z.terms[d].is_one()


def is_copointed(seed, z, eta=None):
    c = codegree(seed, z)
    if c is None or (eta is not None and c != eta):
        return False
    return z.terms[c].is_one()


def normalize_deg(seed, z):
    """Divide by the leading coefficient, which must be a unit +-v**a."""
    g = degree(seed, z)
    if g is None:
        raise NonUnitLeading("element has no degree to normalize at")
    c = z.terms[g]
    if not c.is_unit():
        raise NonUnitLeading(f"leading coefficient {c} is not a unit")
    return z.scale(c.unit_inverse())


def normalize_codeg(seed, z):
    """Divide by the trailing coefficient, which must be a unit +-v**a."""
    eta = codegree(seed, z)
    if eta is None:
        raise NonUnitLeading("element has no codegree to normalize at")
    c = z.terms[eta]
    if not c.is_unit():
        raise NonUnitLeading(f"trailing coefficient {c} is not a unit")
    return z.scale(c.unit_inverse())


def interval(seed, lo, hi):
    """All g with lo <= g <= hi in dominance order, sorted lexicographically.

    Finite: the n-coordinates of members fill the box [0, n_total].
    """
    n_tot = dominance_n(seed, lo, hi)
    if n_tot is None:
        return []
    out = []
    for nvec in product(*(range(c + 1) for c in n_tot)):
        out.append(vec_add(hi, _linalg.mat_vec(seed.B, nvec)))
    return sorted(set(out))


@dataclass(frozen=True)
class PointedSet:
    """Finitely materialized degree-keyed (or codegree-keyed) elements."""

    elements: dict

    def get(self, g):
        return self.elements.get(g)


@dataclass
class Decomposition:
    terms: list = field(default_factory=list)
    status: str = "exact"
    reason: str | None = None

    @property
    def is_exact(self):
        return self.status == "exact"

    def coefficient(self, g):
        for key, c in self.terms:
            if key == g:
                return c
        return VCoeff.zero()


def _maximal_support(seed, supp, top):
    """Dominance-maximal (or minimal) elements of a finite exponent set."""
    out = []
    for m in supp:
        beaten = False
        for mp in supp:
            if mp == m:
                continue
            if (top and dominance_leq(seed, m, mp)) or (not top and dominance_leq(seed, mp, m)):
                beaten = True
                break
        if not beaten:
            out.append(m)
    return out


def decompose(seed, z, basis: PointedSet, window: Bidegree, tie_break=None):
    """Unitriangular expansion of z over a degree-keyed pointed set.

    Greedy elimination from the top: each step removes one maximal
    support degree, which must carry a basis element and stay inside
    [window.codeg, window.deg]. Ties between incomparable maxima break
    to the lexicographically smallest (tie_break overrides the choice;
    the resulting term multiset is order-independent). Failures are
    reported in the status, never raised.
    """
    return _decompose(seed, z, basis, window, co=False, tie_break=tie_break)


def decompose_co(seed, z, basis: PointedSet, window: Bidegree, tie_break=None):
    """Mirror of decompose: eliminates minimal support codegrees."""
    return _decompose(seed, z, basis, window, co=True, tie_break=tie_break)


def _decompose(seed, z, basis, window, co, tie_break=None):
    terms = []
    r = z
    for _ in range(DECOMPOSE_ITERATION_CAP):
        if not r:
            return Decomposition(terms=terms, status="exact")
        pivots = _maximal_support(seed, list(r.terms), top=not co)
        g = min(pivots) if tie_break is None else tie_break(sorted(pivots))
        inside = dominance_leq(seed, window.codeg, g) and dominance_leq(seed, g, window.deg)
        if not inside:
            return Decomposition(
                terms=terms, status="indeterminate",
                reason=f"support degree {g} escapes the window",
            )
        elem = basis.get(g)
        if elem is None:
            return Decomposition(
                terms=terms, status="indeterminate",
                reason=f"no basis element keyed at {g}",
            )
        c = r.terms[g]
        terms.append((g, c))
        r = r - elem.scale(c)
    return Decomposition(terms=terms, status="indeterminate", reason="iteration cap hit")


def is_m_unitriangular(decomp: Decomposition, pivot):
    """Pivot coefficient 1 and every other coefficient with v-exponents <= -1."""
    if not decomp.is_exact:
        return False
    seen_pivot = False
    for g, c in decomp.terms:
        if g == pivot:
            if not c.is_one():
                return False
            seen_pivot = True
        elif not c.in_m():
            return False
    return seen_pivot


def recompose(decomp: Decomposition, basis: PointedSet, dim):
    """Sum coefficient * basis element; the oracle inverse of decompose."""
    acc = QTElem.zero(dim)
    for g, c in decomp.terms:
        acc = acc + basis.get(g).scale(c)
    return acc
