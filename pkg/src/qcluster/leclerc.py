"""Cluster-monomial candidate basis and product-structure verification.

The candidate basis of a finite-type graph is the set of normalized
localized cluster monomials, keyed by degree (and, mirrored, by
codegree). Eager enumeration up to an exponent cap supplies the sweep
lists; decompositions additionally resolve basis elements on demand for
any degree inside a finite dominance window, by inverting the linear
map that sends a node's exponent vectors to degrees. Two distinct
elements sharing a key are recorded as conflicts, never merged.

verify_pair multiplies a localized cluster monomial R (working in the
torus of R's home node, where R is a plain monomial) against a basis
element V and classifies the product: either it lands in v^Z times the
basis, or it decomposes with a single term at the top degree, a single
term at the bottom codegree, and middle coefficients confined to
v-exponent window [h+1, s-1], where v^s and v^h are the extremal
coefficients. Each claim is checked independently and recorded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import _linalg, pointed
from .expansion import ExchangeGraph, cluster_monomial
from .pointed import Bidegree, PointedSet
from .qtorus import QTElem, VCoeff, twisted_mul, unit_vec, vec_add


class DuplicateDegreeConflict(RuntimeError):
    """Two distinct candidate elements claimed the same (co)degree key."""


_MISS = object()


class CandidateBasis:
    """Normalized localized cluster monomials of a closed exchange graph."""

    def __init__(self, graph: ExchangeGraph, unfrozen_cap=3, frozen_window=0):
        if graph.truncated:
            raise ValueError("exchange graph is truncated; basis needs a closed graph")
        self.graph = graph
        self.unfrozen_cap = unfrozen_cap
        self.frozen_window = frozen_window
        self.by_degree: dict = {}
        self.by_codegree: dict = {}
        self.provenance: dict = {}
        self.conflicts: list = []
        self._deg_inv: dict = {}
        self._codeg_inv: dict = {}
        self._resolved: dict = {}
        self._resolved_co: dict = {}
        self._enumerate()

    def _exponents(self, seed):
        ranges = []
        for i in range(seed.n):
            if i in seed.unfrozen:
                ranges.append(range(self.unfrozen_cap + 1))
            else:
                ranges.append(range(-self.frozen_window, self.frozen_window + 1))
        return product(*ranges)

    def _enumerate(self):
        ref = self.graph.reference
        for key in self.graph.order:
            ts = self.graph.nodes[key]
            for m in self._exponents(ts.seed):
                elem = cluster_monomial(ts, m)
                g = pointed.degree(ref, elem)
                eta = pointed.codegree(ref, elem)
                if g is None or eta is None:
                    raise RuntimeError(f"cluster monomial {m} of {key} not bipointed")
                prior = self.by_degree.get(g)
                if prior is None:
                    self.by_degree[g] = elem
                    self.provenance[g] = (key, m)
                elif prior != elem:
                    self.conflicts.append(("degree", g, self.provenance[g], (key, m)))
                    continue
                prior_co = self.by_codegree.get(eta)
                if prior_co is None:
                    self.by_codegree[eta] = elem
                elif prior_co != elem:
                    self.conflicts.append(("codegree", eta, None, (key, m)))

    def degree_keys(self):
        return sorted(self.by_degree)

    def pointed_set(self):
        return PointedSet(dict(self.by_degree))

    def copointed_set(self):
        return PointedSet(dict(self.by_codegree))

    # -- on-demand resolution of elements by (co)degree in any torus --

    def _inverse_map(self, cache, home_key, torus_key, extremal):
        hit = cache.get((home_key, torus_key))
        if hit is not None:
            return hit
        torus_seed = self.graph.nodes[torus_key].seed
        cols = [extremal(torus_seed, z) for z in self.graph.vars_in(home_key, torus_key)]
        n = torus_seed.n
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        inv = _linalg.invert(mat)
        cache[(home_key, torus_key)] = inv
        return inv

    def _resolve(self, torus_key, g, co):
        cache = self._resolved_co if co else self._resolved
        hit = cache.get((torus_key, g))
        if hit is not None:
            return None if hit is _MISS else hit
        extremal = pointed.codegree if co else pointed.degree
        inv_cache = self._codeg_inv if co else self._deg_inv
        torus_seed = self.graph.nodes[torus_key].seed
        found = None
        for home_key in self.graph.order:
            inv = self._inverse_map(inv_cache, home_key, torus_key, extremal)
            if inv is None:
                continue
            m = [sum(row[j] * g[j] for j in range(len(g))) for row in inv]
            if any(x.denominator != 1 for x in m):
                continue
            m = tuple(int(x) for x in m)
            home_seed = self.graph.nodes[home_key].seed
            if any(m[i] < 0 for i in home_seed.unfrozen):
                continue
            elem = self.graph.monomial_in(home_key, m, torus_key)
            if extremal(torus_seed, elem) != g:
                continue
            if found is None:
                found = ((home_key, m), elem)
            elif found[1] != elem:
                self.conflicts.append(
                    ("codegree" if co else "degree", g, found[0], (home_key, m))
                )
        cache[(torus_key, g)] = _MISS if found is None else found
        return found

    def element_at_degree(self, torus_key, g):
        hit = self._resolve(torus_key, tuple(g), co=False)
        return None if hit is None else hit[1]

    def element_at_codegree(self, torus_key, eta):
        hit = self._resolve(torus_key, tuple(eta), co=True)
        return None if hit is None else hit[1]

    def window_set(self, torus_key, window: Bidegree, co=False) -> PointedSet:
        """Every resolvable element keyed inside the dominance window."""
        torus_seed = self.graph.nodes[torus_key].seed
        elems = {}
        for g in pointed.interval(torus_seed, window.codeg, window.deg):
            got = self.element_at_codegree(torus_key, g) if co else self.element_at_degree(torus_key, g)
            if got is not None:
                elems[g] = got
        return PointedSet(elems)


@dataclass
class TriangularReport:
    passes: int = 0
    failures: list = field(default_factory=list)
    indeterminates: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures and not self.indeterminates


def check_degree_triangular(basis: CandidateBasis, t_key) -> TriangularReport:
    """Multiply every variable of the working seed onto every basis element
    from the left and test the normalized product for unitriangularity with
    coefficients below 1 in v-degree."""
    return _check_triangular(basis, t_key, co=False)


def check_codegree_triangular(basis: CandidateBasis, t_key) -> TriangularReport:
    """Mirror of check_degree_triangular, from the right and from the bottom."""
    return _check_triangular(basis, t_key, co=True)


def _check_triangular(basis, t_key, co):
    graph = basis.graph
    t_seed = graph.nodes[t_key].seed
    lam = t_seed.Lambda
    report = TriangularReport()
    for g_ref in basis.degree_keys():
        home, m = basis.provenance[g_ref]
        elem = graph.monomial_in(home, m, t_key)
        bid = pointed.bidegree(t_seed, elem)
        for i in range(t_seed.n):
            xi = QTElem.monomial(unit_vec(t_seed.n, i))
            label = (tuple(g_ref), i)
            if co:
                prod = twisted_mul(elem, xi, lam)
                prod = pointed.normalize_codeg(t_seed, prod)
                pivot = vec_add(bid.codeg, unit_vec(t_seed.n, i))
            else:
                prod = twisted_mul(xi, elem, lam)
                prod = pointed.normalize_deg(t_seed, prod)
                pivot = vec_add(bid.deg, unit_vec(t_seed.n, i))
            window = Bidegree(
                deg=vec_add(bid.deg, unit_vec(t_seed.n, i)),
                codeg=vec_add(bid.codeg, unit_vec(t_seed.n, i)),
            )
            pset = basis.window_set(t_key, window, co=co)
            if co:
                decomp = pointed.decompose_co(t_seed, prod, pset, window)
            else:
                decomp = pointed.decompose(t_seed, prod, pset, window)
            if not decomp.is_exact:
                report.indeterminates.append((label, decomp.reason))
            elif pointed.is_m_unitriangular(decomp, pivot):
                report.passes += 1
            else:
                report.failures.append((label, decomp.terms))
    return report


@dataclass
class LeclercVerdict:
    case: str
    r_spec: tuple
    v_degree: tuple
    reason: str | None = None
    s: int | None = None
    h: int | None = None
    S: tuple | None = None
    H: tuple | None = None
    middle: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        if self.case == "indeterminate":
            return False
        return all(self.checks.values())


def verify_pair(basis: CandidateBasis, r_home, r_m, v_home, v_m) -> LeclercVerdict:
    """Classify the twisted product of a localized cluster monomial with a
    basis element, working in the torus of R's home node."""
    graph = basis.graph
    t_seed = graph.nodes[r_home].seed
    r_m = tuple(r_m)
    r_spec = (r_home, r_m)
    z_v = graph.monomial_in(v_home, v_m, r_home)
    gamma = pointed.degree(t_seed, z_v)
    eta = pointed.codegree(t_seed, z_v)
    if gamma is None or eta is None:
        return LeclercVerdict(
            case="indeterminate", r_spec=r_spec, v_degree=(),
            reason="factor V is not bipointed in the working torus",
        )
    prod = twisted_mul(QTElem.monomial(r_m), z_v, t_seed.Lambda)
    top = vec_add(r_m, gamma)
    bottom = vec_add(r_m, eta)
    s = t_seed.lam(r_m, gamma)
    h = t_seed.lam(r_m, eta)
    checks = {
        "s_matches_lambda": prod.coeff(top) == VCoeff.v_power(s),
        "h_matches_lambda": prod.coeff(bottom) == VCoeff.v_power(h),
    }
    window = Bidegree(deg=top, codeg=bottom)
    pset = basis.window_set(r_home, window)
    normalized = prod.vshift(-s)
    decomp = pointed.decompose(t_seed, normalized, pset, window)
    if not decomp.is_exact:
        return LeclercVerdict(
            case="indeterminate", r_spec=r_spec, v_degree=gamma,
            reason=decomp.reason, s=s, h=h, checks=checks,
        )
    n_v = pointed.dominance_n(t_seed, eta, gamma)
    if len(decomp.terms) == 1:
        g0, c0 = decomp.terms[0]
        checks["pivot_is_one"] = g0 == top and c0.is_one()
        _record_n_criterion(checks, t_seed, r_m, n_v, in_basis=True)
        return LeclercVerdict(
            case="in_basis", r_spec=r_spec, v_degree=gamma,
            s=s, h=h, S=top, checks=checks,
        )
    # two-tailed case: identify the head term by the codegree of its element
    checks["s_gt_h"] = s > h
    if n_v is not None:
        b_n = _linalg.mat_vec(t_seed.B, n_v)
        checks["s_minus_h_matches_b_n"] = s - h == -t_seed.lam(r_m, b_n)
    head = None
    mids = []
    codeg_of = {}
    for g, c in decomp.terms:
        elem = pset.get(g)
        codeg_of[g] = pointed.codegree(t_seed, elem)
    heads = [g for g, _ in decomp.terms if codeg_of[g] == bottom]
    checks["unique_head"] = len(heads) == 1
    if len(heads) == 1:
        head = heads[0]
    for g, c in decomp.terms:
        if g == top:
            checks["pivot_is_one"] = c.is_one()
        elif head is not None and g == head:
            checks["h_coefficient"] = c.shift(s) == VCoeff.v_power(h)
        else:
            mids.append((g, c.shift(s)))
    checks["deg_dominance"] = all(
        g == top or (pointed.dominance_leq(t_seed, g, top) and g != top)
        for g, _ in decomp.terms
    )
    if head is not None:
        checks["codeg_dominance"] = all(
            g == head
            or (pointed.dominance_leq(t_seed, bottom, codeg_of[g]) and codeg_of[g] != bottom)
            for g, _ in decomp.terms
        )
    checks["coeff_window"] = all(c.in_window(h + 1, s - 1) for _, c in mids)
    bar_norm = prod.bar().vshift(s)
    bar_decomp = pointed.decompose(t_seed, bar_norm, pset, window)
    checks["bar_consistency"] = bar_decomp.is_exact and sorted(
        (g, c.bar()) for g, c in decomp.terms
    ) == sorted(bar_decomp.terms)
    _record_n_criterion(checks, t_seed, r_m, n_v, in_basis=False)
    return LeclercVerdict(
        case="two_tail", r_spec=r_spec, v_degree=gamma,
        s=s, h=h, S=top, H=head, middle=sorted(mids), checks=checks,
    )


def _record_n_criterion(checks, t_seed, r_m, n_v, in_basis):
    """For a single-variable R, landing in the basis must match n_i = 0."""
    ones = [i for i, x in enumerate(r_m) if x != 0]
    if len(ones) != 1 or r_m[ones[0]] != 1 or ones[0] not in t_seed.unfrozen:
        return
    if n_v is None:
        checks["in_basis_iff_n_zero"] = False
        return
    ni = n_v[t_seed.col(ones[0])]
    checks["in_basis_iff_n_zero"] = in_basis == (ni == 0)


@dataclass
class LeclercReport:
    in_basis: int = 0
    two_tail_pass: int = 0
    two_tail_fail: int = 0
    indeterminate: int = 0
    verdicts: list = field(default_factory=list)
    conflicts: list = field(default_factory=list)

    @property
    def ok(self):
        return self.two_tail_fail == 0 and not self.conflicts

    def counts(self):
        return {
            "in_basis": self.in_basis,
            "two_tail_pass": self.two_tail_pass,
            "two_tail_fail": self.two_tail_fail,
            "indeterminate": self.indeterminate,
        }


def default_r_specs(graph: ExchangeGraph, include_frozen=True):
    """Distinct single variables over all nodes, as (node key, exponent)."""
    specs = []
    seen = set()
    for key in graph.order:
        ts = graph.nodes[key]
        for i in range(ts.seed.n):
            if not include_frozen and i not in ts.seed.unfrozen:
                continue
            g = pointed.degree(graph.reference, ts.vars[i])
            if g in seen:
                continue
            seen.add(g)
            specs.append((key, unit_vec(ts.seed.n, i)))
    return specs


def monomial_r_specs(graph: ExchangeGraph, cap, frozen_window=0):
    """Distinct localized cluster monomials as R specs, capped exponents."""
    specs = {}
    for key in graph.order:
        ts = graph.nodes[key]
        ranges = [
            range(cap + 1) if i in ts.seed.unfrozen
            else range(-frozen_window, frozen_window + 1)
            for i in range(ts.seed.n)
        ]
        for m in product(*ranges):
            g = pointed.degree(graph.reference, cluster_monomial(ts, m))
            specs.setdefault(g, (key, m))
    return list(specs.values())


def verify_theorem(basis: CandidateBasis, r_specs=None) -> LeclercReport:
    """Sweep verify_pair over R specs and all enumerated basis elements."""
    graph = basis.graph
    if r_specs is None:
        r_specs = default_r_specs(graph)
    report = LeclercReport()
    for r_home, r_m in r_specs:
        for g_ref in basis.degree_keys():
            v_home, v_m = basis.provenance[g_ref]
            verdict = verify_pair(basis, r_home, r_m, v_home, v_m)
            report.verdicts.append(verdict)
            if verdict.case == "indeterminate":
                report.indeterminate += 1
            elif verdict.case == "in_basis":
                report.in_basis += 1
            elif verdict.passed:
                report.two_tail_pass += 1
            else:
                report.two_tail_fail += 1
    report.conflicts = list(basis.conflicts)
    return report
