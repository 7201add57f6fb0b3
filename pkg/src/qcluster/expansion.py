"""Laurent-expansion tracking and the exchange graph.

A TrackedSeed carries, next to the mutated seed matrices, the expansion
of each of its cluster variables inside the quantum torus of a fixed
reference seed. Mutating at k rewrites variable k through the exchange
relation: the two exchange monomials are expanded in reference
coordinates and the twisted sum is divided exactly by the old variable.
Exactness of that division is the Laurent phenomenon; a failure is an
internal error, not a user condition.

The exchange graph deduplicates tracked seeds by the unordered set of
variable degrees in the reference torus (a seed is determined by those
up to permutation). Whenever two routes meet at one node, the stored
and recomputed expansions are matched under the degree permutation and
must agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import pointed
from .qtorus import QTElem, exact_divide, pos_part, twisted_mul, unit_vec
from .seed import QuantumSeed, mutate_seed


@dataclass(frozen=True)
class TrackedSeed:
    seed: QuantumSeed
    vars: tuple[QTElem, ...]
    ref: QuantumSeed
    path: tuple[int, ...]


def initial_tracked(seed) -> TrackedSeed:
    xs = tuple(QTElem.monomial(unit_vec(seed.n, i)) for i in range(seed.n))
    return TrackedSeed(seed=seed, vars=xs, ref=seed, path=())


def _image_monomial(ts: TrackedSeed, a) -> QTElem:
    """Reference-torus expansion of the current seed's monomial X^a.

    The ordered twisted product of single variables overshoots the
    monomial by v to the sum of lam(a_i f_i, a_j f_j) over i < j, taken
    in the current seed's form, so that constant is peeled off first.
    Negative exponents are only allowed on frozen vertices, whose
    expansions stay plain monomials.
    """
    s = ts.seed
    w = 0
    for i in range(s.n):
        if a[i] == 0:
            continue
        for j in range(i + 1, s.n):
            w += a[i] * a[j] * s.Lambda[i][j]
    acc = QTElem.one(s.n).vshift(-w)
    for i in range(s.n):
        if a[i] == 0:
            continue
        if a[i] < 0:
            if i in s.unfrozen:
                raise ValueError(f"negative power at unfrozen vertex {i}")
            factor = QTElem.monomial(tuple(a[i] * x for x in unit_vec(s.n, i)))
            acc = twisted_mul(acc, factor, ts.ref.Lambda)
        else:
            for _ in range(a[i]):
                acc = twisted_mul(acc, ts.vars[i], ts.ref.Lambda)
    return acc


def mutate_tracked(ts: TrackedSeed, k) -> TrackedSeed:
    """Mutate at unfrozen k, keeping all expansions in the reference torus.

    In the current seed, the new variable z satisfies
        z * X_k = v^lam(a-, f_k) X^(a-) + v^lam(a+, f_k) X^(a+),
    where a+/a- collect the positive/negative parts of column k. The
    relation is pushed to reference coordinates and solved for z by
    exact division, then degree-normalized to leading coefficient 1.
    """
    s = ts.seed
    if k not in s.unfrozen:
        raise ValueError(f"vertex {k} is not unfrozen")
    ck = s.col(k)
    col = tuple(s.B[i][ck] for i in range(s.n))
    aplus = pos_part(col)
    aminus = pos_part(tuple(-x for x in col))
    fk = unit_vec(s.n, k)
    num = _image_monomial(ts, aminus).vshift(s.lam(aminus, fk)) + _image_monomial(
        ts, aplus
    ).vshift(s.lam(aplus, fk))
    z = exact_divide(num, ts.vars[k], ts.ref.Lambda)
    z = pointed.normalize_deg(ts.ref, z)
    newvars = tuple(z if i == k else x for i, x in enumerate(ts.vars))
    return TrackedSeed(
        seed=mutate_seed(s, k), vars=newvars, ref=ts.ref, path=ts.path + (k,)
    )


def apply_word(ts: TrackedSeed, word) -> TrackedSeed:
    for k in word:
        ts = mutate_tracked(ts, k)
    return ts


def cluster_monomial(ts: TrackedSeed, m) -> QTElem:
    """Normalized localized cluster monomial X^m of the tracked seed.

    Unfrozen exponents must be nonnegative; frozen exponents may be any
    integers. Degree normalization makes the result independent of the
    multiplication order of the quasi-commuting factors.
    """
    if any(m[i] < 0 for i in ts.seed.unfrozen):
        raise ValueError("unfrozen exponents must be nonnegative")
    return pointed.normalize_deg(ts.ref, _image_monomial(ts, m))


def degree_key(ts: TrackedSeed):
    """Canonical node key: sorted tuple of reference-torus variable degrees."""
    degs = []
    for z in ts.vars:
        g = pointed.degree(ts.ref, z)
        if g is None:
            raise RuntimeError("tracked variable without a degree")
        degs.append(g)
    if len(set(degs)) != len(degs):
        raise RuntimeError(f"repeated variable degrees in one seed: {degs}")
    return tuple(sorted(degs))


def _match_permutation(stored: TrackedSeed, other: TrackedSeed, ref):
    """perm with other position i playing stored position perm[i]."""
    stored_deg = [pointed.degree(ref, z) for z in stored.vars]
    other_deg = [pointed.degree(ref, z) for z in other.vars]
    return tuple(stored_deg.index(g) for g in other_deg)


def _assert_same_node(stored: TrackedSeed, other: TrackedSeed, ref):
    """Two routes reached one degree class: everything must match under perm."""
    perm = _match_permutation(stored, other, ref)
    for i, z in enumerate(other.vars):
        if stored.vars[perm[i]] != z:
            raise RuntimeError(
                f"path {other.path}: variable {i} disagrees with path {stored.path}"
            )
    a, b = stored.seed, other.seed
    for i in range(b.n):
        for j in range(b.n):
            if b.Lambda[i][j] != a.Lambda[perm[i]][perm[j]]:
                raise RuntimeError(
                    f"path {other.path}: Lambda mismatch at ({i},{j}) under {perm}"
                )
    for i in range(b.n):
        for k in b.unfrozen:
            if b.b(i, k) != a.b(perm[i], perm[k]):
                raise RuntimeError(
                    f"path {other.path}: B mismatch at ({i},{k}) under {perm}"
                )


class ExchangeGraph:
    """All seeds reachable from a reference seed, up to permutation.

    nodes maps a degree-set key to the first TrackedSeed that reached
    it; order lists keys in discovery order; edges holds directed
    (key, vertex, key) mutation triples. truncated is set when the
    node cap stopped the search. Cross-torus expansions are cached.
    """

    def __init__(self, reference: QuantumSeed, node_cap=10000):
        self.reference = reference
        self.node_cap = node_cap
        self.nodes: dict = {}
        self.order: list = []
        self.edges: list = []
        self.truncated = False
        self._cross: dict = {}
        self._steps: dict = {}
        self._build()

    def _build(self):
        ts0 = initial_tracked(self.reference)
        key0 = degree_key(ts0)
        self.nodes[key0] = ts0
        self.order.append(key0)
        frontier = [key0]
        while frontier:
            nxt = []
            for key in frontier:
                ts = self.nodes[key]
                for k in ts.seed.unfrozen:
                    ts2 = mutate_tracked(ts, k)
                    key2 = degree_key(ts2)
                    self.edges.append((key, k, key2))
                    if key2 in self.nodes:
                        _assert_same_node(self.nodes[key2], ts2, self.reference)
                        continue
                    if len(self.nodes) >= self.node_cap:
                        self.truncated = True
                        continue
                    self.nodes[key2] = ts2
                    self.order.append(key2)
                    nxt.append(key2)
            frontier = nxt

    def node(self, key) -> TrackedSeed:
        return self.nodes[key]

    def key_of_path(self, word):
        ts = apply_word(initial_tracked(self.reference), word)
        return degree_key(ts)

    def route(self, a_key, b_key):
        """Mutation word turning node a's labeled seed into node b's."""
        return tuple(reversed(self.nodes[a_key].path)) + self.nodes[b_key].path

    def route_steps(self, a_key, b_key):
        """(seed, vertex) pairs along the route, with seeds premutated."""
        hit = self._steps.get((a_key, b_key))
        if hit is not None:
            return hit
        seed = self.nodes[a_key].seed
        steps = []
        for k in self.route(a_key, b_key):
            steps.append((seed, k))
            seed = mutate_seed(seed, k)
        if seed != self.nodes[b_key].seed:
            raise RuntimeError("route does not land on the target seed")
        steps = tuple(steps)
        self._steps[(a_key, b_key)] = steps
        return steps

    def vars_in(self, home_key, torus_key):
        """Expansions of home's variables in the torus of another node."""
        hit = self._cross.get((home_key, torus_key))
        if hit is not None:
            return hit
        if home_key == torus_key:
            # a node's variables in its own torus are the unit monomials
            out = initial_tracked(self.nodes[home_key].seed).vars
        else:
            start = initial_tracked(self.nodes[torus_key].seed)
            ts = apply_word(start, self.route(torus_key, home_key))
            if ts.seed != self.nodes[home_key].seed:
                raise RuntimeError("re-tracking did not reproduce the labeled seed")
            out = ts.vars
        self._cross[(home_key, torus_key)] = out
        return out

    def monomial_in(self, home_key, m, torus_key) -> QTElem:
        """Expansion of home's normalized cluster monomial X^m in a torus."""
        home = self.nodes[home_key]
        torus_seed = self.nodes[torus_key].seed
        shadow = TrackedSeed(
            seed=home.seed,
            vars=self.vars_in(home_key, torus_key),
            ref=torus_seed,
            path=(),
        )
        return cluster_monomial(shadow, m)

    def variable_degrees(self, key):
        ts = self.nodes[key]
        return tuple(pointed.degree(self.reference, z) for z in ts.vars)

    def distinct_variables(self, include_frozen=False):
        """Distinct cluster variables over all nodes, as expansions."""
        seen = {}
        for key in self.order:
            ts = self.nodes[key]
            for i, z in enumerate(ts.vars):
                if include_frozen or i in ts.seed.unfrozen:
                    seen[pointed.degree(self.reference, z)] = z
        return seen

    def undirected_edges(self):
        """One edge per node pair; the two endpoints may label the exchanged
        vertex differently, so keep the label seen from the smaller node."""
        pairs = {}
        for a, k, b in self.edges:
            key = (min(a, b), max(a, b))
            cand = (0 if a == key[0] else 1, k)
            cur = pairs.get(key)
            if cur is None or cand < cur:
                pairs[key] = cand
        return sorted((a, kk, b) for (a, b), (_, kk) in pairs.items())


def build_exchange_graph(seed, node_cap=10000) -> ExchangeGraph:
    return ExchangeGraph(seed, node_cap=node_cap)


def emit_dot(graph: ExchangeGraph) -> str:
    """DOT text: node labels are sorted degree vectors, edges the vertex."""
    ids = {key: i for i, key in enumerate(graph.order)}
    lines = ["graph exchange {"]
    for key in graph.order:
        label = "; ".join("(" + ",".join(map(str, g)) + ")" for g in key)
        lines.append(f'  n{ids[key]} [label="{label}"];')
    for a, k, b in graph.undirected_edges():
        if a in ids and b in ids:
            lines.append(f'  n{ids[a]} -- n{ids[b]} [label="{k + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
