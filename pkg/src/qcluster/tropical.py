"""Tropical degree maps, shift seeds, and distinguished elements.

trop_deg / trop_codeg are the piecewise-linear coordinate changes that
degrees and codegrees of well-behaved elements undergo across one
mutation; composing them along a route between two graph nodes gives
the general transformation. psi_matrix is the linear map sending each
unit vector to the degree of the matching variable expanded in the
other node's torus.

A node t is shift-detectable in direction +1 when some node t' carries,
for every unfrozen k, a variable whose expansion in t's torus has
degree -f_k plus a frozen correction; direction -1 asks for the node
whose torus sees t's own variables that way. The resulting injective
and projective elements index the distinguished pointed and copointed
products.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import pointed
from .expansion import ExchangeGraph
from .qtorus import QTElem, pos_part, twisted_mul, unit_vec, vec_sub
from .seed import mutate_seed


class FrozenFactorNotFrozen(RuntimeError):
    """A forced frozen correction vector had unfrozen support."""


class ShiftNotFound(LookupError):
    """No shifted seed with the required degree pattern in the graph."""


def trop_deg(seed, k, g):
    """Degree tropical transformation across the mutation at k."""
    ck = seed.col(k)
    gk = g[k]
    out = []
    for i in range(seed.n):
        if i == k:
            out.append(-gk)
            continue
        bik = seed.B[i][ck]
        out.append(g[i] + bik * max(gk, 0) if bik >= 0 else g[i] + bik * max(-gk, 0))
    return tuple(out)


def trop_codeg(seed, k, g):
    """Codegree tropical transformation across the mutation at k."""
    ck = seed.col(k)
    gk = g[k]
    out = []
    for i in range(seed.n):
        if i == k:
            out.append(-gk)
            continue
        bik = seed.B[i][ck]
        out.append(g[i] - bik * max(gk, 0) if bik <= 0 else g[i] - bik * max(-gk, 0))
    return tuple(out)


def trop_deg_word(seed, word, g):
    for k in word:
        g = trop_deg(seed, k, g)
        seed = mutate_seed(seed, k)
    return g


def trop_codeg_word(seed, word, g):
    for k in word:
        g = trop_codeg(seed, k, g)
        seed = mutate_seed(seed, k)
    return g


def phi(graph: ExchangeGraph, a_key, b_key, g):
    """Composite degree tropical transformation from node a to node b."""
    for seed, k in graph.route_steps(a_key, b_key):
        g = trop_deg(seed, k, g)
    return g


def phi_op(graph: ExchangeGraph, a_key, b_key, g):
    """Composite codegree tropical transformation from node a to node b."""
    for seed, k in graph.route_steps(a_key, b_key):
        g = trop_codeg(seed, k, g)
    return g


def psi_matrix(graph: ExchangeGraph, a_key, b_key):
    """Linear map as columns: unit vector i of a to deg_b of a's variable i."""
    torus_seed = graph.nodes[b_key].seed
    cols = [pointed.degree(torus_seed, z) for z in graph.vars_in(a_key, b_key)]
    if any(c is None for c in cols):
        raise RuntimeError("cross-expansion without a degree")
    n = graph.reference.n
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def apply_matrix(mat, g):
    return tuple(sum(row[j] * g[j] for j in range(len(g))) for row in mat)


@dataclass(frozen=True)
class ShiftData:
    """Witness that target is the [direction]-shift of base.

    word turns base's labeled seed into target's. sigma maps each
    unfrozen k to the position whose variable is pointed at -f_k plus
    the frozen correction u[k]; the degrees are measured in the torus
    of base for direction +1 and of target for direction -1.
    """

    base: tuple
    target: tuple
    direction: int
    word: tuple
    sigma: dict
    u: dict


def _shift_pattern(graph, home_key, torus_key):
    """Match degrees of home's variables in torus against -f_k + frozen."""
    s = graph.nodes[torus_key].seed
    uf = set(s.unfrozen)
    cross = graph.vars_in(home_key, torus_key)
    sigma = {}
    u = {}
    for j in range(s.n):
        d = pointed.degree(s, cross[j])
        if d is None:
            return None
        if j not in uf:
            if d != unit_vec(s.n, j):
                return None
            continue
        # unfrozen slice of the degree must be exactly -f_k for one k
        ks = [i for i in s.unfrozen if d[i] != 0]
        if len(ks) != 1 or d[ks[0]] != -1 or ks[0] in sigma:
            return None
        sigma[ks[0]] = j
        u[ks[0]] = tuple(x if i not in uf else 0 for i, x in enumerate(d))
    if len(sigma) != len(s.unfrozen):
        return None
    return sigma, u


def _b_condition(sa, sb, sigma):
    """b_{sigma i, sigma j} on the shifted side equals b_{ij} on the base."""
    for i in sa.unfrozen:
        for j in sa.unfrozen:
            if sb.b(sigma[i], sigma[j]) != sa.b(i, j):
                return False
    return True


def detect_shift(graph: ExchangeGraph, key, direction=1) -> ShiftData:
    """Scan nodes in discovery order for the shift of a node.

    Raises ShiftNotFound when no node matches (truncated graph, or the
    seed is not injective-reachable within the cap).
    """
    for cand in graph.order:
        if direction == 1:
            home, torus = cand, key
        else:
            home, torus = key, cand
        hit = _shift_pattern(graph, home, torus)
        if hit is None:
            continue
        sigma, u = hit
        sa = graph.nodes[torus].seed
        sb = graph.nodes[home].seed
        if not _b_condition(sa, sb, sigma):
            continue
        return ShiftData(
            base=key,
            target=cand,
            direction=direction,
            word=graph.route(key, cand),
            sigma=sigma,
            u=u,
        )
    raise ShiftNotFound(
        f"no {direction:+d} shift for node in graph"
        + (" (graph truncated)" if graph.truncated else "")
    )


def i_vars(graph: ExchangeGraph, sd: ShiftData):
    """Injective elements of the base node: I_k pointed at -f_k + u_k."""
    if sd.direction != 1:
        raise ValueError("i_vars needs a +1 shift")
    s = graph.nodes[sd.base].seed
    cross = graph.vars_in(sd.target, sd.base)
    return [cross[sd.sigma[k]] for k in s.unfrozen]


def p_vars(graph: ExchangeGraph, sd: ShiftData):
    """Projective elements of the base node: P_k copointed at -f_k + frozen.

    Indexed by measuring codegrees rather than by permutation
    bookkeeping; the match must be a bijection onto the unfrozen set.
    """
    if sd.direction != -1:
        raise ValueError("p_vars needs a -1 shift")
    s = graph.nodes[sd.base].seed
    cross = graph.vars_in(sd.target, sd.base)
    by_k = {}
    for j in s.unfrozen:
        eta = pointed.codegree(s, cross[j])
        if eta is None:
            raise RuntimeError("projective element without a codegree")
        ks = [i for i in s.unfrozen if eta[i] != 0]
        if len(ks) != 1 or eta[ks[0]] != -1 or ks[0] in by_k:
            raise RuntimeError(f"projective codegree pattern violated: {eta}")
        by_k[ks[0]] = cross[j]
    return [by_k[k] for k in s.unfrozen]


def normalized_product(seed, factors, lam) -> QTElem:
    """Degree normalization of the ordered twisted product of factors."""
    acc = QTElem.one(seed.n)
    for f in factors:
        acc = twisted_mul(acc, f, lam)
    return pointed.normalize_deg(seed, acc)


def _power_product(seed, base_elems, exps, lam):
    factors = []
    for z, e in zip(base_elems, exps):
        factors.extend([z] * e)
    return normalized_product(seed, factors, lam)


def inj_element(graph: ExchangeGraph, sd: ShiftData, g) -> QTElem:
    """Distinguished pointed element at g: frozen factor times cluster
    monomial times injective power, degree-normalized.

    The frozen factor is pinned by forcing the total degree to g; if the
    forced correction is not frozen-supported something upstream broke.
    """
    node = graph.nodes[sd.base]
    s = node.seed
    lam = s.Lambda
    ivs = i_vars(graph, sd)
    dminus = tuple(max(-g[k], 0) for k in s.unfrozen)
    body = twisted_mul(
        QTElem.monomial(pos_part(g)), _power_product(s, ivs, dminus, lam), lam
    )
    body = pointed.normalize_deg(s, body)
    u = vec_sub(g, pointed.degree(s, body))
    if any(u[i] != 0 for i in s.unfrozen):
        raise FrozenFactorNotFrozen(f"forced correction {u} is not frozen")
    return pointed.normalize_deg(s, twisted_mul(QTElem.monomial(u), body, lam))


def proj_element(graph: ExchangeGraph, sd: ShiftData, eta) -> QTElem:
    """Distinguished copointed element at eta, the mirror of inj_element."""
    node = graph.nodes[sd.base]
    s = node.seed
    lam = s.Lambda
    pvs = p_vars(graph, sd)
    dminus = tuple(max(-eta[k], 0) for k in s.unfrozen)
    ppart = _power_product(s, pvs, dminus, lam)
    body = twisted_mul(ppart, QTElem.monomial(pos_part(eta)), lam)
    body = pointed.normalize_codeg(s, body)
    u = vec_sub(eta, pointed.codegree(s, body))
    if any(u[i] != 0 for i in s.unfrozen):
        raise FrozenFactorNotFrozen(f"forced correction {u} is not frozen")
    return pointed.normalize_codeg(s, twisted_mul(body, QTElem.monomial(u), lam))


@dataclass(frozen=True)
class DistinguishedSet:
    kind: str
    elements: dict


def distinguished_set(graph, sd, kind, keys) -> DistinguishedSet:
    """Materialize Inj/Proj elements for finitely many (co)degrees."""
    if kind == "inj":
        elems = {tuple(g): inj_element(graph, sd, tuple(g)) for g in keys}
    elif kind == "proj":
        elems = {tuple(g): proj_element(graph, sd, tuple(g)) for g in keys}
    else:
        raise ValueError("kind must be 'inj' or 'proj'")
    return DistinguishedSet(kind=kind, elements=elems)


def check_swap(graph: ExchangeGraph, sd: ShiftData, home_key, m) -> bool:
    """Copointedness in the base torus must match pointedness at the
    transported codegree in the -1 shift torus, for one cluster monomial."""
    if sd.direction != -1:
        raise ValueError("check_swap needs a -1 shift")
    t_seed = graph.nodes[sd.base].seed
    s_seed = graph.nodes[sd.target].seed
    z_t = graph.monomial_in(home_key, m, sd.base)
    z_s = graph.monomial_in(home_key, m, sd.target)
    eta = pointed.codegree(t_seed, z_t)
    psi = psi_matrix(graph, sd.base, sd.target)
    copointed = eta is not None and z_t.terms[eta].is_one()
    d = pointed.degree(s_seed, z_s)
    pointed_side = d is not None and z_s.terms[d].is_one()
    if not copointed:
        return not pointed_side
    return pointed_side and d == apply_matrix(psi, eta)


def check_swap_order(graph: ExchangeGraph, sd: ShiftData, eta, g) -> bool:
    """Dominance between eta and g flips under the -1 shift transport."""
    if sd.direction != -1:
        raise ValueError("check_swap_order needs a -1 shift")
    t_seed = graph.nodes[sd.base].seed
    s_seed = graph.nodes[sd.target].seed
    psi = psi_matrix(graph, sd.base, sd.target)
    lhs = pointed.dominance_leq(t_seed, eta, g)
    rhs = pointed.dominance_leq(s_seed, apply_matrix(psi, g), apply_matrix(psi, eta))
    return lhs == rhs


def check_trop_commute(graph: ExchangeGraph, t_key, tp_key, samples) -> bool:
    """Degree route through t agrees with codegree route through the shifts.

    For every sample g in the shifted torus coordinates:
        phi_{t',t} . psi_{t,t[1]}  ==  psi_{t',t'[1]} . phi_op_{t'[1],t[1]}.
    """
    sd_t = detect_shift(graph, t_key, 1)
    sd_tp = detect_shift(graph, tp_key, 1)
    psi_t = psi_matrix(graph, sd_t.target, t_key)
    psi_tp = psi_matrix(graph, sd_tp.target, tp_key)
    for g in samples:
        lhs = phi(graph, t_key, tp_key, apply_matrix(psi_t, g))
        rhs = apply_matrix(psi_tp, phi_op(graph, sd_t.target, sd_tp.target, g))
        if lhs != rhs:
            return False
    return True


def check_compatibly_pointed(graph: ExchangeGraph, home_key, m) -> bool:
    """Degrees of one cluster monomial transform by phi between all nodes."""
    degs = {}
    for key in graph.order:
        z = graph.monomial_in(home_key, m, key)
        d = pointed.degree(graph.nodes[key].seed, z)
        if d is None:
            return False
        degs[key] = d
    for a in graph.order:
        for b in graph.order:
            if degs[b] != phi(graph, a, b, degs[a]):
                return False
    return True


def check_compatibly_copointed(graph: ExchangeGraph, home_key, m) -> bool:
    """Codegrees of one cluster monomial transform by phi_op between nodes."""
    cods = {}
    for key in graph.order:
        z = graph.monomial_in(home_key, m, key)
        c = pointed.codegree(graph.nodes[key].seed, z)
        if c is None:
            return False
        cods[key] = c
    for a in graph.order:
        for b in graph.order:
            if cods[b] != phi_op(graph, a, b, cods[a]):
                return False
    return True
