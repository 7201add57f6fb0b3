"""Quantum seed data model: exchange matrix, skew form, mutation.

A seed couples an n x |unfrozen| integer exchange matrix B (rows run
over all vertices, columns over the unfrozen ones) with a skew-symmetric
n x n integer form Lambda, subject to B^T Lambda = (D 0) for a strictly
positive integer diagonal D indexed by the unfrozen vertices. D is
stored once at construction and treated as mutation-invariant.

Vertices are 0-based throughout the library; the CLI converts to the
1-based labels used in files and reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import _linalg
from .qtorus import QTElem, unit_vec


class IncompatibleResult(RuntimeError):
    """Mutation produced an inconsistent or incompatible seed (internal bug)."""


class NoCompatibleLambda(LookupError):
    """No skew form completing the exchange matrix was found in the search bound."""


@dataclass(frozen=True)
class QuantumSeed:
    n: int
    unfrozen: tuple[int, ...]
    B: tuple[tuple[int, ...], ...]
    Lambda: tuple[tuple[int, ...], ...]
    D: tuple[int, ...]

    def __post_init__(self):
        nuf = len(self.unfrozen)
        if sorted(set(self.unfrozen)) != sorted(self.unfrozen) or any(
            not 0 <= k < self.n for k in self.unfrozen
        ):
            raise ValueError("unfrozen must be distinct vertex indices")
        if len(self.B) != self.n or any(len(row) != nuf for row in self.B):
            raise ValueError("B must be n x |unfrozen|")
        if len(self.Lambda) != self.n or any(len(row) != self.n for row in self.Lambda):
            raise ValueError("Lambda must be n x n")
        for i in range(self.n):
            for j in range(self.n):
                if self.Lambda[i][j] != -self.Lambda[j][i]:
                    raise ValueError("Lambda must be skew-symmetric")
        if len(self.D) != nuf or any(d <= 0 for d in self.D):
            raise ValueError("D must be a positive diagonal over the unfrozen vertices")

    @property
    def frozen(self):
        uf = set(self.unfrozen)
        return tuple(i for i in range(self.n) if i not in uf)

    def col(self, k):
        """Column position of unfrozen vertex k in B."""
        return self.unfrozen.index(k)

    def b(self, i, k):
        return self.B[i][self.col(k)]

    def delta(self, k):
        return self.D[self.col(k)]

    def lam(self, m, mp):
        return sum(
            mi * sum(l * mj for l, mj in zip(row, mp)) for mi, row in zip(m, self.Lambda)
        )


def check_compatible(seed):
    """Verify B^T Lambda = (D 0) against the stored D.

    Returns (ok, diagnostic); the diagnostic names the first bad entry.
    """
    bt_lam = _linalg.mat_mul(_linalg.transpose(seed.B), seed.Lambda)
    for r, k in enumerate(seed.unfrozen):
        for j in range(seed.n):
            want = seed.D[r] if j == k else 0
            got = bt_lam[r][j]
            if got != want:
                return False, (
                    f"(B^T Lambda)[{r}][{j}] = {got}, expected {want}"
                )
    if _linalg.rank(seed.B) != len(seed.unfrozen):
        return False, "B does not have full column rank"
    return True, ""


def _mutation_matrix(seed, k, eps):
    """Elementary n x n matrix of the mutation at k with sign choice eps.

    Identity except in column k, which holds -1 on the diagonal and
    max(0, -eps * b_ik) elsewhere.
    """
    ck = seed.col(k)
    rows = []
    for i in range(seed.n):
        row = list(unit_vec(seed.n, i))
        row[k] = -1 if i == k else max(0, -eps * seed.B[i][ck])
        rows.append(tuple(row))
    return tuple(rows)


def mutate_seed(seed, k):
    """Seed mutation at an unfrozen vertex k; an involution.

    B mutates by the standard matrix rule. Lambda is conjugated by the
    elementary matrix of the mutation; both sign conventions are
    computed and must agree, and compatibility with the unchanged D is
    re-checked, so convention drift shows up as a hard error.
    """
    if k not in seed.unfrozen:
        raise ValueError(f"vertex {k} is not unfrozen")
    ck = seed.col(k)
    newb = []
    for i in range(seed.n):
        row = []
        for cj, j in enumerate(seed.unfrozen):
            if i == k or j == k:
                row.append(-seed.B[i][cj])
            else:
                bik = seed.B[i][ck]
                bkj = seed.B[k][cj]
                row.append(seed.B[i][cj] + max(bik, 0) * bkj + bik * max(-bkj, 0))
        newb.append(tuple(row))
    lams = []
    for eps in (1, -1):
        e = _mutation_matrix(seed, k, eps)
        lams.append(_linalg.mat_mul(_linalg.mat_mul(_linalg.transpose(e), seed.Lambda), e))
    if lams[0] != lams[1]:
        raise IncompatibleResult(f"Lambda mutation at {k}: sign conventions disagree")
    out = QuantumSeed(seed.n, seed.unfrozen, tuple(newb), lams[0], seed.D)
    ok, diag = check_compatible(out)
    if not ok:
        raise IncompatibleResult(f"mutation at {k} broke compatibility: {diag}")
    return out


def p_star(seed, nvec):
    """B applied to a vector supported on the unfrozen vertices."""
    if any(nvec[i] != 0 for i in seed.frozen):
        raise ValueError("vector not supported on unfrozen vertices")
    restricted = tuple(nvec[k] for k in seed.unfrozen)
    return _linalg.mat_vec(seed.B, restricted)


def y_variable(seed, nvec) -> QTElem:
    return QTElem.monomial(p_star(seed, nvec))


def opposite_seed(seed):
    """Negate both matrices; compatibility is preserved with the same D."""
    negb = tuple(tuple(-x for x in row) for row in seed.B)
    negl = tuple(tuple(-x for x in row) for row in seed.Lambda)
    return QuantumSeed(seed.n, seed.unfrozen, negb, negl, seed.D)


@lru_cache(maxsize=None)
def _skew_basis(n):
    """Index pairs (i, j), i < j, parametrizing skew n x n matrices."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def find_compatible_lambda(btilde, unfrozen=None, d_max=8):
    """Search a skew integer Lambda and positive diagonal D for btilde.

    Candidate diagonals are scanned in lexicographic order with entries
    in 1..d_max; for each one the linear system on the skew entries is
    solved over the integers. Returns (Lambda, D) for the first hit.

    Raises ValueError if btilde is not of full column rank, and
    NoCompatibleLambda when the bounded search is exhausted.
    """
    n = len(btilde)
    nuf = len(btilde[0]) if n else 0
    unfrozen = tuple(range(nuf)) if unfrozen is None else tuple(unfrozen)
    if _linalg.rank(btilde) != nuf:
        raise ValueError("exchange matrix must have full column rank")
    pairs = _skew_basis(n)
    # rows: one equation per (unfrozen row r, vertex j) of B^T Lambda = (D 0)
    rows = []
    targets = []
    for r in range(nuf):
        for j in range(n):
            row = [0] * len(pairs)
            for idx, (a, b) in enumerate(pairs):
                # Lambda[a][b] = x_idx, Lambda[b][a] = -x_idx
                if b == j:
                    row[idx] += btilde[a][r]
                if a == j:
                    row[idx] -= btilde[b][r]
            rows.append(tuple(row))
            targets.append((r, j))
    mat = tuple(rows)
    for dvec in product(range(1, d_max + 1), repeat=nuf):
        rhs = tuple(
            dvec[r] if j == unfrozen[r] else 0 for (r, j) in targets
        )
        x = _linalg.solve_integer(mat, rhs)
        if x is None:
            continue
        lam = [[0] * n for _ in range(n)]
        for idx, (a, b) in enumerate(pairs):
            lam[a][b] = x[idx]
            lam[b][a] = -x[idx]
        return tuple(tuple(row) for row in lam), dvec
    raise NoCompatibleLambda(f"no compatible skew form with diagonal entries <= {d_max}")


def make_seed(btilde, lam=None, unfrozen=None, d=None):
    """Construct a checked QuantumSeed, synthesizing Lambda/D when absent."""
    n = len(btilde)
    nuf = len(btilde[0]) if n else 0
    unfrozen = tuple(range(nuf)) if unfrozen is None else tuple(unfrozen)
    btilde = tuple(tuple(row) for row in btilde)
    if lam is None:
        lam, d = find_compatible_lambda(btilde, unfrozen)
    else:
        lam = tuple(tuple(row) for row in lam)
        if d is None:
            bt_lam = _linalg.mat_mul(_linalg.transpose(btilde), lam)
            d = tuple(bt_lam[r][k] for r, k in enumerate(unfrozen))
    seed = QuantumSeed(n, unfrozen, btilde, lam, tuple(d))
    ok, diag = check_compatible(seed)
    if not ok:
        raise ValueError(f"not a compatible pair: {diag}")
    return seed


def principal_framing(b_principal):
    """Stack an identity block under a square exchange matrix.

    The first block of vertices stays unfrozen, the new block is frozen;
    a compatible skew form always exists here and is synthesized.
    """
    m = len(b_principal)
    rows = [tuple(row) for row in b_principal]
    rows += [unit_vec(m, i) for i in range(m)]
    return make_seed(tuple(rows), unfrozen=tuple(range(m)))
