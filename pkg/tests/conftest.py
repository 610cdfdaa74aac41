"""Shared test helpers: independent small oracles and ideal collection."""

from __future__ import annotations

from fractions import Fraction

from bolalg.core import BolAlgebra, center, ideal_closure, is_ideal
from bolalg.linalg import ONE, Subspace, ZERO, basis_vec, full_space, rref, span, zero_space
from bolalg.radical import radical

F = Fraction


def invert(m):
    """Matrix inverse via row reduction of [m | I]; oracle-grade, no shortcuts."""
    n = len(m)
    aug = [list(m[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red = rref(tuple(tuple(r) for r in aug))
    for i in range(n):
        assert red[i][i] == 1, "matrix is singular"
    return tuple(tuple(red[i][n + j] for j in range(n)) for i in range(n))


def transport(B: BolAlgebra, S) -> BolAlgebra:
    """Change of basis: new basis vectors are the rows of S in old coordinates."""
    n = B.n
    Sinv = invert(tuple(tuple(S[j][i] for j in range(n)) for i in range(n)))  # columns = rows of S

    def to_new(v):
        return tuple(sum(Sinv[a][i] * v[i] for i in range(n)) for a in range(n))

    T = [[to_new(B.binary(S[p], S[q])) for q in range(n)] for p in range(n)]
    R = [[[to_new(B.ternary(S[p], S[q], S[r])) for r in range(n)] for q in range(n)] for p in range(n)]
    return BolAlgebra.from_tensors(n, T, R)


def collect_ideals(B: BolAlgebra) -> list[Subspace]:
    """Certified def2-ideals reachable by the standard probes."""
    n = B.n
    candidates = [zero_space(n), full_space(n)]
    for i in range(n):
        candidates.append(ideal_closure(B, span([basis_vec(i, n)], n)))
    c = center(B)
    if not c.is_zero():
        candidates.append(ideal_closure(B, c))
    cert = radical(B)
    if cert.decided:
        candidates.append(cert.radical)
    out = []
    seen = set()
    for s in candidates:
        key = (s.ambient, s.basis)
        if key in seen:
            continue
        seen.add(key)
        if is_ideal(B, s, "def2"):
            out.append(s)
    return out


def mutate_binary(B: BolAlgebra, i, j, k, delta=F(1)) -> BolAlgebra:
    T = [[[B.T[a][b][c] for c in range(B.n)] for b in range(B.n)] for a in range(B.n)]
    T[i][j][k] += delta
    return BolAlgebra.from_tensors(B.n, T, B.R, B.labels)


def mutate_ternary(B: BolAlgebra, i, j, k, l, delta=F(1)) -> BolAlgebra:
    R = [
        [[[B.R[a][b][c][d] for d in range(B.n)] for c in range(B.n)] for b in range(B.n)]
        for a in range(B.n)
    ]
    R[i][j][k][l] += delta
    return BolAlgebra.from_tensors(B.n, B.T, R, B.labels)
