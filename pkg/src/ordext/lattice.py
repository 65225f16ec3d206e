"""Exact integer linear algebra: Smith normal form, kernels, lattice membership.

Matrices are tuples of row tuples of Python ints. Vectors are tuples of ints.
Everything here is deterministic: the same input always yields the same
transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M: Matrix, ncols: int | None = None) -> Matrix:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence[int]) -> Vector:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    """Matrix whose columns are ``cols`` (an ``nrows x len(cols)`` matrix)."""
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


@dataclass(frozen=True)
class SmithForm:
    """``left @ M @ right == diagonal``; ``left_inv @ diagonal @ right_inv == M``.

    ``invariants`` holds the ``min(m, n)`` diagonal entries d1 | d2 | ... with
    all zeros at the end.
    """

    invariants: tuple[int, ...]
    diagonal: Matrix
    left: Matrix
    right: Matrix
    left_inv: Matrix
    right_inv: Matrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d != 0)


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Smith normal form of an integer matrix with unimodular transforms.

    ``ncols`` is only needed for matrices with zero rows.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    L = [list(r) for r in identity(m)]
    Linv = [list(r) for r in identity(m)]
    R = [list(r) for r in identity(n)]
    Rinv = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]
        for row in Linv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        L[dst] = [a + q * b for a, b in zip(L[dst], L[src])]
        for row in Linv:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for row in A:
            row[dst] += q * row[src]
        for row in R:
            row[dst] += q * row[src]
        Rinv[src] = [a - q * b for a, b in zip(Rinv[src], Rinv[dst])]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        L[i] = [-a for a in L[i]]
        for row in Linv:
            row[i] = -row[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, m):
                add_row(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, n):
                add_col(j, t, -(A[t][j] // A[t][t]))
            rest = [(abs(A[i][t]), i, None) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), None, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i, j = min(rest, key=lambda e: (e[0], e[1] or 0, e[2] or 0))
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            negate_row(t)

    invariants = tuple(A[i][i] for i in range(min(m, n)))
    return SmithForm(
        invariants=invariants,
        diagonal=as_matrix(A),
        left=as_matrix(L),
        right=as_matrix(R),
        left_inv=as_matrix(Linv),
        right_inv=as_matrix(Rinv),
    )


def integer_kernel(M: Sequence[Sequence[int]], ncols: int | None = None) -> list[Vector]:
    """A Z-basis of ``{v : M v = 0}``; the span is saturated in Z^n."""
    snf = smith_normal_form(M, ncols)
    n = len(snf.right)
    r = snf.rank
    return [tuple(snf.right[i][k] for i in range(n)) for k in range(r, n)]


def solve_integer(gens: Sequence[Sequence[int]], v: Sequence[int]) -> Vector | None:
    """Integer coefficients c with ``sum c_k gens[k] == v``, or None."""
    dim = len(v)
    if not gens:
        return () if not any(v) else None
    G = columns_to_matrix(gens, dim)
    snf = smith_normal_form(G)
    w = matvec(snf.left, v)
    y = []
    for i, d in enumerate(snf.invariants):
        if d == 0:
            if w[i]:
                return None
            y.append(0)
        else:
            if w[i] % d:
                return None
            y.append(w[i] // d)
    if any(w[len(snf.invariants):]):
        return None
    y += [0] * (len(gens) - len(y))
    return matvec(snf.right, y)


def in_lattice(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    return solve_integer(gens, v) is not None


def matrix_rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    return smith_normal_form(rows, ncols).rank


def quotient_torsion(gens: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """Invariant factors > 1 of the torsion subgroup of Z^dim / <gens>."""
    if not gens:
        return ()
    snf = smith_normal_form(columns_to_matrix(gens, dim))
    return tuple(d for d in snf.invariants if d > 1)
