"""Exact Gaussian elimination over GF(2) (rows as int bitmasks) and GF(4)."""

from __future__ import annotations

from typing import Sequence

from .field import F4


def gf2_rref(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot bit per row)."""
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    while work:
        r = work.pop()
        for p, pr in zip(pivots, out):
            if (r >> p) & 1:
                r ^= pr
        if not r:
            continue
        p = r.bit_length() - 1
        for i, pr in enumerate(out):
            if (pr >> p) & 1:
                out[i] = pr ^ r
        out.append(r)
        pivots.append(p)
    return out, pivots


def gf2_rank(rows: Sequence[int]) -> int:
    return len(gf2_rref(rows)[0])


def gf2_nullspace(rows: Sequence[int], width: int) -> list[int]:
    """Basis of ``{x in GF(2)^width : parity(r & x) = 0 for every r}``."""
    red, pivots = gf2_rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(width):
        if f in pivot_set:
            continue
        x = 1 << f
        for p, r in zip(pivots, red):
            if (r >> f) & 1:
                x |= 1 << p
        basis.append(x)
    return basis


def gf2_solve(equations: Sequence[tuple[int, int]], width: int) -> tuple[int, list[int]] | None:
    """Solve ``parity(row & x) = rhs`` for every ``(row, rhs)``.

    Returns a particular solution and a basis of the homogeneous solutions,
    or ``None`` when the system is inconsistent.
    """
    # rhs in bit 0, variables shifted up; pivots are leading bits so a pivot
    # at bit 0 is the row 0 = 1
    aug = [(row << 1) | (rhs & 1) for row, rhs in equations]
    red, pivots = gf2_rref(aug)
    if 0 in pivots:
        return None
    x = 0
    for p, r in zip(pivots, red):
        if r & 1:
            x |= 1 << (p - 1)
    return x, gf2_nullspace([row for row, _ in equations], width)


def gf4_rref(rows: Sequence[Sequence[int]]) -> tuple[list[list[F4]], list[int]]:
    mat = [[F4(int(v)) for v in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a + f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def gf4_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(gf4_rref(rows)[1])


def gf4_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[F4]]:
    """Basis of ``{x : sum_j r_j x_j = 0 for every row r}`` (Euclidean)."""
    red, pivots = gf4_rref(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [F4.ZERO] * ncols
        x[f] = F4.ONE
        for row, p in zip(red, pivots):
            x[p] = row[f]  # char 2: -a == a
        basis.append(x)
    return basis
