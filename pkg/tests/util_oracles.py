"""Shared independent oracles used across the test modules.

These deliberately avoid the library's own code paths wherever the point
is to cross-check one: closed-form root lists instead of the breadth-first
closure, a plain fraction Gaussian elimination instead of the production
rank kernel, cofactor expansion instead of interpolation for Laurent
determinants, and a commutant-nullspace computation instead of the
centralizer dimension formula.
"""
from __future__ import annotations

from fractions import Fraction

from schubnil import QMatrix


def closed_form_positive_roots(kind: str, rank: int) -> set[tuple[int, ...]]:
    """e_i - e_j, e_i + e_j plus e_i (type B) or 2 e_i (type C)."""
    out = set()
    for i in range(rank):
        for j in range(i + 1, rank):
            v = [0] * rank
            v[i], v[j] = 1, -1
            out.add(tuple(v))
            v2 = [0] * rank
            v2[i], v2[j] = 1, 1
            out.add(tuple(v2))
        v = [0] * rank
        v[i] = 1 if kind == "B" else 2
        out.add(tuple(v))
    return out


def dominant_tuples(kind: str, rank: int, amax: int):
    """All dominant tuples with entries <= amax (type C keeps even sums)."""
    def rec(prefix, cap):
        if len(prefix) == rank:
            if kind == "C" and sum(prefix) % 2 != 0:
                return
            yield tuple(prefix)
            return
        for v in range(cap, -1, -1):
            yield from rec(prefix + [v], v)

    yield from rec([], amax)


def gauss_rank(mat: QMatrix) -> int:
    """Field Gaussian elimination, no cleverness."""
    rows = [list(r) for r in mat.data]
    nr, nc = mat.rows, mat.cols
    r0 = 0
    for col in range(nc):
        piv = next((i for i in range(r0, nr) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        pv = rows[r0][col]
        for i in range(nr):
            if i != r0 and rows[i][col]:
                f = rows[i][col] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r0])]
        r0 += 1
        if r0 == nr:
            break
    return r0


def laurent_cofactor_det(m: int, coeffs: dict[int, QMatrix]) -> dict[int, Fraction]:
    """Cofactor-expansion determinant over scalar Laurent polynomials."""

    def poly_mul(p, q):
        out: dict[int, Fraction] = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return {e: c for e, c in out.items() if c != 0}

    def poly_add(p, q):
        out = dict(p)
        for e, c in q.items():
            out[e] = out.get(e, Fraction(0)) + c
        return {e: c for e, c in out.items() if c != 0}

    entries = [
        [
            {e: mat.data[i][j] for e, mat in coeffs.items() if mat.data[i][j] != 0}
            for j in range(m)
        ]
        for i in range(m)
    ]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total: dict[int, Fraction] = {}
        r = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            if not entries[r][c]:
                continue
            sub = det(rest, cols[:idx] + cols[idx + 1 :])
            term = poly_mul(entries[r][c], sub)
            if idx % 2 == 1:
                term = {e: -v for e, v in term.items()}
            total = poly_add(total, term)
        return total

    return det(list(range(m)), list(range(m)))


def sp_basis(n: int, form: QMatrix) -> list[QMatrix]:
    """Basis of matrices A with A^T J + J A = 0 (any nondegenerate J)."""
    m = 2 * n
    basis = []
    # constraint system on the m*m entries of A
    constraints = []
    for i in range(m):
        for j in range(m):
            row = [Fraction(0)] * (m * m)
            # (A^T J + J A)[i][j] = sum_k A[k][i] J[k][j] + J[i][k] A[k][j]
            for k in range(m):
                row[k * m + i] += form.data[k][j]
                row[k * m + j] += form.data[i][k]
            constraints.append(row)
    # nullspace by Gaussian elimination
    nr = len(constraints)
    nc = m * m
    rowsm = [list(r) for r in constraints]
    pivots = {}
    r0 = 0
    for col in range(nc):
        piv = next((i for i in range(r0, nr) if rowsm[i][col] != 0), None)
        if piv is None:
            continue
        rowsm[r0], rowsm[piv] = rowsm[piv], rowsm[r0]
        pv = rowsm[r0][col]
        rowsm[r0] = [a / pv for a in rowsm[r0]]
        for i in range(nr):
            if i != r0 and rowsm[i][col]:
                f = rowsm[i][col]
                rowsm[i] = [a - f * b for a, b in zip(rowsm[i], rowsm[r0])]
        pivots[col] = r0
        r0 += 1
    free = [c for c in range(nc) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * nc
        vec[fc] = Fraction(1)
        for col, prow in pivots.items():
            vec[col] = -rowsm[prow][fc]
        basis.append(QMatrix([[vec[i * m + j] for j in range(m)] for i in range(m)]))
    return basis


def commutant_orbit_dim(x: QMatrix, algebra_basis: list[QMatrix]) -> int:
    """dim of the adjoint orbit of x:  rank of B -> Bx - xB on the algebra."""
    m = x.rows
    cols = []
    for b in algebra_basis:
        c = b @ x - x @ b
        cols.append([c.data[i][j] for i in range(m) for j in range(m)])
    mat = QMatrix(list(map(list, zip(*cols)))) if cols else None
    return gauss_rank(mat)
