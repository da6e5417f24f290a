"""Exact determinant, inertia, and cofactor sums for integer matrices.

Everything here is integer or rational arithmetic: determinants use the
fraction-free Bareiss elimination, inertia either a symmetric congruence
diagonalization over Fractions or Jones' leading-principal-minor sign rule,
and cofactor sums the rank-one identity cof(A) = det(A + J) - det(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .matrices import IntMatrix


class NotSymmetric(InputError):
    """Inertia is only defined here for symmetric matrices."""


class Singular(InputError):
    """The minor-sign method needs a nonsingular matrix."""


class ConsecutiveZeroMinors(InputError):
    """Two consecutive zero leading minors defeat the minor-sign method."""


class DimensionTooSmall(InputError):
    """The operation needs a larger matrix."""


@dataclass(frozen=True)
class Inertia:
    """Signature of a symmetric matrix: counts of +, -, 0 eigenvalues."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def order(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)

    def __str__(self) -> str:
        return f"({self.n_plus}, {self.n_minus}, {self.n_zero})"


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination with row pivoting. det([]) = 1."""
    n = m.n
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity: prev divides the product
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inertia_congruence(m: IntMatrix) -> Inertia:
    """Diagonalize by simultaneous row/column operations over Fractions.

    A congruence never changes the signature (Sylvester's law), so counting
    pivot signs on the diagonalized matrix gives the inertia exactly. When
    the active diagonal is all zero but some off-diagonal entry A[r][c] is
    not, adding row/column c into row/column r manufactures the pivot
    2*A[r][c]; if nothing nonzero remains, the leftover block is zero.
    """
    if not m.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    n = m.n
    a = [[Fraction(x) for x in row] for row in m.rows]
    plus = minus = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                rc = next(
                    (
                        (r, c)
                        for r in range(i, n)
                        for c in range(r + 1, n)
                        if a[r][c] != 0
                    ),
                    None,
                )
                if rc is None:
                    zero += n - i
                    break
                r, c = rc
                for t in range(n):
                    a[r][t] += a[c][t]
                for t in range(n):
                    a[t][r] += a[t][c]
                if r != i:
                    a[i], a[r] = a[r], a[i]
                    for row in a:
                        row[i], row[r] = row[r], row[i]
        pivot = a[i][i]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        for j in range(i + 1, n):
            if a[j][i]:
                f = a[j][i] / pivot
                row_j = a[j]
                row_i = a[i]
                for t in range(i, n):
                    row_j[t] -= f * row_i[t]
        # the row pass already produced the congruent trailing block
        # (column i below the pivot is now zero); mirror row i to keep
        # the stored matrix symmetric
        for j in range(i + 1, n):
            a[i][j] = Fraction(0)
    return Inertia(plus, minus, zero)


def leading_principal_minors(m: IntMatrix) -> list[int]:
    """Determinants of the leading k-by-k submatrices, k = 1..n."""
    return [determinant(m.leading(k)) for k in range(1, m.n + 1)]


def inertia_leading_minors(m: IntMatrix) -> Inertia:
    """Jones' minor-sign rule for nonsingular symmetric matrices.

    n_minus is the number of sign changes in 1, D_1, ..., D_n with zeros
    skipped; this needs D_n nonzero and no two consecutive zero minors.
    """
    if not m.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    n = m.n
    if n == 0:
        return Inertia(0, 0, 0)
    minors = leading_principal_minors(m)
    if minors[-1] == 0:
        raise Singular("last leading minor vanishes")
    for i in range(n - 1):
        if minors[i] == 0 and minors[i + 1] == 0:
            raise ConsecutiveZeroMinors(f"leading minors {i + 1} and {i + 2} both vanish")
    signs = [x for x in [1] + minors if x != 0]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
    return Inertia(n - changes, changes, 0)


def cofactor_sum(m: IntMatrix) -> int:
    """Sum of all n^2 cofactors, via det(A + J) = det(A) + cof(A)."""
    return determinant(m + IntMatrix.ones(m.n)) - determinant(m)


def reduced_cofactor_sum(m: IntMatrix) -> int:
    """det(A + J_2) - det(A), where J_2 is all-ones on the leading 2x2 block.

    For a family's reduced matrix this reproduces the cofactor sum of every
    member's distance matrix, because the reducing matrix's columns beyond
    the second sum to zero.
    """
    if m.n < 2:
        raise DimensionTooSmall("need order at least 2")
    bump = [[0] * m.n for _ in range(m.n)]
    for i in range(2):
        for j in range(2):
            bump[i][j] = 1
    return determinant(m + IntMatrix.from_rows(bump)) - determinant(m)
