"""Exact square-matrix arithmetic over the integers and over Z/mZ.

Entries are plain Python ints, so nothing ever overflows.  Matrices are
immutable; ``@`` multiplies, ``**`` takes non-negative powers.
Indices are 0-based throughout (entry (1,2) in matrix notation is ``m[0, 1]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union


class MatrixError(ValueError):
    pass


class DimensionMismatch(MatrixError):
    pass


class NotUnimodular(MatrixError):
    def __init__(self, det: int):
        super().__init__(f"determinant {det} is not a unit in Z")
        self.det = det


class NotInvertibleMod(MatrixError):
    pass


class NonIntegralConjugate(MatrixError):
    def __init__(self, position: tuple[int, int], numerator: int, det: int):
        i, j = position
        super().__init__(
            f"entry ({i + 1},{j + 1}) of the conjugate is {numerator}/{det}, not an integer")
        self.position = position
        self.numerator = numerator
        self.det = det


class EmptySolution(MatrixError):
    pass


def _as_rows(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(e) for e in row) for row in rows)
    n = len(out)
    if n == 0 or any(len(r) != n for r in out):
        raise DimensionMismatch(f"expected a non-empty square array, got row lengths "
                                f"{[len(r) for r in out]}")
    return out


@dataclass(frozen=True, init=False)
class IntMatrix:
    """Square matrix with arbitrary-precision integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", _as_rows(rows))

    @classmethod
    def identity(cls, dim: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> IntMatrix:
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def unit(cls, dim: int, i: int, j: int) -> IntMatrix:
        """Matrix unit with a single 1 at 0-based position (i, j)."""
        return cls([[int((r, c) == (i, j)) for c in range(dim)] for r in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def modulus(self) -> None:
        return None

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def entries(self) -> list[int]:
        return [e for row in self.rows for e in row]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def __pow__(self, k: int) -> IntMatrix:
        return mat_pow(self, k)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        _check_same_shape(self, other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self.rows])

    def __rmul__(self, c: int) -> IntMatrix:
        return IntMatrix([[c * a for a in r] for r in self.rows])

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.dim)

    def reduce(self, m: int) -> ModMatrix:
        return reduce_mod(self, m)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in r) for r in self.rows)


@dataclass(frozen=True, init=False)
class ModMatrix:
    """Square matrix over Z/mZ; entries are kept canonical in [0, m)."""

    rows: tuple[tuple[int, ...], ...]
    modulus: int

    def __init__(self, rows: Iterable[Iterable[int]], modulus: int):
        if modulus < 2:
            raise MatrixError(f"modulus must be >= 2, got {modulus}")
        rows = _as_rows(rows)
        object.__setattr__(self, "rows", tuple(tuple(e % modulus for e in r) for r in rows))
        object.__setattr__(self, "modulus", int(modulus))

    @classmethod
    def identity(cls, dim: int, modulus: int) -> ModMatrix:
        return cls(IntMatrix.identity(dim).rows, modulus)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def entries(self) -> list[int]:
        return [e for row in self.rows for e in row]

    @property
    def T(self) -> ModMatrix:
        return ModMatrix(zip(*self.rows), self.modulus)

    def __matmul__(self, other: ModMatrix) -> ModMatrix:
        return mat_mul(self, other)

    def __pow__(self, k: int) -> ModMatrix:
        return mat_pow(self, k)

    def lift(self) -> IntMatrix:
        """Integer matrix with the canonical residues as entries."""
        return IntMatrix(self.rows)

    def det(self) -> int:
        return det(self.lift()) % self.modulus

    def is_invertible(self) -> bool:
        return gcd(self.det(), self.modulus) == 1

    def inverse(self) -> ModMatrix:
        d = self.det()
        if gcd(d, self.modulus) != 1:
            raise NotInvertibleMod(f"det {d} is not a unit mod {self.modulus}")
        return ModMatrix((pow(d, -1, self.modulus) * adjugate(self.lift())).rows, self.modulus)

    def is_identity(self) -> bool:
        return self == ModMatrix.identity(self.dim, self.modulus)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in r) for r in self.rows)


Matrix = Union[IntMatrix, ModMatrix]


def _check_same_shape(a: Matrix, b: Matrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimension {a.dim} vs {b.dim}")
    if a.modulus != b.modulus:
        raise DimensionMismatch(f"modulus {a.modulus} vs {b.modulus}")


def identity_like(a: Matrix) -> Matrix:
    if isinstance(a, ModMatrix):
        return ModMatrix.identity(a.dim, a.modulus)
    return IntMatrix.identity(a.dim)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_same_shape(a, b)
    cols = list(zip(*b.rows))
    rows = [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a.rows]
    if isinstance(a, ModMatrix):
        return ModMatrix(rows, a.modulus)
    return IntMatrix(rows)


def mat_pow(a: Matrix, k: int) -> Matrix:
    """k-fold product by repeated squaring.  Negative k is rejected; invert first."""
    if k < 0:
        raise ValueError("negative exponent; invert the matrix first")
    result = identity_like(a)
    base = a
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def reduce_mod(a: IntMatrix, m: int) -> ModMatrix:
    return ModMatrix(a.rows, m)


def det(a: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = a.dim
    M = [list(r) for r in a.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _minor(a: IntMatrix, i: int, j: int) -> IntMatrix:
    return IntMatrix([[e for c, e in enumerate(r) if c != j]
                      for rr, r in enumerate(a.rows) if rr != i])


def adjugate(a: IntMatrix) -> IntMatrix:
    """Transpose of the cofactor matrix, so that a @ adj(a) == det(a) * I."""
    n = a.dim
    if n == 1:
        return IntMatrix([[1]])
    return IntMatrix([[(-1) ** (i + j) * det(_minor(a, j, i)) for j in range(n)]
                      for i in range(n)])


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    d = det(a)
    if d not in (1, -1):
        raise NotUnimodular(d)
    return d * adjugate(a)


def conjugate_exact(p: IntMatrix, x: IntMatrix) -> IntMatrix:
    """Return p^-1 x p, computed as adj(p) x p / det(p) with exact division.

    Raises NonIntegralConjugate if the result has a non-integer entry.
    """
    d = det(p)
    if d == 0:
        raise MatrixError("conjugating matrix is singular")
    num = adjugate(p) @ x @ p
    rows = []
    for i, r in enumerate(num.rows):
        row = []
        for j, e in enumerate(r):
            q, rem = divmod(e, d)
            if rem:
                raise NonIntegralConjugate((i, j), e, d)
            row.append(q)
        rows.append(row)
    return IntMatrix(rows)


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0.

    ``coefficients`` holds (c_0, ..., c_{d-1}); the leading 1 is implicit.
    """

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def coeff(self, i: int) -> int:
        if i == self.degree:
            return 1
        return self.coefficients[i]

    def descending(self) -> tuple[int, ...]:
        """Coefficients from x^d down to x^0, leading 1 included."""
        return (1,) + tuple(reversed(self.coefficients))

    def is_palindromic(self) -> bool:
        c = self.descending()
        return c == c[::-1]

    def evaluate(self, a: Matrix) -> Matrix:
        """Substitute a matrix (Horner's rule)."""
        acc = identity_like(a)
        I = identity_like(a)
        for c in reversed(self.coefficients):
            acc = acc @ a
            acc = _add_scaled(acc, I, c)
        return acc

    def __str__(self) -> str:
        d = self.degree
        terms = []
        for power, c in zip(range(d, -1, -1), self.descending()):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                x = "x" if power == 1 else f"x^{power}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


def _add_scaled(a: Matrix, identity: Matrix, c: int) -> Matrix:
    rows = [[e + c * i for e, i in zip(r, s)] for r, s in zip(a.rows, identity.rows)]
    return ModMatrix(rows, a.modulus) if isinstance(a, ModMatrix) else IntMatrix(rows)


def charpoly(a: IntMatrix) -> CharPoly:
    """Characteristic polynomial det(xI - a) by Berkowitz's division-free algorithm."""
    M = a.rows
    n = a.dim
    # descending coefficients of the charpoly of the leading k x k block
    poly = [1, -M[0][0]]
    for k in range(1, n):
        R = M[k][:k]
        lead = [row[:k] for row in M[:k]]
        v = [M[i][k] for i in range(k)]
        toeplitz = [1, -M[k][k]]
        for _ in range(k):
            toeplitz.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(x * y for x, y in zip(row, v)) for row in lead]
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(min(i, k) + 1))
                for i in range(k + 2)]
    return CharPoly(tuple(reversed(poly[1:])))


@dataclass(frozen=True)
class SymplecticForm:
    """Unimodular antisymmetric Gram matrix J."""

    J: IntMatrix

    def __post_init__(self):
        J = self.J
        if J.dim % 2:
            raise MatrixError("symplectic form needs even dimension")
        if J.T != -J:
            raise MatrixError("form is not antisymmetric")
        if det(J) != 1:
            raise MatrixError(f"form has determinant {det(J)}, expected 1")

    @classmethod
    def standard(cls, n: int) -> SymplecticForm:
        """[[0, I_n], [-I_n, 0]]."""
        d = 2 * n
        return cls(IntMatrix([[1 if j == i + n else -1 if i == j + n else 0 for j in range(d)]
                              for i in range(d)]))

    @property
    def dim(self) -> int:
        return self.J.dim

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        """<u, v> = u^T J v."""
        return sum(u[i] * self.J[i, j] * v[j] for i in range(self.dim) for j in range(self.dim))


def is_symplectic(x: IntMatrix, form: SymplecticForm | IntMatrix) -> bool:
    J = form.J if isinstance(form, SymplecticForm) else form
    if x.dim != J.dim:
        raise DimensionMismatch(f"dimension {x.dim} vs form dimension {J.dim}")
    return x.T @ J @ x == J


def _antisymmetric_basis(dim: int) -> list[IntMatrix]:
    basis = []
    for i in range(dim):
        for j in range(i + 1, dim):
            basis.append(IntMatrix.unit(dim, i, j) - IntMatrix.unit(dim, j, i))
    return basis


def rational_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows v = 0} over Q, one vector per free column of the RREF."""
    M = [[Fraction(e) for e in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [e * inv for e in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [e - f * p for e, p in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(M, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def primitive_integer_vector(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers with a positive first nonzero entry."""
    den = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in v), 1)
    ints = [int(f * den) for f in v]
    g = reduce(gcd, ints, 0)
    ints = [e // g for e in ints]
    first = next(e for e in ints if e)
    return ints if first > 0 else [-e for e in ints]


def find_invariant_form(ms: Sequence[IntMatrix]) -> list[IntMatrix]:
    """Integer basis of antisymmetric J with m^T J m = J for every m in ms.

    Each basis element has content 1.  Raises EmptySolution if only J = 0 works.
    """
    if not ms:
        raise ValueError("need at least one matrix")
    dim = ms[0].dim
    if any(m.dim != dim for m in ms):
        raise DimensionMismatch("matrices of different dimensions")
    basis = _antisymmetric_basis(dim)
    # column k holds the image of the k-th basis form under J -> m^T J m - J
    columns = []
    for B in basis:
        col = []
        for m in ms:
            col.extend((m.T @ B @ m - B).entries())
        columns.append(col)
    rows = [list(r) for r in zip(*columns)]
    null = rational_nullspace(rows, len(basis))
    if not null:
        raise EmptySolution("only the zero form is invariant")
    out = []
    for v in null:
        coeffs = primitive_integer_vector(v)
        J = IntMatrix.zero(dim)
        for c, B in zip(coeffs, basis):
            J = J + c * B
        out.append(J)
    return out
