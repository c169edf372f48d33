"""Exact integer/rational linear algebra.

Everything downstream of the numerical monodromy runs through this module:
arbitrary-precision integer matrices, Hermite and Smith normal forms with
unimodular transforms, lattices in canonical row-HNF form, integer kernels
and cokernels, and fraction-free Sylvester resultants for univariate and
one-parameter polynomial families.

All values are immutable after construction and every operation is a pure
function, so results are deterministic and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers (row-major)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        if cols is not None and rows and cols != width:
            raise ValueError("cols argument disagrees with row length")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", rows)

    def __setattr__(self, *_):
        raise AttributeError("IntMatrix is immutable")

    # -- access ---------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix([[0] * c for _ in range(r)], cols=c)

    # -- arithmetic -----------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        ot = other._data
        out = []
        for arow in self._data:
            row = [0] * other.cols
            for k, a in enumerate(arow):
                if a:
                    brow = ot[k]
                    for j in range(other.cols):
                        row[j] += a * brow[j]
            out.append(row)
        return IntMatrix(out, cols=other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("dimension mismatch in sum")
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self._data], cols=self.cols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def mat_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self._data)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def _rows_copy(M: IntMatrix) -> list[list[int]]:
    return M.to_lists()


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------

def hnf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U @ M == H.  H is canonical:
    pivots positive, first nonzero of each row strictly to the right of the
    previous pivot, entries above each pivot reduced into [0, pivot), zero
    rows at the bottom.
    """
    h = _rows_copy(M)
    r, c = M.rows, M.cols
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    piv_row = 0
    for col in range(c):
        if piv_row >= r:
            break
        # gcd-eliminate below piv_row in this column
        pivot_found = False
        for i in range(piv_row, r):
            if h[i][col] != 0:
                if not pivot_found:
                    h[piv_row], h[i] = h[i], h[piv_row]
                    u[piv_row], u[i] = u[i], u[piv_row]
                    pivot_found = True
        if not pivot_found:
            continue
        for i in range(piv_row + 1, r):
            while h[i][col] != 0:
                # Euclid on (pivot, entry below), always reducing the larger
                a, b = h[piv_row][col], h[i][col]
                if abs(b) <= abs(a):
                    q = a // b
                    h[piv_row] = [x - q * y for x, y in zip(h[piv_row], h[i])]
                    u[piv_row] = [x - q * y for x, y in zip(u[piv_row], u[i])]
                    if h[piv_row][col] == 0:
                        h[piv_row], h[i] = h[i], h[piv_row]
                        u[piv_row], u[i] = u[i], u[piv_row]
                else:
                    q = b // a
                    h[i] = [x - q * y for x, y in zip(h[i], h[piv_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
        if h[piv_row][col] < 0:
            h[piv_row] = [-x for x in h[piv_row]]
            u[piv_row] = [-x for x in u[piv_row]]
        p = h[piv_row][col]
        for i in range(piv_row):
            q = h[i][col] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[piv_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[piv_row])]
        piv_row += 1
    return IntMatrix(h, cols=c), IntMatrix(u, cols=r)


def inverse_unimodular(V: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix (HNF must be identity)."""
    H, U = hnf(V)
    if H != IntMatrix.identity(V.rows):
        raise ValueError("matrix is not unimodular")
    return U


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _snf_core(M: IntMatrix, want_transforms: bool) -> tuple[
    list[list[int]], list[list[int]] | None, list[list[int]] | None
]:
    a = _rows_copy(M)
    r, c = M.rows, M.cols
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)] if want_transforms else None
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)] if want_transforms else None

    def row_op(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        if u is not None:
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        if v is not None:
            for row in v:
                row[i] -= q * row[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    n = min(r, c)
    for k in range(n):
        # find smallest-magnitude nonzero entry in trailing block
        best = None
        for i in range(k, r):
            for j in range(k, c):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        while True:
            bi, bj = best
            if bi != k:
                row_swap(k, bi)
            if bj != k:
                col_swap(k, bj)
            # clear column k and row k against the pivot
            dirty = False
            for i in range(k + 1, r):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    row_op(i, k, q)
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, c):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    col_op(j, k, q)
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                best = None
                for i in range(k, r):
                    for j in range(k, c):
                        x = a[i][j]
                        if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                            best = (i, j)
                continue
            # pivot divides its row/column; enforce divisibility into the block
            offender = None
            p = a[k][k]
            for i in range(k + 1, r):
                for j in range(k + 1, c):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # fold the offending row in and restart the pivot hunt
            row_op(k, offender, -1)
            best = (k, k)
        if a[k][k] < 0:
            row_negate(k)
    s = [[a[i][j] if i == j else 0 for j in range(c)] for i in range(r)]
    # (off-diagonal is zero already; rebuild defensively for canonical output)
    for i in range(r):
        for j in range(c):
            if i != j and a[i][j] != 0:
                raise AssertionError("SNF elimination left a nonzero off-diagonal entry")
    return s, u, v


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: (S, U, V) with U @ M @ V == S, S diagonal with
    nonnegative entries d1 | d2 | ..., U and V unimodular."""
    s, u, v = _snf_core(M, want_transforms=True)
    return IntMatrix(s, cols=M.cols), IntMatrix(u, cols=M.rows), IntMatrix(v, cols=M.cols)


def snf_diagonal(M: IntMatrix) -> tuple[int, ...]:
    """Just the diagonal of the Smith normal form (transforms skipped)."""
    s, _, _ = _snf_core(M, want_transforms=False)
    return tuple(s[i][i] for i in range(min(M.rows, M.cols)))


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient_rank with canonical row-HNF basis.

    Equal lattices have identical representations, so equality is direct
    comparison of the basis matrices.
    """

    ambient_rank: int
    basis: IntMatrix  # nonzero HNF rows only; may have zero rows count 0

    @property
    def rank(self) -> int:
        return self.basis.rows


def lattice_from_rows(vectors: Iterable[Sequence[int]], ambient_rank: int) -> Lattice:
    rows = [list(v) for v in vectors]
    for v in rows:
        if len(v) != ambient_rank:
            raise ValueError("vector length differs from ambient rank")
    if not rows:
        return Lattice(ambient_rank, IntMatrix([], cols=ambient_rank))
    H, _ = hnf(IntMatrix(rows, cols=ambient_rank))
    nz = [list(H.row(i)) for i in range(H.rows) if any(H.row(i))]
    return Lattice(ambient_rank, IntMatrix(nz, cols=ambient_rank))


def lattice_equal(a: Lattice, b: Lattice) -> bool:
    return a.ambient_rank == b.ambient_rank and a.basis == b.basis


def lattice_index(lat: Lattice) -> int | None:
    """Index [Z^r : L] = product of HNF pivots when L is full rank,
    None for infinite index."""
    if lat.rank < lat.ambient_rank:
        return None
    idx = 1
    for i in range(lat.basis.rows):
        idx *= lat.basis.entry(i, i)
    return idx


def scaled_standard_lattice(m: int, ambient_rank: int) -> Lattice:
    """The lattice m * Z^ambient_rank (zero lattice for m == 0)."""
    if m == 0:
        return lattice_from_rows([], ambient_rank)
    rows = [[m if i == j else 0 for j in range(ambient_rank)] for i in range(ambient_rank)]
    return lattice_from_rows(rows, ambient_rank)


def lattice_contains(lat: Lattice, vector: Sequence[int]) -> bool:
    """Membership test against the HNF basis."""
    v = list(vector)
    if len(v) != lat.ambient_rank:
        raise ValueError("vector length differs from ambient rank")
    for i in range(lat.basis.rows):
        row = lat.basis.row(i)
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            continue
        if v[p] % row[p] != 0:
            return False
        q = v[p] // row[p]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------------
# Integer kernels and cokernels
# ---------------------------------------------------------------------------

def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Basis (rows) of the integer null space {x : M x = 0}.

    Computed from the HNF transform of the transpose: the U-rows matching
    zero rows of H span the kernel saturatedly.  Output is HNF-canonical.
    """
    H, U = hnf(M.transpose())
    ker_rows = [list(U.row(i)) for i in range(H.rows) if not any(H.row(i))]
    if not ker_rows:
        return IntMatrix([], cols=M.cols)
    Hk, _ = hnf(IntMatrix(ker_rows, cols=M.cols))
    nz = [list(Hk.row(i)) for i in range(Hk.rows) if any(Hk.row(i))]
    return IntMatrix(nz, cols=M.cols)


def solve_in_row_span(basis: IntMatrix, target: Sequence[int]) -> tuple[int, ...]:
    """Integer coordinates c with c @ basis == target; basis rows must be in
    row-echelon (HNF) form.  Raises ValueError when target is outside."""
    v = list(target)
    if len(v) != basis.cols:
        raise ValueError("target length mismatch")
    coords = [0] * basis.rows
    for i in range(basis.rows):
        row = basis.row(i)
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            continue
        if v[p] % row[p] != 0:
            raise ValueError("target not in integer row span")
        q = v[p] // row[p]
        coords[i] = q
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    if any(v):
        raise ValueError("target not in integer row span")
    return tuple(coords)


@dataclass(frozen=True)
class CokernelCoords:
    """Coordinates on (row span of ker) / (row span of im).

    free_rank -- rank of the free part
    torsion   -- invariant factors > 1, in divisibility order
    kernel    -- the HNF kernel basis the coordinates refer to
    transform -- unimodular change of basis on kernel coordinates; the last
                 free_rank coordinates of c(z) @ transform are the free part
    free_basis -- ambient-space rows representing the free generators
    """

    free_rank: int
    torsion: tuple[int, ...]
    kernel: IntMatrix
    transform: IntMatrix
    free_basis: IntMatrix

    def coords(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Free-part coordinates of a vector lying in the kernel span."""
        c = solve_in_row_span(self.kernel, vector)
        y = IntMatrix([list(c)], cols=self.kernel.rows) @ self.transform
        k = self.kernel.rows
        return tuple(y.entry(0, j) for j in range(k - self.free_rank, k))


def cokernel_coords(im: IntMatrix, ker: IntMatrix) -> CokernelCoords:
    """Present (row span ker) / (row span im) with a free-part coordinate map.

    Requires im's rows to lie in ker's integer row span (raises ValueError
    otherwise).  ker must be an HNF basis, e.g. from kernel_basis.
    """
    k = ker.rows
    if im.rows:
        C = IntMatrix([list(solve_in_row_span(ker, im.row(i))) for i in range(im.rows)], cols=k)
    else:
        C = IntMatrix([], cols=k)
    S, _, V = snf(C)
    rank = sum(1 for i in range(min(S.rows, S.cols)) if S.entry(i, i) != 0)
    torsion = tuple(S.entry(i, i) for i in range(rank) if S.entry(i, i) > 1)
    free_rank = k - rank
    Vinv = inverse_unimodular(V)
    free_rows = [
        list((IntMatrix([list(Vinv.row(i))], cols=k) @ ker).row(0))
        for i in range(rank, k)
    ]
    free_basis = IntMatrix(free_rows, cols=ker.cols) if free_rows else IntMatrix([], cols=ker.cols)
    return CokernelCoords(free_rank, torsion, ker, V, free_basis)


# ---------------------------------------------------------------------------
# Rational polynomials, resultants, discriminants
# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial with exact rational coefficients, ascending
    degree order.  The zero polynomial has an empty coefficient tuple."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(cs: Iterable) -> "RatPoly":
        lst = [_as_fraction(c) for c in cs]
        while lst and lst[-1] == 0:
            lst.pop()
        return RatPoly(tuple(lst))

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def constant(c) -> "RatPoly":
        return RatPoly.from_coeffs([c])

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly.from_coeffs([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "RatPoly") -> "RatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RatPoly.from_coeffs([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero() or other.is_zero():
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly.from_coeffs(out)

    def scale(self, c) -> "RatPoly":
        c = _as_fraction(c)
        if c == 0:
            return RatPoly.zero()
        return RatPoly(tuple(a * c for a in self.coeffs))

    def derivative(self) -> "RatPoly":
        return RatPoly.from_coeffs([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.lead
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= f * b
            while rem and rem[-1] == 0:
                rem.pop()
        return RatPoly.from_coeffs(q), RatPoly.from_coeffs(rem)

    def divexact(self, other: "RatPoly") -> "RatPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd by the Euclidean algorithm over Q."""
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "RatPoly":
        if self.degree < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree < 1:
            return self.monic()
        return self.divexact(g).monic()

    def is_squarefree(self) -> bool:
        return self.degree < 1 or self.gcd(self.derivative()).degree < 1

    def __call__(self, x):
        """Horner evaluation; works for Fraction, complex, and mpmath types."""
        if not self.coeffs:
            return 0 * x
        acc = self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def eval_fraction_complex(self, re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
        """Exact evaluation at re + i*im; returns (Re, Im) as Fractions."""
        ar, ai = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            ar, ai = ar * re - ai * im + c, ar * im + ai * re
        return ar, ai

    def denominator_lcm(self) -> int:
        l = 1
        for c in self.coeffs:
            l = l * c.denominator // gcd(l, c.denominator)
        return l


# -- generic fraction-free determinant --------------------------------------

def _bareiss_det(rows: list[list], one, is_zero: Callable, divexact: Callable):
    """Fraction-free Bareiss determinant over an integral domain.

    Elements must support *, -, and exact division through divexact.
    """
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                zero = m[0][0] - m[0][0]
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    if sign == 1:
        return d
    return (d - d) - d


def _sylvester_rows(p: list, q: list, zero) -> list[list]:
    """Sylvester matrix rows for formal coefficient lists (ascending order,
    formal degrees len-1).  Degenerate (empty) inputs are rejected."""
    dp, dq = len(p) - 1, len(q) - 1
    if dp < 0 or dq < 0:
        raise ValueError("resultant of zero polynomial")
    n = dp + dq
    rows = []
    pc = list(reversed(p))
    qc = list(reversed(q))
    for i in range(dq):
        rows.append([zero] * i + pc + [zero] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + qc + [zero] * (n - dq - 1 - i))
    return rows


def resultant_formal(p: list, q: list, one, is_zero: Callable, divexact: Callable):
    """Resultant of formal coefficient lists over a generic integral domain.

    Formal degrees are len(p)-1, len(q)-1 even when leading entries vanish;
    this matches specialization of the generic resultant polynomial.
    """
    dp, dq = len(p) - 1, len(q) - 1
    if dp == 0 and dq == 0:
        return one
    if dp == 0:
        out = one
        for _ in range(dq):
            out = out * p[0]
        return out
    if dq == 0:
        out = one
        for _ in range(dp):
            out = out * q[0]
        return out
    rows = _sylvester_rows(p, q, one - one)
    return _bareiss_det(rows, one, is_zero, divexact)


def resultant(p: RatPoly, q: RatPoly) -> Fraction:
    """Sylvester resultant over Q, fraction-free after denominator clearing."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of zero polynomial")
    lp, lq = p.denominator_lcm(), q.denominator_lcm()
    pi = [int(c * lp) for c in p.coeffs]
    qi = [int(c * lq) for c in q.coeffs]
    r = resultant_formal(pi, qi, 1, lambda x: x == 0, lambda a, b: a // b)
    return Fraction(r, lp ** q.degree * lq ** p.degree)


def discriminant(p: RatPoly) -> Fraction:
    """disc(p) = (-1)^{d(d-1)/2} resultant(p, p') / lead(p)."""
    d = p.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lead
