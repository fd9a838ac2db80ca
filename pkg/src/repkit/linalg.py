"""Exact dense linear algebra over the rationals and prime fields.

Matrices wrap numpy arrays: ``object`` arrays of :class:`fractions.Fraction`
over QQ and ``int64`` residues over GF(p) (``object`` ints for very large p).
All elimination is exact, so rank, kernel and solvability questions are
decided without tolerances. Bases returned by the kernel, cokernel and
solve routines come from reduced row echelon forms and are therefore
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatch, NotNilpotent, ValidationError

__all__ = [
    "Field",
    "QQ",
    "GF",
    "Matrix",
    "hstack",
    "vstack",
    "block_diag",
    "kron",
    "rank_and_kernel",
    "solve_linear",
    "SolveResult",
    "cokernel_data",
    "nilpotent_jordan",
    "JordanData",
    "jordan_matrix",
]

# Residues below this bound stay in int64 without overflow in a matmul of
# inner dimension < 2**21.
_INT64_PRIME_BOUND = 1 << 21


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, isqrt(p) + 1))


class Field:
    """QQ (``p == 0``) or the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        p = int(p)
        if p != 0 and not _is_prime(p):
            raise ValidationError(f"characteristic {p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def dtype(self):
        if self.p == 0 or self.p >= _INT64_PRIME_BOUND:
            return object
        return np.int64

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __reduce__(self):
        return (Field, (self.p,))

    # scalars -------------------------------------------------------------

    def coerce(self, x):
        """Convert an int, Fraction or ``"num/den"`` string to a field element."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValidationError(f"{x} has no image in {self!r}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, (float, np.floating)) and not float(x).is_integer():
            raise ValidationError(f"non-integral float {x} cannot be a residue")
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return Fraction(1) / x
        return pow(int(x), -1, self.p)

    def zeros(self, shape) -> np.ndarray:
        if self.p == 0:
            a = np.empty(shape, dtype=object)
            a.fill(Fraction(0))
            return a
        return np.zeros(shape, dtype=self.dtype)

    def array(self, data) -> np.ndarray:
        """A normalized 2-d array of field elements from nested sequences."""
        raw = np.array(data, dtype=object)
        if raw.ndim != 2:
            raise ValidationError("matrix data must be two-dimensional")
        out = self.zeros(raw.shape)
        for idx, x in np.ndenumerate(raw):
            out[idx] = self.coerce(x)
        return out

    def reduce(self, a: np.ndarray) -> np.ndarray:
        if self.p == 0:
            return a
        return a % self.p

    def random_element(self, rng: np.random.Generator):
        if self.p == 0:
            return Fraction(int(rng.integers(-3, 4)))
        return int(rng.integers(0, self.p))


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def _wrap(field: Field, a: np.ndarray) -> "Matrix":
    m = Matrix.__new__(Matrix)
    a.flags.writeable = False
    object.__setattr__(m, "field", field)
    object.__setattr__(m, "_a", a)
    object.__setattr__(m, "_hash", None)
    return m


class Matrix:
    """An immutable exact matrix over a :class:`Field`.

    ``Matrix(GF(5), [[1, 2], [3, 4]])`` builds from nested rows; use
    :meth:`zeros` for matrices with no rows or no columns.
    """

    __slots__ = ("field", "_a", "_hash")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValidationError("ragged matrix rows")
        a = field.array(rows) if rows else field.zeros((0, 0))
        a.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (_wrap, (self.field, np.array(self._a)))

    # construction ----------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return _wrap(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        a = field.zeros((n, n))
        for i in range(n):
            a[i, i] = field.coerce(1)
        return _wrap(field, a)

    @classmethod
    def from_array(cls, field: Field, a) -> "Matrix":
        """Wrap an array whose entries are already field elements (copied)."""
        a = np.array(a, dtype=field.dtype)
        if a.ndim != 2:
            raise ValidationError("matrix data must be two-dimensional")
        if field.p == 0:
            out = field.zeros(a.shape)
            for idx, x in np.ndenumerate(a):
                out[idx] = Fraction(x)
            a = out
        return _wrap(field, field.reduce(a))

    @classmethod
    def from_entries(cls, field: Field, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValidationError(f"expected {rows * cols} entries, got {len(entries)}")
        a = field.zeros((rows, cols))
        for k, x in enumerate(entries):
            a[divmod(k, cols)] = field.coerce(x)
        return _wrap(field, a)

    @classmethod
    def random(cls, field: Field, rows: int, cols: int, rng: np.random.Generator) -> "Matrix":
        if field.p == 0:
            a = rng.integers(-3, 4, size=(rows, cols))
            return cls.from_array(field, a.astype(object))
        return _wrap(field, rng.integers(0, field.p, size=(rows, cols)).astype(field.dtype))

    @classmethod
    def random_invertible(cls, field: Field, n: int, rng: np.random.Generator) -> "Matrix":
        while True:
            m = cls.random(field, n, n, rng)
            if m.rank() == n:
                return m

    # basic protocol --------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    def entries(self) -> list:
        return list(self._a.reshape(-1))

    def __getitem__(self, key):
        out = self._a[key]
        if isinstance(out, np.ndarray):
            if out.ndim != 2:
                raise IndexError("matrix slicing must keep two dimensions")
            return _wrap(self.field, out.copy())
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self._a == other._a))
        )

    def __hash__(self):
        if self._hash is None:
            h = hash((self.field, self.shape, tuple(self._a.reshape(-1).tolist())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._a.tolist())
        return f"Matrix<{self.field!r} {self.rows}x{self.cols}>[{body}]"

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # arithmetic ------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return _wrap(self.field, self.field.reduce(self._a + other._a))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return _wrap(self.field, self.field.reduce(self._a - other._a))

    def __neg__(self) -> "Matrix":
        return _wrap(self.field, self.field.reduce(-self._a))

    def __mul__(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return _wrap(self.field, self.field.reduce(self._a * c))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        if self.field.is_rational:
            return _wrap(self.field, _qq_matmul(self._a, other._a))
        return _wrap(self.field, self.field.reduce(self._a @ other._a))

    @property
    def T(self) -> "Matrix":
        return _wrap(self.field, self._a.T.copy())

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not bool(np.any(self._a != 0))

    def vec(self) -> "Matrix":
        """Row-major vectorization as a column."""
        return _wrap(self.field, self._a.reshape(-1, 1).copy())

    def reshape(self, rows: int, cols: int) -> "Matrix":
        return _wrap(self.field, self._a.reshape(rows, cols).copy())

    # elimination -----------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        r, piv = _rref(self._a, self.field)
        return _wrap(self.field, r), piv

    def rank(self) -> int:
        return len(_rref(self._a, self.field)[1])

    def kernel(self) -> "Matrix":
        return rank_and_kernel(self)[1]

    def inverse(self) -> "Matrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        sol = solve_linear(self, Matrix.identity(self.field, n))
        if sol.solution is None or sol.dimension:
            raise ZeroDivisionError("matrix is singular")
        return sol.solution


def _scaled_ints(a: np.ndarray) -> tuple[np.ndarray, int]:
    """``(A, d)`` with integer entries and ``a == A / d``."""
    d = lcm(*{x.denominator for x in a.flat}) if a.size else 1
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = x.numerator * (d // x.denominator)
    return out, d


def _qq_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # Fraction products are slow; multiply scaled integers instead
    ia, da = _scaled_ints(a)
    ib, db = _scaled_ints(b)
    ma = max((abs(x) for x in ia.flat), default=0)
    mb = max((abs(x) for x in ib.flat), default=0)
    if ma * mb * a.shape[1] < 2**62:
        prod = (ia.astype(np.int64) @ ib.astype(np.int64)).astype(object)
    else:
        prod = ia @ ib
    d = da * db
    out = np.empty(prod.shape, dtype=object)
    for idx, x in np.ndenumerate(prod):
        out[idx] = Fraction(int(x), d)
    return out


def _rref(a: np.ndarray, field: Field, max_col: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; pivots are searched only in ``a[:, :max_col]``."""
    a = np.array(a, dtype=field.dtype, copy=True)
    rows, cols = a.shape
    limit = cols if max_col is None else max_col
    p = field.p
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = field.inv(a[r, c])
        a[r] = a[r] * inv
        if p:
            a[r] %= p
        others = np.flatnonzero(a[:, c] != 0)
        others = others[others != r]
        if others.size:
            upd = a[others] - np.outer(a[others, c], a[r])
            a[others] = upd % p if p else upd
        pivots.append(c)
        r += 1
    return a, pivots


def _fields(*ms: Matrix) -> Field:
    fields = {m.field for m in ms}
    if len(fields) > 1:
        raise FieldMismatch(f"mixed fields {sorted(map(repr, fields))}")
    return ms[0].field


def hstack(*ms: Matrix, rows: int | None = None, field: Field | None = None) -> Matrix:
    """Horizontal concatenation. ``rows``/``field`` are needed only when empty."""
    if not ms:
        if rows is None or field is None:
            raise ValueError("empty hstack needs rows and field")
        return Matrix.zeros(field, rows, 0)
    f = _fields(*ms)
    if len({m.rows for m in ms}) > 1:
        raise ValueError("hstack row mismatch")
    return _wrap(f, np.hstack([m.array for m in ms]).astype(f.dtype))


def vstack(*ms: Matrix, cols: int | None = None, field: Field | None = None) -> Matrix:
    if not ms:
        if cols is None or field is None:
            raise ValueError("empty vstack needs cols and field")
        return Matrix.zeros(field, 0, cols)
    f = _fields(*ms)
    if len({m.cols for m in ms}) > 1:
        raise ValueError("vstack column mismatch")
    return _wrap(f, np.vstack([m.array for m in ms]).astype(f.dtype))


def block_diag(*ms: Matrix, field: Field | None = None) -> Matrix:
    if not ms:
        if field is None:
            raise ValueError("empty block_diag needs a field")
        return Matrix.zeros(field, 0, 0)
    f = _fields(*ms)
    out = f.zeros((sum(m.rows for m in ms), sum(m.cols for m in ms)))
    r = c = 0
    for m in ms:
        out[r : r + m.rows, c : c + m.cols] = m.array
        r += m.rows
        c += m.cols
    return _wrap(f, out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    f = _fields(a, b)
    if 0 in a.shape or 0 in b.shape:
        return Matrix.zeros(f, a.rows * b.rows, a.cols * b.cols)
    return _wrap(f, f.reduce(np.kron(a.array, b.array)).astype(f.dtype))


def rank_and_kernel(m: Matrix) -> tuple[int, Matrix]:
    """Rank of ``m`` and a basis of its kernel as the columns of a matrix.

    Basis vector ``j`` has a one in the ``j``-th free column of the reduced
    echelon form and zeros in the other free columns.
    """
    r, piv = _rref(m.array, m.field)
    n = m.cols
    free = [c for c in range(n) if c not in set(piv)]
    k = m.field.zeros((n, len(free)))
    one = m.field.coerce(1)
    for j, fc in enumerate(free):
        k[fc, j] = one
        for i, pc in enumerate(piv):
            k[pc, j] = -r[i, fc]
    return len(piv), _wrap(m.field, m.field.reduce(k))


@dataclass(frozen=True)
class SolveResult:
    solution: Matrix | None
    dimension: int  # dimension of the affine solution space (cols(a) - rank(a))

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def solve_linear(a: Matrix, b: Matrix) -> SolveResult:
    """Solve ``a @ x == b`` exactly.

    Returns the particular solution with all free variables set to zero, or
    ``solution=None`` when the system is inconsistent.
    """
    f = _fields(a, b)
    if a.rows != b.rows:
        raise ValueError(f"row mismatch {a.shape} vs {b.shape}")
    n = a.cols
    aug = np.hstack([a.array, b.array]).astype(f.dtype) if a.rows else f.zeros((0, n + b.cols))
    r, piv = _rref(aug, f)
    dim = n - sum(1 for c in piv if c < n)
    if any(c >= n for c in piv):
        return SolveResult(None, dim)
    x = f.zeros((n, b.cols))
    for i, c in enumerate(piv):
        x[c, :] = r[i, n:]
    return SolveResult(_wrap(f, x), dim)


def cokernel_data(m: Matrix) -> tuple[Matrix, int]:
    """Projection onto the cokernel of ``m`` and its dimension.

    ``proj`` has full row rank, ``proj @ m == 0`` and its rows are the
    echelon basis of the left null space of ``m``.
    """
    _, k = rank_and_kernel(m.T)
    return k.T, k.cols


@dataclass(frozen=True)
class JordanData:
    """Jordan decomposition of a nilpotent operator.

    ``basis`` holds, for each block of size ``s``, the chain
    ``v, N v, ..., N^(s-1) v`` as consecutive columns, so that
    ``basis^-1 @ N @ basis`` is block diagonal with ones on the subdiagonal.
    """

    blocks: tuple[int, ...]
    basis: Matrix


def jordan_matrix(field: Field, blocks: Iterable[int]) -> Matrix:
    """Nilpotent Jordan matrix with subdiagonal ones in each block."""
    blocks = list(blocks)
    n = sum(blocks)
    a = field.zeros((n, n))
    one = field.coerce(1)
    off = 0
    for s in blocks:
        for i in range(s - 1):
            a[off + i + 1, off + i] = one
        off += s
    return _wrap(field, a)


def nilpotent_jordan(n: Matrix) -> JordanData:
    """Jordan block sizes (descending) and a chain basis for a nilpotent matrix."""
    d = n.rows
    if d != n.cols:
        raise NotNilpotent("matrix is not square")
    f = n.field
    if not n.power(d).is_zero():
        raise NotNilpotent("matrix is not nilpotent")
    if d == 0:
        return JordanData((), Matrix.zeros(f, 0, 0))
    powers = [Matrix.identity(f, d)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ n)
    index = len(powers) - 1
    kernels = [rank_and_kernel(p)[1] for p in powers]
    chains: list[tuple[Matrix, int]] = []
    for s in range(index, 0, -1):
        span = [kernels[s - 1]] + [powers[t - s] @ v for v, t in chains]
        cur = hstack(*span)
        r = cur.rank()
        ks = kernels[s]
        for j in range(ks.cols):
            col = ks[:, j : j + 1]
            trial = hstack(cur, col)
            if trial.rank() > r:
                cur, r = trial, r + 1
                chains.append((col, s))
    cols = [powers[i] @ v for v, s in chains for i in range(s)]
    basis = hstack(*cols)
    return JordanData(tuple(s for _, s in chains), basis)
