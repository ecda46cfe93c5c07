"""Exact arithmetic substrate: rationals, real quadratic values, dense matrices.

Nothing in this module ever touches a float.  Rationals are
``fractions.Fraction``; quadratic irrationalities live in :class:`QuadValue`,
an element of Q(sqrt(d1), sqrt(d2)) for squarefree d1, d2; matrices are
dense, immutable, and generic over any exact scalar (int, Fraction,
QuadValue) supporting ring operations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

_Scalar = int | Fraction


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n = m*m*d with d squarefree; return (m, d).  Requires n >= 0."""
    if n < 0:
        raise ValueError("negative argument has no real square root")
    if n == 0:
        return 0, 1
    m, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return m, d * n


def _squarefree_part(n: int) -> int:
    return squarefree_decomposition(n)[1]


class QuadValue:
    """Exact element of Q(sqrt(r1), sqrt(r2)), r1 < r2 squarefree.

    Stored as c0 + c1*sqrt(r1) + c2*sqrt(r2) + c3*sqrt(r3) with
    r3 = squarefree_part(r1*r2), all coefficients Fraction.  Radicals with
    zero coefficient are dropped, so equal values from different contexts
    compare equal coefficient-wise.  Values are immutable; arithmetic is a
    commutative ring plus division by rational scalars.
    """

    __slots__ = ("_c", "_r")

    def __init__(self, value: _Scalar | QuadValue = 0):
        if isinstance(value, QuadValue):
            self._c, self._r = value._c, value._r
        else:
            self._c = (Fraction(value), Fraction(0), Fraction(0), Fraction(0))
            self._r = (0, 0)

    @classmethod
    def _make(cls, coeffs, rads) -> QuadValue:
        """Build from raw basis data, normalising to canonical form."""
        terms: dict[int, Fraction] = {}
        r1, r2 = rads
        rational = Fraction(coeffs[0])
        for rad, c in zip((r1, r2, _squarefree_part(r1 * r2) if r1 and r2 else 0), coeffs[1:]):
            if not c:
                continue
            if rad == 1:
                rational += c
            elif rad > 1:
                terms[rad] = terms.get(rad, Fraction(0)) + c
        coeffs = (rational,) + tuple(coeffs[1:])
        active = sorted(d for d, c in terms.items() if c)
        v = object.__new__(cls)
        if not active:
            v._c = (Fraction(coeffs[0]), Fraction(0), Fraction(0), Fraction(0))
            v._r = (0, 0)
        elif len(active) == 1:
            d = active[0]
            v._c = (Fraction(coeffs[0]), terms[d], Fraction(0), Fraction(0))
            v._r = (d, 0)
        else:
            if len(active) == 3 and active[2] != _squarefree_part(active[0] * active[1]):
                raise ValueError("value needs more than two independent square roots")
            if len(active) > 3:
                raise ValueError("value needs more than two independent square roots")
            d1, d2 = active[0], active[1]
            d3 = _squarefree_part(d1 * d2)
            c3 = terms.get(d3, Fraction(0)) if len(active) == 3 else Fraction(0)
            v._c = (Fraction(coeffs[0]), terms[d1], terms[d2], c3)
            v._r = (d1, d2)
        return v

    @classmethod
    def sqrt(cls, x: _Scalar) -> QuadValue:
        """Exact square root of a non-negative rational."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("negative argument has no real square root")
        m, d = squarefree_decomposition(x.numerator * x.denominator)
        coeff = Fraction(m, x.denominator)
        if d == 1:
            return cls(coeff)
        return cls._make((Fraction(0), coeff, Fraction(0), Fraction(0)), (d, 0))

    # -- canonical context handling ------------------------------------

    def _terms(self) -> dict[int, Fraction]:
        """Radicand -> coefficient for the active radical terms."""
        out = {}
        r1, r2 = self._r
        if r1:
            if self._c[1]:
                out[r1] = self._c[1]
            if r2:
                if self._c[2]:
                    out[r2] = self._c[2]
                if self._c[3]:
                    out[_squarefree_part(r1 * r2)] = self._c[3]
        return out

    @staticmethod
    def _unify(a: QuadValue, b: QuadValue):
        """Common context (r1, r2) and both coefficient 4-tuples in it."""
        rads = sorted(set(a._terms()) | set(b._terms()))
        if len(rads) == 3 and rads[2] != _squarefree_part(rads[0] * rads[1]):
            raise ValueError("values span more than two independent square roots")
        if len(rads) > 3:
            raise ValueError("values span more than two independent square roots")
        r1 = rads[0] if rads else 0
        r2 = rads[1] if len(rads) > 1 else 0
        slot = {r1: 1, r2: 2}
        if r1 and r2:
            slot[_squarefree_part(r1 * r2)] = 3

        def embed(v: QuadValue):
            c = [v._c[0], Fraction(0), Fraction(0), Fraction(0)]
            for d, coeff in v._terms().items():
                c[slot[d]] = coeff
            return c

        return (r1, r2), embed(a), embed(b)

    @staticmethod
    def _coerce(x) -> QuadValue | None:
        if isinstance(x, QuadValue):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadValue(x)
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> QuadValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        rads, a, b = self._unify(self, o)
        return self._make(tuple(x + y for x, y in zip(a, b)), rads)

    __radd__ = __add__

    def __neg__(self) -> QuadValue:
        return self._make(tuple(-x for x in self._c), self._r)

    def __sub__(self, other) -> QuadValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadValue:
        return (-self) + other

    def __mul__(self, other) -> QuadValue:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        (r1, r2), a, b = self._unify(self, o)
        if not r1:
            return self._make((a[0] * b[0], 0, 0, 0), (0, 0))
        if not r2:
            return self._make(
                (a[0] * b[0] + a[1] * b[1] * r1, a[0] * b[1] + a[1] * b[0], 0, 0),
                (r1, 0),
            )
        # r3 = squarefree_part(r1*r2);  with r1 = g*u, r2 = g*w (g = gcd):
        # sqrt(r1)sqrt(r2) = g sqrt(r3), sqrt(r1)sqrt(r3) = u sqrt(r2),
        # sqrt(r2)sqrt(r3) = w sqrt(r1).
        g = gcd(r1, r2)
        u, w = r1 // g, r2 // g
        r3 = u * w
        c0 = a[0] * b[0] + a[1] * b[1] * r1 + a[2] * b[2] * r2 + a[3] * b[3] * r3
        c1 = a[0] * b[1] + a[1] * b[0] + w * (a[2] * b[3] + a[3] * b[2])
        c2 = a[0] * b[2] + a[2] * b[0] + u * (a[1] * b[3] + a[3] * b[1])
        c3 = a[0] * b[3] + a[3] * b[0] + g * (a[1] * b[2] + a[2] * b[1])
        return self._make((c0, c1, c2, c3), (r1, r2))

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadValue:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError
        q = Fraction(1, 1) / Fraction(other)
        return self._make(tuple(x * q for x in self._c), self._r)

    # -- predicates and conversions ---------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self._c)

    @property
    def is_rational(self) -> bool:
        return self._r == (0, 0)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self._c[0]

    @property
    def radicands(self) -> tuple[int, int]:
        return self._r

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c and self._r == o._r

    def __hash__(self):
        if self.is_rational:
            return hash(self._c[0])
        return hash((self._c, self._r))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        r1, r2 = self._r
        rads = (r1, r2, _squarefree_part(r1 * r2) if r1 and r2 else 0)
        parts = []
        if self._c[0] or self.is_rational:
            parts.append(str(self._c[0]))
        for c, d in zip(self._c[1:], rads):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            coeff = "" if mag == 1 else str(mag)
            parts.append(f"{sign}{coeff}√{d}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QuadValue({self})"


def quad_roots(p: _Scalar, q: _Scalar) -> tuple[QuadValue, QuadValue]:
    """Exact roots (r, s), r >= s, of x**2 - p*x - q.

    The discriminant p**2 + 4q must be non-negative; the roots satisfy
    r + s = p and r*s = -q.
    """
    p, q = Fraction(p), Fraction(q)
    disc = p * p + 4 * q
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}: roots are not real")
    root = QuadValue.sqrt(disc)
    return (root + p) / 2, (QuadValue(p) - root) / 2


class Matrix:
    """Immutable dense matrix over exact scalars.

    Entries may be int, Fraction or QuadValue (mixed is fine as long as the
    operations requested stay inside the ring).  Row-major storage.
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._e = entries

    @classmethod
    def from_rows(cls, data) -> Matrix:
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(rows, cols, [x for r in data for x in r])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [1] * (rows * cols))

    def entry(self, i: int, j: int):
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})"
            )
        n, m, k = self.rows, other.cols, self.cols
        bt = other.transpose()
        out = []
        for i in range(n):
            ri = self.row(i)
            for j in range(m):
                cj = bt.row(j)
                acc = ri[0] * cj[0]
                for t in range(1, k):
                    acc = acc + ri[t] * cj[t]
                out.append(acc)
        return Matrix(n, m, out)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in subtraction")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def __mul__(self, scalar) -> Matrix:
        return Matrix(self.rows, self.cols, [a * scalar for a in self._e])

    def __rmul__(self, scalar) -> Matrix:
        return Matrix(self.rows, self.cols, [scalar * a for a in self._e])

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            [self._e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = self._e[0]
        for i in range(1, self.rows):
            acc = acc + self.entry(i, i)
        return acc

    def row_sums(self) -> list:
        return [sum(self.row(i)[1:], self.row(i)[0]) for i in range(self.rows)]

    @property
    def is_zero(self) -> bool:
        return all(not x for x in self._e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            (self.rows, self.cols) == (other.rows, other.cols)
            and all(a == b for a, b in zip(self._e, other._e))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product (dimension mismatch raises ValueError)."""
    return a @ b
