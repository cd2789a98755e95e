"""Polynomials over Q(i), their symmetric Laurent form, and exact linear algebra.

A polynomial f(x) is carried in the power basis.  Substituting
x = (z + 1/z)/2 gives a Laurent polynomial invariant under z -> 1/z, stored
as ``c[0] + sum_k c[k] * (z**k + z**-k)``; this is the form in which the
Askey-Wilson shifts z -> t*z, z -> z/t act diagonally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Poly",
    "SymLaurent",
    "LaurentRemainderError",
    "to_laurent",
    "from_laurent",
    "solve_nullspace",
    "expand_in_basis",
]

_HALF = Fraction(1, 2)


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([as_scalar(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _of(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._of((ZERO, ONE))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic normalization")
        inv = self.lc().inverse()
        return Poly._of(tuple(c * inv for c in self.coeffs))

    def __call__(self, x0) -> Scalar:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return as_scalar(acc)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._of(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._of(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly._of(())
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
            return Poly._of(_trim(out))
        c = as_scalar(other)
        if not c:
            return Poly._of(())
        return Poly._of(tuple(v * c for v in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_scalar(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        inv = c.inverse()
        return Poly._of(tuple(v * inv for v in self.coeffs))

    def __pow__(self, k: int):
        result = Poly._of((ONE,))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if c.re and c.im:
                cs = f"({cs})"
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, arr: Sequence) -> "Poly":
        return cls(Scalar.from_json(c) for c in arr)


class SymLaurent:
    """F(z) = c[0] + sum_{k>=1} c[k] (z^k + z^-k)."""

    __slots__ = ("c",)

    def __init__(self, c: Iterable = ()):
        object.__setattr__(self, "c", _trim([as_scalar(v) for v in c]))

    def __setattr__(self, name, value):
        raise AttributeError("SymLaurent is immutable")

    @classmethod
    def _of(cls, c: tuple) -> "SymLaurent":
        s = object.__new__(cls)
        object.__setattr__(s, "c", c)
        return s

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __add__(self, other: "SymLaurent") -> "SymLaurent":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] = out[k] + v
        return SymLaurent._of(_trim(out))

    def __mul__(self, other):
        if not isinstance(other, SymLaurent):
            s = as_scalar(other)
            return SymLaurent._of(_trim([v * s for v in self.c]))
        a, b = self.c, other.c
        if not a or not b:
            return SymLaurent._of(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for j, aj in enumerate(a):
            if not aj:
                continue
            for k, bk in enumerate(b):
                p = aj * bk
                if not p:
                    continue
                if j == 0 or k == 0:
                    out[j + k] = out[j + k] + p
                else:
                    # (z^j + z^-j)(z^k + z^-k) = (z^{j+k} + ...) + (z^{j-k} + z^{k-j})
                    out[j + k] = out[j + k] + p
                    if j == k:
                        out[0] = out[0] + 2 * p
                    else:
                        d = abs(j - k)
                        out[d] = out[d] + p
        return SymLaurent._of(_trim(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymLaurent) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"SymLaurent({[str(v) for v in self.c]})"

    def __call__(self, z0) -> Scalar:
        z0 = as_scalar(z0)
        zi = z0.inverse()
        acc = ZERO
        zk, zik = ONE, ONE
        for k, ck in enumerate(self.c):
            if k == 0:
                acc = acc + ck
            else:
                zk = zk * z0
                zik = zik * zi
                acc = acc + ck * (zk + zik)
        return acc

    def to_full(self) -> list:
        """Coefficient list for exponents -n..n."""
        n = self.degree
        full = [ZERO] * (2 * n + 1)
        for k, ck in enumerate(self.c):
            full[n + k] = ck
            if k:
                full[n - k] = ck
        return full


def to_laurent(f: Poly) -> SymLaurent:
    """Substitute x = (z + 1/z)/2 exactly (Horner in the symmetric basis)."""
    acc: list = []
    for coef in reversed(f.coeffs):
        # acc <- acc * x
        new = [ZERO] * (len(acc) + 1)
        for k, ck in enumerate(acc):
            if not ck:
                continue
            h = ck * _HALF
            if k == 0:
                new[1] = new[1] + h
            else:
                new[k + 1] = new[k + 1] + h
                if k == 1:
                    new[0] = new[0] + ck
                else:
                    new[k - 1] = new[k - 1] + h
        if not new:
            new = [ZERO]
        new[0] = new[0] + coef
        acc = new
    return SymLaurent._of(_trim(acc))


def _chebyshev_t(n: int) -> list:
    """Power-basis coefficients (Fractions) of T_0..T_n."""
    ts = [Poly._of((ONE,)), Poly.x()]
    two_x = Poly._of((ZERO, Scalar(2)))
    while len(ts) <= n:
        ts.append(two_x * ts[-1] - ts[-2])
    return ts[: n + 1]


def from_laurent(F: SymLaurent) -> Poly:
    """Inverse of :func:`to_laurent`, using z^k + z^-k = 2 T_k(x)."""
    if not F.c:
        return Poly._of(())
    ts = _chebyshev_t(F.degree)
    out = Poly.const(F.c[0])
    for k in range(1, len(F.c)):
        if F.c[k]:
            out = out + ts[k] * (F.c[k] * 2)
    return out


class LaurentRemainderError(ArithmeticError):
    """A Laurent division that must be exact left a remainder."""


def divide_by_z_minus_invz(full: list) -> list:
    """Exact quotient of a Laurent polynomial (exponents -n..n) by z - 1/z.

    Returns coefficients for exponents -(n-1)..(n-1).
    """
    n = (len(full) - 1) // 2
    if n == 0:
        if full and full[0]:
            raise LaurentRemainderError("constant is not divisible by z - 1/z")
        return []
    work = list(full)
    quot = [ZERO] * (2 * n - 1)
    # exponent e lives at index e + n; quotient exponent e at index e + n - 1
    for e in range(n, -n + 1, -1):
        c = work[e + n]
        if not c:
            continue
        quot[e - 1 + n - 1] = c
        work[e + n] = ZERO
        work[e - 2 + n] = work[e - 2 + n] + c
    if any(work):
        raise LaurentRemainderError("nonzero remainder in division by z - 1/z")
    return quot


def solve_nullspace(M: Sequence[Sequence]) -> list:
    """Basis of the right nullspace of M by exact Gauss-Jordan elimination.

    Each basis vector has a 1 in its own free column and zeros in the other
    free columns.
    """
    rows = [[as_scalar(v) for v in row] for row in M]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                ri = rows[i]
                rr = rows[r]
                rows[i] = [ri[j] - f * rr[j] if rr[j] else ri[j] for j in range(ncols)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def expand_in_basis(f: Poly, basis: Sequence[Poly]) -> list:
    """Coefficients of f in a simple set basis[0..], deg basis[k] = k.

    Raises ValueError if deg f exceeds the available basis.
    """
    if f.degree >= len(basis):
        raise ValueError(f"degree {f.degree} exceeds basis size {len(basis)}")
    rem = f
    out = [ZERO] * (f.degree + 1)
    for k in range(f.degree, -1, -1):
        ck = rem.coeff(k)
        if ck:
            c = ck / basis[k].lc()
            out[k] = c
            rem = rem - basis[k] * c
    return out
