"""Reference computations that share no code path with the package.

Each oracle works pointwise or from a closed form, so agreement with the
Laurent-route implementation is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from awlab.poly import Poly
from awlab.scalar import ONE, Scalar


def lattice_points(t: Fraction, z0: Fraction):
    """x0 = x(z0) and the two shifted points x(t z0), x(z0 / t)."""
    x = lambda z: (z + 1 / z) / 2  # noqa: E731
    return x(z0), x(t * z0), x(z0 / t)


def dq_at(f: Poly, t: Fraction, z0: Fraction) -> Scalar:
    """Divided difference of f across the two lattice neighbours of x(z0)."""
    _, xp, xm = lattice_points(t, z0)
    return (f(xp) - f(xm)) / (xp - xm)


def sq_at(f: Poly, t: Fraction, z0: Fraction) -> Scalar:
    _, xp, xm = lattice_points(t, z0)
    return (f(xp) + f(xm)) / 2


def interpolate(points: list) -> Poly:
    """Lagrange interpolation through (x_i, y_i)."""
    out = Poly()
    for i, (xi, yi) in enumerate(points):
        basis = Poly([ONE])
        denom = ONE
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom = denom * (xi - xj)
        out = out + basis * (yi / denom)
    return out


def operator_by_interpolation(f: Poly, t: Fraction, which: str) -> Poly:
    """Recover Dq f or Sq f from pointwise values at deg f + 1 lattice points."""
    n = max(f.degree, 0) + 1
    pts = []
    for k in range(n):
        z0 = Fraction(k + 2, 1) + Fraction(1, 7)
        x0, _, _ = lattice_points(t, z0)
        val = dq_at(f, t, z0) if which == "dq" else sq_at(f, t, z0)
        pts.append((Scalar(x0), val))
    return interpolate(pts)


def _qpoch_scalar(a: Scalar, q: Fraction, k: int) -> Scalar:
    acc = ONE
    for j in range(k):
        acc = acc * (1 - a * q ** j)
    return acc


def askey_wilson_monic(params, t: Fraction, n: int) -> Poly:
    """Monic AW polynomial from the terminating 4phi3 series.

    p_n = a^-n (ab, ac, ad; q)_n
          * sum_k (q^-n, abcd q^(n-1); q)_k / (ab, ac, ad, q; q)_k
                  * (a e^{i th}, a e^{-i th}; q)_k q^k
    with (a e^{i th}, a e^{-i th}; q)_k = prod_j (1 - 2 a q^j x + a^2 q^2j).
    """
    a, b, c, d = (params[i] if isinstance(params[i], Scalar) else Scalar(params[i]) for i in range(4))
    q = t * t
    s4 = a * b * c * d
    total = Poly()
    for k in range(n + 1):
        coef = _qpoch_scalar(Scalar(q ** -n), q, k) * _qpoch_scalar(s4 * q ** (n - 1), q, k)
        coef = coef * Scalar(q ** k)
        den = _qpoch_scalar(a * b, q, k) * _qpoch_scalar(a * c, q, k) * _qpoch_scalar(a * d, q, k)
        den = den * _qpoch_scalar(Scalar(q), q, k)
        term = Poly([ONE])
        for j in range(k):
            qj = Scalar(q ** j)
            term = term * Poly([1 + a * a * qj * qj, -2 * a * qj])
        total = total + term * (coef / den)
    if total.is_zero():
        return total
    return total.monic()


def hermite_monic_explicit(Q: Fraction, n: int) -> Poly:
    """Monic continuous q-Hermite polynomial in base Q:
    H_n(x) = sum_k [n choose k]_Q e^{i(n-2k)th}, monic H_n = H_n / 2^n."""

    def qbinom(m, k):
        num = ONE
        for j in range(k):
            num = num * (1 - Scalar(Q) ** (m - j)) / (1 - Scalar(Q) ** (j + 1))
        return num

    def cheb(m):
        a, b = Poly([ONE]), Poly.x()
        if m == 0:
            return a
        for _ in range(m - 1):
            a, b = b, Poly.x() * b * 2 - a
        return b

    total = Poly()
    for k in range(n + 1):
        # e^{i m th} and its mirror term pair up into T_|m|; imaginary parts cancel
        m = abs(n - 2 * k)
        total = total + cheb(m) * qbinom(n, k)
    return total.monic() if not total.is_zero() else total

