"""The Askey-Wilson divided-difference operator and its averaging companion.

Both operators are evaluated on the symmetric Laurent form of a polynomial:

    Dq f = [F(t z) - F(z/t)] / [(t - 1/t)(z - 1/z)/2]
    Sq f = [F(t z) + F(z/t)] / 2

where F(z) = f((z + 1/z)/2) and t = q**(1/2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .poly import Poly, SymLaurent, divide_by_z_minus_invz, from_laurent, to_laurent
from .scalar import ZERO, QContext, alpha_n, gamma_factorial, gamma_n

__all__ = [
    "dq",
    "sq",
    "dq_pow",
    "pn_k",
    "StructuralPolys",
    "structural_polys",
    "IdentityTag",
    "identity_residual",
]


def dq(ctx: QContext, f: Poly) -> Poly:
    """Askey-Wilson operator applied to ``f``; lowers the degree by one."""
    F, t = to_laurent(f), ctx.t
    n = F.degree
    if n <= 0:
        return Poly()
    # F(tz) - F(z/t) = sum_k c_k (t^k - t^-k)(z^k - z^-k)
    full = [ZERO] * (2 * n + 1)
    for k in range(1, n + 1):
        ck = F.c[k]
        if not ck:
            continue
        v = ck * (t ** k - t ** -k)
        full[n + k] = v
        full[n - k] = -v
    quot = divide_by_z_minus_invz(full)
    scale = 2 / (t - 1 / t)
    m = n - 1
    # quotient is symmetric; read off the non-negative exponents
    sym = [quot[m + k] * scale for k in range(m + 1)]
    if any(quot[m - k] != quot[m + k] for k in range(1, m + 1)):
        raise ArithmeticError("Dq produced a non-symmetric Laurent quotient")
    return from_laurent(SymLaurent(sym))


def sq(ctx: QContext, f: Poly) -> Poly:
    """Averaging operator; preserves degree, scales (z^k + z^-k) by alpha_k."""
    F = to_laurent(f)
    sym = [ck * alpha_n(ctx, k) for k, ck in enumerate(F.c)]
    return from_laurent(SymLaurent(sym))


def dq_pow(ctx: QContext, f: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("dq_pow needs k >= 0")
    for _ in range(k):
        if f.is_zero():
            break
        f = dq(ctx, f)
    return f


def pn_k(ctx: QContext, P: Sequence[Poly], n: int, k: int) -> Poly:
    """Monic normalization (gamma_n!/gamma_{n+k}!) Dq^k P_{n+k}."""
    if n < 0 or k < 0:
        raise IndexError("pn_k needs n, k >= 0")
    if n + k >= len(P):
        raise IndexError(f"P_{n + k} is not available (have {len(P)} members)")
    scale = gamma_factorial(ctx, n) / gamma_factorial(ctx, n + k)
    return dq_pow(ctx, P[n + k], k) * scale


@dataclass(frozen=True)
class StructuralPolys:
    U1: Poly
    U2: Poly


@lru_cache(maxsize=None)
def _structural(t) -> StructuralPolys:
    ctx = QContext(t)
    a = ctx.alpha
    s = a * a - 1
    return StructuralPolys(U1=Poly([0, s]), U2=Poly([-s, 0, s]))


def structural_polys(ctx: QContext) -> StructuralPolys:
    """U1 = (alpha^2 - 1) x and U2 = (alpha^2 - 1)(x^2 - 1)."""
    return _structural(ctx.t)


class IdentityTag(enum.Enum):
    ProductD = "product-d"
    ProductS = "product-s"
    SSquare = "s-square"
    FDxG = "f-dx-g"
    DnS = "dn-s"
    StartEq01 = "start-eq01"


def identity_residual(ctx: QContext, tag: IdentityTag, f: Poly, g: Poly = None, n: int = 1) -> Poly:
    """LHS - RHS of one of the universal operator identities.

    ``g`` is needed by the two-argument identities (ProductD, ProductS,
    FDxG); ``n`` is the iteration depth of DnS.  The result is always the
    zero polynomial when the implementation is right.
    """
    sp = structural_polys(ctx)
    U1, U2 = sp.U1, sp.U2
    a = ctx.alpha
    D = lambda p: dq(ctx, p)  # noqa: E731
    S = lambda p: sq(ctx, p)  # noqa: E731

    if tag in (IdentityTag.ProductD, IdentityTag.ProductS, IdentityTag.FDxG) and g is None:
        raise ValueError(f"{tag.name} needs a second polynomial g")

    if tag is IdentityTag.ProductD:
        return D(f * g) - (D(f) * S(g) + S(f) * D(g))
    if tag is IdentityTag.ProductS:
        return S(f * g) - (D(f) * D(g) * U2 + S(f) * S(g))
    if tag is IdentityTag.SSquare:
        return S(S(f)) * a - (S(U1 * D(f)) + U2 * D(D(f)) + f * a)
    if tag is IdentityTag.FDxG:
        ainv = a.inverse()
        inner = (S(f) - U1 * D(f) * ainv) * g
        return f * D(g) - (D(inner) - S(g * D(f)) * ainv)
    if tag is IdentityTag.DnS:
        if n < 0:
            raise ValueError("DnS needs n >= 0")
        lhs = dq_pow(ctx, S(f), n)
        rhs = S(dq_pow(ctx, f, n)) * alpha_n(ctx, n) + U1 * dq_pow(ctx, f, n + 1) * gamma_n(ctx, n)
        return lhs - rhs
    if tag is IdentityTag.StartEq01:
        w = U2 * (a * a) - U1 * U1
        return S(S(f)) * a - (w * D(D(f)) + U1 * D(S(f)) + f * a)
    raise ValueError(f"unknown identity tag {tag!r}")


