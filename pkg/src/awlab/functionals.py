"""Linear functionals on polynomials, represented by truncated moments.

A :class:`MomentFunctional` knows <u, x^k> for k = 0..K and nothing more;
acting on a polynomial of degree above K raises :class:`DegreeOverflow`
instead of silently treating the unknown moments as zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .families import PearsonPair, TTRRSpec, generate_ops
from .poly import Poly, expand_in_basis
from .qops import dq, dq_pow, pn_k, sq, structural_polys
from .scalar import ONE, ZERO, QContext, Scalar, alpha_n, as_scalar, gamma_factorial, gamma_n

__all__ = [
    "DegreeOverflow",
    "ZeroNorm",
    "MomentFunctional",
    "moments_from_ttrr",
    "act",
    "left_mul",
    "dq_functional",
    "sq_functional",
    "pearson_residual",
    "dual_action",
    "simple_set_dual_action",
    "squared_norm",
    "FunctionalTag",
    "functional_identity_residual",
    "ttrr_from_moments",
]


class DegreeOverflow(ValueError):
    def __init__(self, degree: int, K: int):
        super().__init__(f"polynomial of degree {degree} exceeds functional truncation K = {K}")
        self.degree = degree
        self.K = K


class ZeroNorm(ArithmeticError):
    def __init__(self, n: int):
        super().__init__(f"<u, P_{n}^2> = 0: the functional is not regular")
        self.n = n


@dataclass(frozen=True)
class MomentFunctional:
    """Moments m[k] = <u, x^k>, k = 0..K."""

    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(as_scalar(v) for v in self.m))
        if not self.m:
            raise ValueError("a moment functional needs at least m_0")

    @property
    def K(self) -> int:
        return len(self.m) - 1

    def truncate(self, K: int) -> "MomentFunctional":
        if K > self.K:
            raise DegreeOverflow(K, self.K)
        return MomentFunctional(self.m[: K + 1])

    def normalized(self) -> "MomentFunctional":
        if not self.m[0]:
            raise ZeroDivisionError("cannot normalize a functional with m_0 = 0")
        inv = self.m[0].inverse()
        return MomentFunctional(tuple(v * inv for v in self.m))

    def __add__(self, other: "MomentFunctional") -> "MomentFunctional":
        K = min(self.K, other.K)
        return MomentFunctional(tuple(self.m[k] + other.m[k] for k in range(K + 1)))

    def __sub__(self, other: "MomentFunctional") -> "MomentFunctional":
        K = min(self.K, other.K)
        return MomentFunctional(tuple(self.m[k] - other.m[k] for k in range(K + 1)))

    def __mul__(self, s) -> "MomentFunctional":
        s = as_scalar(s)
        return MomentFunctional(tuple(v * s for v in self.m))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"K": self.K, "moments": [v.to_json() for v in self.m]}

    @classmethod
    def from_json(cls, obj: dict) -> "MomentFunctional":
        m = tuple(Scalar.from_json(v) for v in obj["moments"])
        if "K" in obj and obj["K"] != len(m) - 1:
            raise ValueError("K does not match the number of moments")
        return cls(m)


def act(u: MomentFunctional, f: Poly) -> Scalar:
    """<u, f>."""
    if f.degree > u.K:
        raise DegreeOverflow(f.degree, u.K)
    acc = ZERO
    for c, mk in zip(f.coeffs, u.m):
        if c:
            acc = acc + c * mk
    return acc


def moments_from_ttrr(ttrr: TTRRSpec, K: int) -> MomentFunctional:
    """Normalized moments forced by <u, 1> = 1 and <u, P_n> = 0 for 1 <= n <= K."""
    P = generate_ops(ttrr, K)
    m = [ONE]
    for n in range(1, K + 1):
        # P_n monic: m_n = - sum_{j<n} coef_j m_j
        acc = ZERO
        for j in range(n):
            c = P[n].coeff(j)
            if c:
                acc = acc + c * m[j]
        m.append(-acc)
    return MomentFunctional(tuple(m))


def left_mul(phi: Poly, u: MomentFunctional) -> MomentFunctional:
    """phi u, with <phi u, f> = <u, phi f>; K shrinks by deg phi."""
    if phi.is_zero():
        return MomentFunctional((ZERO,) * (u.K + 1))
    newK = u.K - phi.degree
    if newK < 0:
        raise DegreeOverflow(phi.degree, u.K)
    out = []
    for k in range(newK + 1):
        acc = ZERO
        for j, c in enumerate(phi.coeffs):
            if c:
                acc = acc + c * u.m[k + j]
        out.append(acc)
    return MomentFunctional(tuple(out))


def dq_functional(ctx: QContext, u: MomentFunctional) -> MomentFunctional:
    """Dq u with <Dq u, f> = -<u, Dq f>; K is kept."""
    return MomentFunctional(tuple(-act(u, dq(ctx, Poly.monomial(k))) for k in range(u.K + 1)))


def sq_functional(ctx: QContext, u: MomentFunctional) -> MomentFunctional:
    """Sq u with <Sq u, f> = <u, Sq f>; K is kept."""
    return MomentFunctional(tuple(act(u, sq(ctx, Poly.monomial(k))) for k in range(u.K + 1)))


def pearson_residual(ctx: QContext, pp: PearsonPair, u: MomentFunctional, K: int) -> list:
    """<Dq(phi u) - Sq(psi u), x^k> for k = 0..K.

    Equal to -<u, phi Dq x^k> - <u, psi Sq x^k>; needs u.K >= K + 1.
    """
    out = []
    for k in range(K + 1):
        xk = Poly.monomial(k)
        out.append(-act(u, pp.phi * dq(ctx, xk)) - act(u, pp.psi * sq(ctx, xk)))
    return out


def squared_norm(u: MomentFunctional, Pn: Poly) -> Scalar:
    return act(u, Pn * Pn)


def dual_action(u: MomentFunctional, P: Sequence[Poly], n: int, f: Poly) -> Scalar:
    """<a_n, f> for the dual basis a_n = P_n u / <u, P_n^2> of an OPS."""
    norm = squared_norm(u, P[n])
    if not norm:
        raise ZeroNorm(n)
    return act(u, P[n] * f) / norm


def simple_set_dual_action(Q: Sequence[Poly], n: int, f: Poly) -> Scalar:
    """Dual basis of an arbitrary simple set: the Q_n-coefficient of f.

    No orthogonality is assumed; ``Q`` must hold Q_0..Q_{deg f}.
    """
    coeffs = expand_in_basis(f, Q)
    return coeffs[n] if n < len(coeffs) else ZERO


def ttrr_from_moments(u: MomentFunctional, N: int) -> TTRRSpec:
    """B_n = <u, x P_n^2>/<u, P_n^2>, C_{n+1} = <u, P_{n+1}^2>/<u, P_n^2>.

    P_n is rebuilt on the fly from the coefficients already recovered, so
    this path shares nothing with the recurrence that produced the moments.
    Needs u.K >= 2N + 1.
    """
    x = Poly.x()
    P = [Poly([ONE])]
    B, C = [], []
    prev_norm = None
    prev_P = Poly()
    for n in range(N + 1):
        norm = squared_norm(u, P[n])
        if not norm:
            raise ZeroNorm(n)
        if n >= 1:
            C.append(norm / prev_norm)
        B.append(act(u, x * P[n] * P[n]) / norm)
        if n == N:
            break
        nxt = (x - B[n]) * P[n]
        if n >= 1:
            nxt = nxt - prev_P * C[n - 1]
        prev_P = P[n]
        P.append(nxt)
        prev_norm = norm
    return TTRRSpec(tuple(B), tuple(C))


class FunctionalTag(enum.Enum):
    FDu = "f-d-u"
    DnSu = "dn-s-u"
    DualDeriv = "dual-deriv"


def _dq_functional_pow(ctx: QContext, u: MomentFunctional, n: int) -> MomentFunctional:
    for _ in range(n):
        u = dq_functional(ctx, u)
    return u


def functional_identity_residual(
    ctx: QContext,
    tag: FunctionalTag,
    u: MomentFunctional = None,
    f: Poly = None,
    n: int = 1,
    K: int = None,
    P: Sequence[Poly] = None,
    k: int = 1,
) -> list:
    """Residuals of functional identities on the probes x^0..x^K.

    FDu:       f Dq u = Dq(Sq f u) - Sq(Dq f u)                  (needs u, f)
    DnSu:      alpha Dq^n Sq u = alpha_{n+1} Sq Dq^n u + gamma_n U1 Dq^{n+1} u
                                                                (needs u, n)
    DualDeriv: Dq^k a^[k]_n = (-1)^k gamma_{n+k}!/gamma_n! a_{n+k}
               where a^[k] is dual to P^[k] and a to P; u is the OPS
               functional of P                                   (needs u, P, n, k)
    """
    tag = FunctionalTag(tag)
    if tag is FunctionalTag.FDu:
        if K is None:
            K = u.K - f.degree - 1
        out = []
        Sf, Df = sq(ctx, f), dq(ctx, f)
        for j in range(K + 1):
            g = Poly.monomial(j)
            lhs = -act(u, dq(ctx, f * g))
            rhs = -act(u, Sf * dq(ctx, g)) - act(u, Df * sq(ctx, g))
            out.append(lhs - rhs)
        return out

    if tag is FunctionalTag.DnSu:
        U1 = structural_polys(ctx).U1
        a = ctx.alpha
        if K is None:
            K = u.K - 1
        lhs = _dq_functional_pow(ctx, sq_functional(ctx, u), n) * a
        r1 = sq_functional(ctx, _dq_functional_pow(ctx, u, n)) * alpha_n(ctx, n + 1)
        r2 = left_mul(U1, _dq_functional_pow(ctx, u, n + 1)) * gamma_n(ctx, n)
        return [lhs.m[j] - r1.m[j] - r2.m[j] for j in range(K + 1)]

    if tag is FunctionalTag.DualDeriv:
        if K is None:
            K = len(P) - 1 - k
        Pk = [pn_k(ctx, P, j, k) for j in range(len(P) - k)]
        scale = gamma_factorial(ctx, n + k) / gamma_factorial(ctx, n)
        sign = -1 if k % 2 else 1
        out = []
        for j in range(K + 1):
            g = Poly.monomial(j)
            # <Dq^k a^[k]_n, g> = (-1)^k <a^[k]_n, Dq^k g>
            lhs = simple_set_dual_action(Pk, n, dq_pow(ctx, g, k)) * sign
            rhs = dual_action(u, P, n + k, g) * scale * sign
            out.append(lhs - rhs)
        return out

    raise ValueError(f"unknown functional identity {tag!r}")
