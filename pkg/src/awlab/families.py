"""Monic orthogonal families from three-term recurrences.

Includes the Askey-Wilson recurrence in closed form, the Rogers q-Hermite
recurrence (base q and the q**2 / q**-2 variants), recurrences forced by a
Pearson pair (phi, psi), and the symmetric Askey-Wilson parameter set
(a, -a, i/(t a), -i/(t a)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .poly import Poly
from .scalar import ONE, ZERO, QContext, Scalar, alpha_n, as_scalar, gamma_n

__all__ = [
    "FamilyError",
    "MissingCoefficient",
    "NotRegular",
    "RestrictionViolated",
    "DegenerateDivisor",
    "ExcludedParameter",
    "TTRRSpec",
    "AWParams",
    "PearsonPair",
    "HermiteVariant",
    "generate_ops",
    "aw_ttrr",
    "hermite_ttrr",
    "pearson_ttrr",
    "special_aw_params",
    "elementary_symmetric",
    "aw_pearson_pair",
]


class FamilyError(ValueError):
    """Invalid family data."""


class MissingCoefficient(FamilyError):
    pass


class NotRegular(FamilyError):
    def __init__(self, n: int):
        super().__init__(f"C_{n} = 0: the recurrence is not regular at n = {n}")
        self.n = n


class RestrictionViolated(FamilyError):
    def __init__(self, n: int, factor: str):
        super().__init__(f"Askey-Wilson restriction violated at n = {n}: factor {factor} vanishes")
        self.n = n
        self.factor = factor


class DegenerateDivisor(FamilyError):
    def __init__(self, n: int, k: int):
        super().__init__(f"d_{k} = 0 while computing the recurrence at n = {n}")
        self.n = n
        self.k = k


class ExcludedParameter(FamilyError):
    def __init__(self, n: int, which: str):
        super().__init__(f"parameter a lies in the excluded set: a = {which} at n = {n}")
        self.n = n
        self.which = which


@dataclass(frozen=True)
class TTRRSpec:
    """B_0..B_M and C_1..C_M of P_{n+1} = (x - B_n) P_n - C_n P_{n-1}.

    ``C`` is stored with ``C[0]`` holding C_1.  Use :meth:`b` and :meth:`c`
    for 1-based indexing of C.
    """

    B: tuple
    C: tuple

    def __post_init__(self):
        object.__setattr__(self, "B", tuple(as_scalar(v) for v in self.B))
        object.__setattr__(self, "C", tuple(as_scalar(v) for v in self.C))
        for k, c in enumerate(self.C, start=1):
            if not c:
                raise NotRegular(k)

    @property
    def max_n(self) -> int:
        return min(len(self.B) - 1, len(self.C))

    def b(self, n: int) -> Scalar:
        if not 0 <= n < len(self.B):
            raise MissingCoefficient(f"B_{n} is not available (have B_0..B_{len(self.B) - 1})")
        return self.B[n]

    def c(self, n: int) -> Scalar:
        if not 1 <= n <= len(self.C):
            raise MissingCoefficient(f"C_{n} is not available (have C_1..C_{len(self.C)})")
        return self.C[n - 1]

    def with_c(self, n: int, value) -> "TTRRSpec":
        C = list(self.C)
        C[n - 1] = as_scalar(value)
        return TTRRSpec(self.B, tuple(C))

    def to_json(self, ctx: QContext = None) -> dict:
        from .scalar import format_rational

        out = {"schema": 1}
        if ctx is not None:
            out["t"] = format_rational(ctx.t)
        out["B"] = [str(v) for v in self.B]
        out["C"] = [str(v) for v in self.C]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "TTRRSpec":
        if obj.get("schema", 1) != 1:
            raise FamilyError(f"unsupported TTRR schema {obj.get('schema')!r}")
        return cls(
            tuple(Scalar.from_json(v) for v in obj["B"]),
            tuple(Scalar.from_json(v) for v in obj["C"]),
        )


def generate_ops(ttrr: TTRRSpec, N: int) -> list:
    """Monic P_0..P_N from the recurrence, with P_{-1} = 0."""
    if N < 0:
        raise ValueError("N must be >= 0")
    x = Poly.x()
    P = [Poly([ONE])]
    prev = Poly()
    for n in range(N):
        nxt = (x - ttrr.b(n)) * P[n]
        if n >= 1:
            nxt = nxt - prev * ttrr.c(n)
        prev = P[n]
        P.append(nxt)
    return P


@dataclass(frozen=True)
class AWParams:
    a1: Scalar
    a2: Scalar
    a3: Scalar
    a4: Scalar

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def as_tuple(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4)

    def check_restrictions(self, ctx: QContext, N: int) -> None:
        a1, a2, a3, a4 = self.as_tuple()
        s4 = a1 * a2 * a3 * a4
        factors = [
            ("(1 - a1a2a3a4 q^n)", s4),
            ("(1 - a1a2 q^n)", a1 * a2),
            ("(1 - a1a3 q^n)", a1 * a3),
            ("(1 - a1a4 q^n)", a1 * a4),
            ("(1 - a2a3 q^n)", a2 * a3),
            ("(1 - a2a4 q^n)", a2 * a4),
            ("(1 - a3a4 q^n)", a3 * a4),
        ]
        for n in range(N + 1):
            qn = ctx.q_pow(n)
            for label, prod in factors:
                if not (1 - prod * qn):
                    raise RestrictionViolated(n, label)


def _aw_b(ctx: QContext, p: AWParams, n: int) -> Scalar:
    a1, a2, a3, a4 = p.as_tuple()
    s4 = a1 * a2 * a3 * a4
    qp = ctx.q_pow
    if n == 0:
        # the factor (1 - s4 q^{n-1}) cancels against the denominator
        first = (1 - a1 * a2) * (1 - a1 * a3) * (1 - a1 * a4) / (a1 * (1 - s4))
        return (a1 + a1.inverse() - first) / 2
    qn = qp(n)
    first = (
        (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn) * (1 - s4 * qp(n - 1))
        / (a1 * (1 - s4 * qp(2 * n - 1)) * (1 - s4 * qp(2 * n)))
    )
    second = (
        a1 * (1 - qn) * (1 - a2 * a3 * qp(n - 1)) * (1 - a2 * a4 * qp(n - 1)) * (1 - a3 * a4 * qp(n - 1))
        / ((1 - s4 * qp(2 * n - 1)) * (1 - s4 * qp(2 * n - 2)))
    )
    return (a1 + a1.inverse() - first - second) / 2


def _aw_c_next(ctx: QContext, p: AWParams, n: int) -> Scalar:
    """C_{n+1}."""
    a1, a2, a3, a4 = p.as_tuple()
    s4 = a1 * a2 * a3 * a4
    qp = ctx.q_pow
    qn = qp(n)
    six = (
        (1 - a1 * a2 * qn) * (1 - a1 * a3 * qn) * (1 - a1 * a4 * qn)
        * (1 - a2 * a3 * qn) * (1 - a2 * a4 * qn) * (1 - a3 * a4 * qn)
    )
    if n == 0:
        # (1 - s4 q^{-1}) appears in numerator and denominator
        return (1 - qp(1)) * six / (4 * (1 - s4) * (1 - s4) * (1 - s4 * qp(1)))
    num = (1 - qp(n + 1)) * (1 - s4 * qp(n - 1)) * six
    den = 4 * (1 - s4 * qp(2 * n - 1)) * (1 - s4 * qp(2 * n)) ** 2 * (1 - s4 * qp(2 * n + 1))
    return num / den


def aw_ttrr(ctx: QContext, p: AWParams, N: int) -> TTRRSpec:
    """Closed-form B_0..B_N, C_1..C_N of the monic Askey-Wilson polynomials.

    The formulas divide by the first parameter; since the family is
    symmetric in its four parameters a zero a1 is swapped with a nonzero one.
    """
    p.check_restrictions(ctx, N)
    params = list(p.as_tuple())
    if not params[0]:
        nz = next((k for k, v in enumerate(params) if v), None)
        if nz is None:
            raise FamilyError("all Askey-Wilson parameters vanish; use hermite_ttrr")
        params[0], params[nz] = params[nz], params[0]
        p = AWParams(*params)
    B = tuple(_aw_b(ctx, p, n) for n in range(N + 1))
    C = tuple(_aw_c_next(ctx, p, n) for n in range(N))
    return TTRRSpec(B, C)


class HermiteVariant(enum.Enum):
    base_q = "base_q"
    base_q2 = "base_q2"
    base_qminus2 = "base_qminus2"


def hermite_ttrr(ctx: QContext, variant: HermiteVariant, N: int) -> TTRRSpec:
    """Rogers q-Hermite recurrence: B_n = 0, C_{n+1} = (1 - Q^{n+1})/4.

    Q is q, q**2 or q**-2 depending on ``variant``.
    """
    variant = HermiteVariant(variant)
    step = {HermiteVariant.base_q: 1, HermiteVariant.base_q2: 2, HermiteVariant.base_qminus2: -2}[variant]
    B = (ZERO,) * (N + 1)
    C = tuple((1 - ctx.q_pow(step * (n + 1))) / 4 for n in range(N))
    return TTRRSpec(B, C)


@dataclass(frozen=True)
class PearsonPair:
    """phi = a x^2 + b x + c, psi = d x + e with d != 0."""

    phi: Poly
    psi: Poly

    def __post_init__(self):
        if self.phi.degree > 2:
            raise FamilyError("phi must have degree at most 2")
        if self.psi.degree != 1:
            raise FamilyError("psi must have degree exactly 1")

    @property
    def abcde(self) -> tuple:
        return (self.phi.coeff(2), self.phi.coeff(1), self.phi.coeff(0), self.psi.coeff(1), self.psi.coeff(0))

    def scaled(self, s) -> "PearsonPair":
        return PearsonPair(self.phi * s, self.psi * s)


def pearson_ttrr(ctx: QContext, pp: PearsonPair, N: int) -> TTRRSpec:
    """Recurrence of the monic OPS whose functional solves Dq(phi u) = Sq(psi u)."""
    a, b, c, d, e = pp.abcde
    s = ctx.alpha * ctx.alpha - 1

    def dn(k: int) -> Scalar:
        return a * gamma_n(ctx, k) + d * alpha_n(ctx, k)

    def en(k: int) -> Scalar:
        return b * gamma_n(ctx, k) + e * alpha_n(ctx, k)

    def need(n: int, k: int) -> Scalar:
        v = dn(k)
        if not v:
            raise DegenerateDivisor(n, k)
        return v

    def phi_n(n: int, z: Scalar) -> Scalar:
        return (
            (d * s * gamma_n(ctx, 2 * n) + a * alpha_n(ctx, 2 * n)) * (z * z - Scalar(1) / 2)
            + (b * alpha_n(ctx, n) + e * s * gamma_n(ctx, n)) * z
            + c
            + a / 2
        )

    B = []
    for n in range(N + 1):
        val = -gamma_n(ctx, n + 1) * en(n) / need(n, 2 * n)
        if n >= 1:
            val = val + gamma_n(ctx, n) * en(n - 1) / need(n, 2 * n - 2)
        B.append(val)
    C = []
    for n in range(N):
        z0 = -en(n) / need(n, 2 * n)
        val = -gamma_n(ctx, n + 1) * dn(n - 1) / (need(n, 2 * n - 1) * need(n, 2 * n + 1)) * phi_n(n, z0)
        if not val:
            raise NotRegular(n + 1)
        C.append(val)
    return TTRRSpec(tuple(B), tuple(C))


def special_aw_params(ctx: QContext, a, N: int = 20) -> AWParams:
    """(a, -a, i/(t a), -i/(t a)), after checking a against the exclusion set."""
    a = as_scalar(a)
    if not a:
        raise ExcludedParameter(0, "0")
    i = Scalar.i()
    for n in range(N + 1):
        for label, v in (
            (f"q^({n - 1}/2)", ctx.t_pow(n - 1)),
            (f"-q^({n - 1}/2)", -ctx.t_pow(n - 1)),
            (f"i q^(-{n}/2)", i * ctx.t_pow(-n)),
            (f"-i q^(-{n}/2)", -i * ctx.t_pow(-n)),
        ):
            if a == v:
                raise ExcludedParameter(n, label)
    a3 = i / (a * ctx.t)
    return AWParams(a, -a, a3, -a3)


def elementary_symmetric(values: Sequence) -> tuple:
    """(sigma_1, sigma_2, sigma_3, sigma_4) of four scalars."""
    e = [ONE, ZERO, ZERO, ZERO, ZERO]
    for v in values:
        for j in range(4, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return tuple(e[1:])


# Common factor applied to the Askey-Wilson second-order data to obtain the
# Pearson pair; B_n and C_n from pearson_ttrr are invariant under it, and it
# was fixed by matching B_0 and C_1 on a reference parameter set.
AW_PEARSON_SCALE = Scalar(1)


def aw_pearson_pair(ctx: QContext, p: AWParams) -> PearsonPair:
    """Pearson pair (phi, psi) of the Askey-Wilson functional.

    Built from the elementary symmetric functions of the parameters:
    phi = -q^{-1/2} (2(1+s4) x^2 - (s1+s3) x - 1 + s2 - s4),
    psi = 2/(1-q) (2(s4-1) x + s1 - s3).
    """
    s1, s2, s3, s4 = elementary_symmetric(p.as_tuple())
    tinv = Scalar(1 / ctx.t)
    phi = Poly([-1 + s2 - s4, -(s1 + s3), 2 * (1 + s4)]) * (-tinv)
    psi = Poly([s1 - s3, 2 * (s4 - 1)]) * Scalar(2 / (1 - ctx.q))
    return PearsonPair(phi, psi).scaled(AW_PEARSON_SCALE)
