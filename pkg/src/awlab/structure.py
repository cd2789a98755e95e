"""Fitting and verification of structure relations and their proof steps.

A relation such as

    (a x^2 + b x + c) Dq P_n = a_n Sq P_{n+1} + b_n Sq P_n + c_n Sq P_{n-1}

is linear jointly in (a, b, c) and all the a_n, b_n, c_n, so fitting it over
n = 1..N is one exact nullspace problem.  Verification re-expands every
returned fit along a separate code path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .families import AWParams, TTRRSpec, elementary_symmetric
from .poly import Poly, expand_in_basis, solve_nullspace
from .qops import dq, dq_pow, sq, structural_polys
from .scalar import ONE, ZERO, QContext, Scalar, alpha_n, as_scalar, gamma_n

__all__ = [
    "StructureError",
    "OnlyTrivial",
    "DegenerateR3",
    "CZero",
    "Relation",
    "FirstTypeFit",
    "SecondOrderData",
    "ExpansionCoeffs",
    "Final01Result",
    "fit_first_type",
    "fit_second_type",
    "relation_residuals",
    "check_conditions_31",
    "Conditions31",
    "second_order_data",
    "ismail_residual",
    "aw_theorem_t_data",
    "expansion_final01",
    "hermite_system_residuals",
    "check_case_zero",
    "check_dqsq_hermite",
    "CaseZeroReport",
    "DqSqHermiteReport",
]


class StructureError(ValueError):
    pass


class OnlyTrivial(StructureError):
    def __init__(self, relation: "Relation", N: int):
        super().__init__(f"relation {relation.value} admits only the zero solution for n = 1..{N}")
        self.relation = relation
        self.N = N


class DegenerateR3(StructureError):
    def __init__(self):
        super().__init__("r_3 = c_3 + 2 a C_3 vanishes; second-order data undefined")


class CZero(StructureError):
    def __init__(self, n: int):
        super().__init__(f"C_{n} = 0 (or unavailable) while forming t_n = r_n / C_n")
        self.n = n


class Relation(enum.Enum):
    """Which structure relation a fit refers to.

    FIRST:  pi Dq P_n    = a_n Sq P_{n+1} + b_n Sq P_n + c_n Sq P_{n-1}
    DQSQ:   pi Dq Sq P_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1}
    SQDQ:   pi Sq Dq P_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1}
    """

    FIRST = "first-type"
    DQSQ = "second-DqSq"
    SQDQ = "second-SqDq"


@dataclass(frozen=True)
class FirstTypeFit:
    """One solution (a, b, c; a_n, b_n, c_n for n = 1..N) of a relation."""

    relation: Relation
    a: Scalar
    b: Scalar
    c: Scalar
    an: dict
    bn: dict
    cn: dict
    N: int

    @property
    def pi(self) -> Poly:
        return Poly([self.c, self.b, self.a])

    @property
    def cn_zero(self) -> list:
        """Indices n where c_n = 0 (the relation requires c_n != 0)."""
        return [n for n in range(1, self.N + 1) if not self.cn[n]]

    def scaled(self, s) -> "FirstTypeFit":
        s = as_scalar(s)
        sc = lambda d: {k: v * s for k, v in d.items()}  # noqa: E731
        return FirstTypeFit(self.relation, self.a * s, self.b * s, self.c * s, sc(self.an), sc(self.bn), sc(self.cn), self.N)

    def to_json(self) -> dict:
        rng = range(1, self.N + 1)
        return {
            "relation": self.relation.value,
            "pi": [str(self.c), str(self.b), str(self.a)],
            "a_n": [str(self.an[n]) for n in rng],
            "b_n": [str(self.bn[n]) for n in rng],
            "c_n": [str(self.cn[n]) for n in rng],
            "c_n_zero_at": self.cn_zero,
        }


def _ops_for(ctx: QContext, relation: Relation):
    """(operator on the LHS, operator on the RHS members)."""
    D = lambda p: dq(ctx, p)  # noqa: E731
    S = lambda p: sq(ctx, p)  # noqa: E731
    ident = lambda p: p  # noqa: E731
    if relation is Relation.FIRST:
        return D, S
    if relation is Relation.DQSQ:
        return (lambda p: D(S(p))), ident
    if relation is Relation.SQDQ:
        return (lambda p: S(D(p))), ident
    raise ValueError(relation)


def _normalize(vec: list) -> list:
    lead = next((v for v in vec[:3] if v), None)
    if lead is None:
        lead = vec[5] if vec[5] else next(v for v in vec if v)
    inv = lead.inverse()
    return [v * inv for v in vec]


def _fit(ctx: QContext, P: Sequence[Poly], N: int, relation: Relation, fixed_pi: Optional[Poly]) -> list:
    if N < 1:
        raise ValueError("N must be >= 1")
    if len(P) < N + 2:
        raise IndexError(f"need P_0..P_{N + 1}, have {len(P)} members")
    lhs_op, rhs_op = _ops_for(ctx, relation)
    x = Poly.x()
    npi = 1 if fixed_pi is not None else 3
    ncols = npi + 3 * N
    rows = []
    for n in range(1, N + 1):
        L = lhs_op(P[n])
        if fixed_pi is not None:
            pi_cols = {0: fixed_pi * L}
        else:
            pi_cols = {0: x * x * L, 1: x * L, 2: L}
        base = npi + 3 * (n - 1)
        cols = dict(pi_cols)
        cols[base] = -rhs_op(P[n + 1])
        cols[base + 1] = -rhs_op(P[n])
        cols[base + 2] = -rhs_op(P[n - 1])
        top = max(p.degree for p in cols.values())
        for j in range(top + 1):
            row = [ZERO] * ncols
            for col, pol in cols.items():
                row[col] = pol.coeff(j)
            rows.append(row)
    basis = solve_nullspace(rows)
    fits = []
    for vec in basis:
        if fixed_pi is not None:
            if not vec[0]:
                continue
            s = vec[0].inverse()
            vec = [v * s for v in vec]
            abc = [fixed_pi.coeff(2), fixed_pi.coeff(1), fixed_pi.coeff(0)]
            vec = abc + vec[1:]
        else:
            vec = _normalize(vec)
        an = {n: vec[3 + 3 * (n - 1)] for n in range(1, N + 1)}
        bn = {n: vec[4 + 3 * (n - 1)] for n in range(1, N + 1)}
        cn = {n: vec[5 + 3 * (n - 1)] for n in range(1, N + 1)}
        fits.append(FirstTypeFit(relation, vec[0], vec[1], vec[2], an, bn, cn, N))
    if not fits:
        raise OnlyTrivial(relation, N)
    return fits


def fit_first_type(ctx: QContext, P: Sequence[Poly], N: int, fixed_pi: Optional[Poly] = None) -> list:
    """Basis of all (a, b, c; a_n, b_n, c_n) with
    (a x^2 + b x + c) Dq P_n = a_n Sq P_{n+1} + b_n Sq P_n + c_n Sq P_{n-1}, n = 1..N.

    Each basis vector is scaled so that the first nonzero of (a, b, c) is 1
    (c_1 = 1 if pi vanishes).  ``fixed_pi`` pins (a, b, c) exactly.
    Raises :class:`OnlyTrivial` if the solution space is zero.
    """
    return _fit(ctx, P, N, Relation.FIRST, fixed_pi)


def fit_second_type(ctx: QContext, P: Sequence[Poly], N: int, variant: Relation = Relation.DQSQ,
                    fixed_pi: Optional[Poly] = None) -> list:
    """Same contract as :func:`fit_first_type` for pi DqSq P_n (or pi SqDq P_n)
    against a_n P_{n+1} + b_n P_n + c_n P_{n-1}."""
    variant = Relation(variant)
    if variant is Relation.FIRST:
        raise ValueError("use fit_first_type for the first-type relation")
    return _fit(ctx, P, N, variant, fixed_pi)


def relation_residuals(ctx: QContext, fit: FirstTypeFit, P: Sequence[Poly]) -> dict:
    """n -> LHS - RHS of the fitted relation, recomputed from scratch."""
    out = {}
    D = lambda p: dq(ctx, p)  # noqa: E731
    S = lambda p: sq(ctx, p)  # noqa: E731
    for n in range(1, fit.N + 1):
        if fit.relation is Relation.FIRST:
            lhs = fit.pi * D(P[n])
            rhs = S(P[n + 1]) * fit.an[n] + S(P[n]) * fit.bn[n] + S(P[n - 1]) * fit.cn[n]
        else:
            inner = D(S(P[n])) if fit.relation is Relation.DQSQ else S(D(P[n]))
            lhs = fit.pi * inner
            rhs = P[n + 1] * fit.an[n] + P[n] * fit.bn[n] + P[n - 1] * fit.cn[n]
        out[n] = lhs - rhs
    return out


@dataclass(frozen=True)
class Conditions31:
    cond1: Scalar
    cond2: Scalar
    cond1_vacuous: bool

    @property
    def cond1_holds(self) -> bool:
        return self.cond1_vacuous or not self.cond1

    @property
    def cond2_holds(self) -> bool:
        return not self.cond2

    def to_json(self) -> dict:
        return {
            "c1": None if self.cond1_vacuous else str(self.cond1),
            "c1_vacuous": self.cond1_vacuous,
            "c1_holds": self.cond1_holds,
            "c2": str(self.cond2),
            "c2_holds": self.cond2_holds,
        }


def check_conditions_31(ctx: QContext, fit: FirstTypeFit, ttrr: TTRRSpec) -> Conditions31:
    """Evaluate the two side conditions on (a, b, c) verbatim from their closed forms.

    cond1 = (4 alpha^2 - 1) a C2 C3
            + r3/2 [(B0+B1)^2 + 4 alpha^2 (C1 - B0 B1 + alpha^2 - 1) - 2(2 alpha^2 - 1) C2]
    cond2 = a C2 C3 (b_2 + 2 a B2 + b/alpha)
            - r3 (a (B2+B1) C2 + (b/alpha) C2 - r2/2 (B1 - B0))
    with r_i = c_i + 2 a C_i; cond1 only applies when a != 0.
    """
    al = ctx.alpha
    al2 = al * al
    a, b = fit.a, fit.b
    B0, B1, B2 = ttrr.b(0), ttrr.b(1), ttrr.b(2)
    C1, C2, C3 = ttrr.c(1), ttrr.c(2), ttrr.c(3)
    r2 = fit.cn[2] + 2 * a * C2
    r3 = fit.cn[3] + 2 * a * C3
    cond1 = (4 * al2 - 1) * a * C2 * C3 + r3 / 2 * (
        (B0 + B1) * (B0 + B1) + 4 * al2 * (C1 - B0 * B1 + al2 - 1) - 2 * (2 * al2 - 1) * C2
    )
    boa = b / al
    cond2 = a * C2 * C3 * (fit.bn[2] + 2 * a * B2 + boa) - r3 * (a * (B2 + B1) * C2 + boa * C2 - r2 / 2 * (B1 - B0))
    return Conditions31(cond1=cond1, cond2=cond2, cond1_vacuous=not a)


@dataclass(frozen=True)
class SecondOrderData:
    """phi Dq^2 Y + psi Sq Dq Y + h Y = lambda_n Y."""

    phi: Poly
    psi: Poly
    h: Poly
    lam: Callable[[int], Scalar] = field(compare=False)

    def lambdas(self, n_max: int) -> list:
        return [self.lam(n) for n in range(n_max + 1)]

    def to_json(self, n_max: int = 8) -> dict:
        return {
            "phi": [str(c) for c in self.phi.coeffs],
            "psi": [str(c) for c in self.psi.coeffs],
            "h": [str(c) for c in self.h.coeffs],
            "lambda": [str(v) for v in self.lambdas(n_max)],
        }


def second_order_data(ctx: QContext, fit: FirstTypeFit, ttrr: TTRRSpec) -> SecondOrderData:
    """phi = A x^2 + B x + C, psi = x - B0, h = 0, lambda_n = gamma_n (A gamma_{n-1} + alpha_{n-1})
    with A, B, C read off the fit and the recurrence coefficients."""
    al = ctx.alpha
    al2 = al * al
    a = fit.a
    B0, B1 = ttrr.b(0), ttrr.b(1)
    C1, C3 = ttrr.c(1), ttrr.c(3)
    r3 = fit.cn[3] + 2 * a * C3
    if not r3:
        raise DegenerateR3()
    kappa = 1 - 2 * a * C3 / r3
    two_al = 2 * al
    A = -(a * C3 + (al2 - 1) * r3) / (al * r3)
    Bc = -(kappa * (B0 + B1) - 2 * al2 * B0) / two_al
    Cc = -(kappa * (C1 - B0 * B1) + C1 + B0 * B0) / two_al

    def lam(n: int) -> Scalar:
        return gamma_n(ctx, n) * (A * gamma_n(ctx, n - 1) + alpha_n(ctx, n - 1))

    return SecondOrderData(phi=Poly([Cc, Bc, A]), psi=Poly([-B0, ONE]), h=Poly(), lam=lam)


def ismail_residual(ctx: QContext, data: SecondOrderData, Pn: Poly, n: int) -> Poly:
    """phi Dq^2 P_n + psi Sq Dq P_n + h P_n - lambda_n P_n."""
    d1 = dq(ctx, Pn)
    return data.phi * dq(ctx, d1) + data.psi * sq(ctx, d1) + data.h * Pn - Pn * data.lam(n)


def aw_theorem_t_data(ctx: QContext, p: AWParams) -> SecondOrderData:
    """Second-order data of the Askey-Wilson polynomials from sigma_1..sigma_4.

    phi = -q^{-1/2} (2(1+s4) x^2 - (s1+s3) x - 1 + s2 - s4)
    psi = 2/(1-q) (2(s4-1) x + s1 - s3),  h = 0
    lambda_n = 4q (1 - q^{-n})(1 - s4 q^{n-1}) / (1-q)^2
    """
    s1, s2, s3, s4 = elementary_symmetric(p.as_tuple())
    q = ctx.q
    phi = Poly([-1 + s2 - s4, -(s1 + s3), 2 * (1 + s4)]) * Scalar(-1 / ctx.t)
    psi = Poly([s1 - s3, 2 * (s4 - 1)]) * Scalar(2 / (1 - q))

    def lam(n: int) -> Scalar:
        return 4 * q * (1 - ctx.q_pow(-n)) * (1 - s4 * ctx.q_pow(n - 1)) / ((1 - q) ** 2)

    return SecondOrderData(phi=phi, psi=psi, h=Poly(), lam=lam)


@dataclass(frozen=True)
class ExpansionCoeffs:
    r1: Scalar
    r2: Scalar
    r3: Scalar
    r4: Scalar
    r5: Scalar
    v: Scalar

    def as_list(self) -> list:
        return [self.r1, self.r2, self.r3, self.r4, self.r5]


@dataclass(frozen=True)
class Final01Result:
    n: int
    closed_form: ExpansionCoeffs
    expanded: list
    residual: Poly

    @property
    def formulas_match(self) -> bool:
        """Closed-form coefficients equal the P-basis expansion and nothing is left over."""
        return self.closed_form.as_list() == self.expanded[:5] and not any(self.expanded[5:])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "closed_form": [str(v) for v in self.closed_form.as_list()],
            "v": str(self.closed_form.v),
            "expanded": [str(v) for v in self.expanded[:5]],
            "tail_zero": not any(self.expanded[5:]),
            "residual_zero": self.residual.is_zero(),
            "r5_nonzero": bool(self.closed_form.r5),
        }


def _seq(d, k: int, name: str) -> Scalar:
    try:
        return d[k]
    except (KeyError, IndexError):
        raise IndexError(f"{name}_{k} is not available") from None


def expansion_final01(ctx: QContext, abc: tuple, fit, ttrr: TTRRSpec, P: Sequence[Poly], n: int) -> Final01Result:
    """Replay the five-term expansion of 2(alpha^2 U2 - U1^2) pi Dq^2 P_n.

    ``fit`` supplies a_k, b_k, c_k of pi DqSq P_k = a_k P_{k+1} + b_k P_k + c_k P_{k-1}
    (a :class:`FirstTypeFit` or anything with mappings ``an``, ``bn``, ``cn``).
    Returns the closed-form coefficients r^[1..5], the independent expansion of
    the left-hand side in the P basis (highest first: P_{n+2}, P_{n+1}, ...),
    and the polynomial residual LHS - sum r^[i] P_{n+3-i}.
    """
    if n < 2:
        raise IndexError("the expansion needs n >= 2")
    if n + 2 >= len(P):
        raise IndexError(f"need P_{n + 2}")
    a, b, c = (as_scalar(v) for v in abc)
    al = ctx.alpha
    al2 = al * al
    k3 = 4 * al2 - 3
    an = lambda k: _seq(fit.an, k, "a")  # noqa: E731
    bn = lambda k: _seq(fit.bn, k, "b")  # noqa: E731
    cn = lambda k: _seq(fit.cn, k, "c")  # noqa: E731
    B, C = ttrr.b, ttrr.c

    v = k3 * an(n) * C(n + 1) + al * a * (C(n + 1) + B(n) * B(n) + C(n))
    r1 = an(n + 1) - k3 * an(n) - al * a
    r2 = bn(n + 1) - k3 * bn(n) - al * b + (B(n) - k3 * B(n + 1)) * an(n) - al * a * (B(n) + B(n + 1))
    r3 = cn(n + 1) - k3 * cn(n) - al * c - 4 * (al2 - 1) * bn(n) * B(n) + an(n - 1) * C(n) - al * b * B(n) - v
    r4 = (B(n) - k3 * B(n - 1)) * cn(n) - (al * b - bn(n - 1) + k3 * bn(n) + al * a * (B(n) + B(n - 1))) * C(n)
    r5 = cn(n - 1) * C(n) - k3 * cn(n) * C(n - 1) - al * a * C(n) * C(n - 1)
    closed_form = ExpansionCoeffs(r1, r2, r3, r4, r5, v)

    sp = structural_polys(ctx)
    w = (sp.U2 * al2 - sp.U1 * sp.U1) * 2
    pi = Poly([c, b, a])
    lhs = w * pi * dq_pow(ctx, P[n], 2)
    coeffs = expand_in_basis(lhs, P[: n + 3]) if lhs.degree >= 0 else []
    coeffs = coeffs + [ZERO] * (n + 3 - len(coeffs))
    expanded = [coeffs[n + 2 - i] for i in range(n + 3)]
    rhs = P[n + 2] * r1 + P[n + 1] * r2 + P[n] * r3 + P[n - 1] * r4 + P[n - 2] * r5
    return Final01Result(n=n, closed_form=closed_form, expanded=expanded, residual=lhs - rhs)


def hermite_system_residuals(ctx: QContext, r, ttrr: TTRRSpec, n: int) -> tuple:
    """Left-hand sides of the five difference equations in r_n, t_n = r_n/C_n, B_n, C_n.

    For the window index n - 2 = 0, where C_0 is undefined, t_0 is continued
    backwards through the t-recurrence: t_0 = 2(2 alpha^2 - 1) t_1 - t_2.
    """
    al2 = ctx.alpha * ctx.alpha
    w = 2 * (2 * al2 - 1)
    B, C = ttrr.b, ttrr.c

    def rr(k):
        return _seq(r, k, "r")

    def t(k):
        if k == 0:
            return w * t(1) - t(2)
        if k < 0:
            raise CZero(k)
        ck = C(k)
        if not ck:
            raise CZero(k)
        return rr(k) / ck

    quarter = Scalar(1) / 4
    e1 = rr(n + 2) - w * rr(n + 1) + rr(n)
    e2 = t(n + 2) - w * t(n + 1) + t(n)
    e3 = rr(n + 1) * B(n + 1) - (4 * al2 - 3) * (rr(n) + rr(n + 1)) * B(n) + rr(n) * B(n - 1)
    e4 = t(n + 3) * B(n + 2) - (t(n + 2) + t(n + 1)) * B(n + 1) + t(n) * B(n)
    e5 = (
        t(n + 2) * (C(n + 1) - quarter)
        - 2 * t(n) * (C(n) - quarter)
        + t(n - 2) * (C(n - 1) - quarter)
        - t(n) * (B(n) * B(n) - w * B(n) * B(n - 1) + B(n - 1) * B(n - 1))
    )
    return (e1, e2, e3, e4, e5)


@dataclass(frozen=True)
class CaseZeroReport:
    residuals: dict

    @property
    def all_zero(self) -> bool:
        return all(p.is_zero() for p in self.residuals.values())

    @property
    def nonzero_at(self) -> list:
        return [n for n, p in self.residuals.items() if not p.is_zero()]

    def max_residual_degree(self) -> int:
        return max((p.degree for p in self.residuals.values()), default=-1)

    def to_json(self) -> dict:
        return {
            "all_zero": self.all_zero,
            "nonzero_at": self.nonzero_at,
            "max_residual_degree": self.max_residual_degree(),
            "residuals": {str(n): [str(c) for c in p.coeffs] for n, p in self.residuals.items()},
        }


def check_case_zero(ctx: QContext, P: Sequence[Poly], N: int) -> CaseZeroReport:
    """Residuals Dq P_{n+1} - alpha_n^{-1} gamma_{n+1} Sq P_n, n = 0..N."""
    if len(P) < N + 2:
        raise IndexError(f"need P_0..P_{N + 1}")
    res = {}
    for n in range(N + 1):
        scale = gamma_n(ctx, n + 1) / alpha_n(ctx, n)
        res[n] = dq(ctx, P[n + 1]) - sq(ctx, P[n]) * scale
    return CaseZeroReport(res)


@dataclass(frozen=True)
class DqSqHermiteReport:
    r: dict
    residuals: dict
    expected: dict

    @property
    def all_zero(self) -> bool:
        return all(p.is_zero() for p in self.residuals.values())

    @property
    def matches_expected(self) -> bool:
        return all(self.r[n] == self.expected[n] for n in self.r)

    def to_json(self) -> dict:
        return {
            "all_zero": self.all_zero,
            "matches_gamma_2n_over_2": self.matches_expected,
            "r": {str(n): str(v) for n, v in self.r.items()},
            "nonzero_at": [n for n, p in self.residuals.items() if not p.is_zero()],
        }


def check_dqsq_hermite(ctx: QContext, P: Sequence[Poly], N: int) -> DqSqHermiteReport:
    """Extract r_n from Dq Sq P_n = r_n P_{n-1} (n = 1..N) and compare with gamma_{2n}/2.

    r_n is the leading coefficient of Dq Sq P_n; the residual is what remains
    after subtracting r_n P_{n-1}.
    """
    r, res, expected = {}, {}, {}
    for n in range(1, N + 1):
        lhs = dq(ctx, sq(ctx, P[n]))
        rn = lhs.lc()
        r[n] = rn
        res[n] = lhs - P[n - 1] * rn
        expected[n] = gamma_n(ctx, 2 * n) / 2
    return DqSqHermiteReport(r=r, residuals=res, expected=expected)
