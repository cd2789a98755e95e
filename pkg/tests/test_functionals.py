from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awlab.families import (
    AWParams,
    HermiteVariant,
    PearsonPair,
    aw_pearson_pair,
    aw_ttrr,
    generate_ops,
    hermite_ttrr,
    pearson_ttrr,
)
from awlab.functionals import (
    DegreeOverflow,
    FunctionalTag,
    MomentFunctional,
    ZeroNorm,
    act,
    dq_functional,
    dual_action,
    functional_identity_residual,
    left_mul,
    moments_from_ttrr,
    pearson_residual,
    simple_set_dual_action,
    sq_functional,
    squared_norm,
    ttrr_from_moments,
)
from awlab.poly import Poly
from awlab.qops import dq, sq
from awlab.scalar import ONE, ZERO, QContext, Scalar
from conftest import polys, scalars

F = Fraction
X = Poly.x()
H = QContext(F(1, 2))
GENERIC = AWParams(F(1, 2), F(1, 3), F(1, 5), F(1, 7))
HERM = hermite_ttrr(H, HermiteVariant.base_q, 24)
U_HERM = moments_from_ttrr(HERM, 24)

random_functionals = st.lists(scalars, min_size=14, max_size=14).map(MomentFunctional)


def test_moment_examples():
    T = aw_ttrr(H, GENERIC, 4)
    u = moments_from_ttrr(T, 4)
    assert u.m[0] == ONE
    assert u.m[1] == T.b(0)
    assert u.m[2] == T.b(0) ** 2 + T.c(1)


def test_act_examples():
    assert act(U_HERM, Poly([1])) == ONE
    assert act(U_HERM, X) == ZERO
    P = generate_ops(HERM, 12)
    assert all(act(U_HERM, P[n]) == 0 for n in range(1, 13))
    with pytest.raises(DegreeOverflow):
        act(MomentFunctional((ONE, ONE)), Poly.monomial(2))


def test_left_mul_examples():
    u = moments_from_ttrr(aw_ttrr(H, GENERIC, 8), 8)
    assert left_mul(Poly([1]), u) == u
    shifted = left_mul(X, u)
    assert shifted.K == u.K - 1
    assert all(shifted.m[k] == u.m[k + 1] for k in range(shifted.K + 1))
    assert left_mul(X * X, U_HERM).m[0] == HERM.c(1)


@given(random_functionals, polys(4), polys(4))
def test_left_mul_defining_property(u, phi, f):
    if phi.degree + f.degree > u.K or phi.is_zero():
        return
    assert act(left_mul(phi, u), f) == act(u, phi * f)


@given(random_functionals, polys(6))
def test_operator_functionals_defining_property(u, f):
    assert act(dq_functional(H, u), f) == -act(u, dq(H, f))
    assert act(sq_functional(H, u), f) == act(u, sq(H, f))


def test_functional_json_round_trip():
    j = U_HERM.truncate(5).to_json()
    assert j["K"] == 5 and len(j["moments"]) == 6
    assert MomentFunctional.from_json(j) == U_HERM.truncate(5)
    with pytest.raises(ValueError):
        MomentFunctional.from_json({"K": 3, "moments": j["moments"]})


def test_normalized_and_linear_ops():
    u = U_HERM.truncate(4) * 3
    assert u.normalized() == U_HERM.truncate(4)
    assert (u - U_HERM.truncate(4)) == U_HERM.truncate(4) * 2
    with pytest.raises(ZeroDivisionError):
        MomentFunctional((ZERO, ONE)).normalized()


def test_pearson_residual_mismatched_pair():
    res = pearson_residual(H, PearsonPair(Poly([1]), X), U_HERM, 4)
    # -<u, 1> - alpha <u, x^2>
    assert res[1] == -1 - H.alpha * HERM.c(1)
    # u symmetric, phi even, psi odd: every even-index entry vanishes
    assert res[0] == res[2] == res[4] == 0
    assert res[3] != 0


def test_pearson_residual_hermite_pair():
    pp = aw_pearson_pair(H, AWParams(0, 0, 0, 0))
    assert pearson_ttrr(H, pp, 8) == hermite_ttrr(H, HermiteVariant.base_q, 8)
    assert all(v == 0 for v in pearson_residual(H, pp, U_HERM, 20))


def test_pearson_residual_freestanding_pair():
    pp = PearsonPair(Poly([F(-1, 2), F(1, 3), 1]), Poly([F(1, 5), 2]))
    u = moments_from_ttrr(pearson_ttrr(H, pp, 22), 22)
    assert all(v == 0 for v in pearson_residual(H, pp, u, 20))


def test_dual_action_examples():
    P = generate_ops(HERM, 8)
    for n in range(5):
        assert dual_action(U_HERM, P, n, P[n]) == ONE
        assert dual_action(U_HERM, P, n, Poly.monomial(n)) == ONE
        for m in range(5):
            if m != n:
                assert dual_action(U_HERM, P, n, P[m]) == ZERO


def test_simple_set_dual_action():
    Q = [Poly([1]), X + 1, X * X - X]
    f = Q[2] * 3 + Q[0] * F(1, 2)
    assert simple_set_dual_action(Q, 2, f) == Scalar(3)
    assert simple_set_dual_action(Q, 1, f) == ZERO
    assert simple_set_dual_action(Q, 0, f) == Scalar(F(1, 2))


def test_squared_norm_examples():
    P = generate_ops(HERM, 4)
    assert squared_norm(U_HERM, P[0]) == ONE
    assert squared_norm(U_HERM, P[1]) == Scalar(F(3, 16))
    assert squared_norm(U_HERM, P[2]) / squared_norm(U_HERM, P[1]) == HERM.c(2)


def test_zero_norm():
    u = MomentFunctional((ONE, ZERO, ZERO, ZERO))
    with pytest.raises(ZeroNorm):
        ttrr_from_moments(u, 1)


def test_fdu_examples():
    assert all(v == 0 for v in functional_identity_residual(H, FunctionalTag.FDu, u=U_HERM, f=Poly([1]), K=10))


@given(random_functionals, polys(2))
def test_fdu_random(u, f):
    assert all(v == 0 for v in functional_identity_residual(H, FunctionalTag.FDu, u=u, f=X if f.is_zero() else f))


@pytest.mark.parametrize("n", range(4))
def test_dnsu(ctx, n):
    u = moments_from_ttrr(aw_ttrr(ctx, GENERIC, 12), 12)
    assert all(v == 0 for v in functional_identity_residual(ctx, FunctionalTag.DnSu, u=u, n=n))


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", range(6))
def test_dual_derivative_identity_hermite(k, n):
    P = generate_ops(HERM, 8 + k)
    r = functional_identity_residual(H, FunctionalTag.DualDeriv, u=U_HERM, P=P, n=n, k=k, K=8)
    assert all(v == 0 for v in r)


def test_dual_derivative_spot_value():
    # <Dq a^[1]_1, P_2> = -<a^[1]_1, Dq P_2> = -gamma_2, and <a_2, P_2> = 1
    from awlab.qops import pn_k
    from awlab.scalar import gamma_n

    P = generate_ops(HERM, 4)
    P1 = [pn_k(H, P, j, 1) for j in range(3)]
    lhs = -simple_set_dual_action(P1, 1, dq(H, P[2]))
    assert lhs == -gamma_n(H, 2)
    assert lhs != gamma_n(H, 2) * dual_action(U_HERM, P, 2, P[2])


@pytest.mark.parametrize(
    "build",
    [
        lambda N: aw_ttrr(H, GENERIC, N),
        lambda N: hermite_ttrr(H, HermiteVariant.base_q, N),
        lambda N: hermite_ttrr(H, HermiteVariant.base_q2, N),
        lambda N: hermite_ttrr(H, HermiteVariant.base_qminus2, N),
        lambda N: pearson_ttrr(H, PearsonPair(Poly([F(-1, 2), F(1, 3), 1]), Poly([F(1, 5), 2])), N),
    ],
    ids=["aw", "hermite-q", "hermite-q2", "hermite-q-2", "pearson"],
)
def test_favard_round_trip(build):
    u = moments_from_ttrr(build(16), 17)
    assert ttrr_from_moments(u, 8) == build(8)


def test_sq_functional_of_normalized_hermite_has_unit_mass():
    assert sq_functional(H, U_HERM).m[0] == ONE
    assert sq(H, Poly([1])) == Poly([1])
