import random
from dataclasses import replace

import pytest

from bistrict.axioms import check_sbf
from bistrict.checks import Sampler, SamplerConfig
from bistrict.core import CapabilityError, is_identity
from bistrict.indexcalc import IndexFn
from bistrict.instances import FskMor, boolean_semiring, fsk_category, semiring_category
from bistrict.mutations import corrupt_f2times, twisted_eta
from bistrict.strictify import ONE, ZERO, BsCategory, bs_beta_times, bs_eq, bs_mor_prod, bs_obj
from bistrict.transport import (
    L2_times,
    L_mor,
    L_obj,
    R_embed,
    bs_functor,
    check_adjunction,
    check_bs_composition,
    check_naturality_squares,
    check_transport,
    compose_sbf,
    epsilon,
    eta,
    identity_sbf,
    left_adjoint,
    unit,
)

A = fsk_category()
BS = BsCategory(A)
R = R_embed(A, BS)
L = left_adjoint(BS)
QUICK = SamplerConfig(samples=40, exhaustive_cap=400)


def sampled(n, seed=0):
    rng = random.Random(seed)
    samp = Sampler(BS, SamplerConfig(), bound=2)
    return [samp.mor(rng) for _ in range(n)]


def test_bs_identity_functor_is_identity():
    F = bs_functor(identity_sbf(A), BS, BS)
    for x in sampled(100):
        assert F.obj(x.dom) == x.dom
        assert bs_eq(BS, F.mor(x), x)


def test_bs_functor_needs_inverses():
    weak = replace(identity_sbf(A), f2times_inv=None)
    with pytest.raises(CapabilityError):
        bs_functor(weak)


def test_bs_functor_preserves_beta_times_and_products():
    BB = BsCategory(BS)
    F = bs_functor(R, BS, BB)
    a, b = bs_obj([2]), bs_obj([1, 3])
    lhs = F.mor(bs_beta_times(BS, a, b))
    rhs = bs_beta_times(BB, F.obj(a), F.obj(b))
    assert bs_eq(BB, lhs, rhs)
    xs = sampled(60, 1)
    for x, y in zip(xs, reversed(xs)):
        assert bs_eq(BB, F.mor(bs_mor_prod(BS, x, y)), bs_mor_prod(BB, F.mor(x), F.mor(y)))


def test_bs_functor_degenerate_components():
    # an empty monomial, an empty fiber and a singleton fiber in one morphism
    BB = BsCategory(BS)
    F = bs_functor(R, BS, BB)
    x = BS.mor(bs_obj([]), bs_obj([1], [0]), IndexFn(2, [1]), [A.id(1), A.id(0)])
    fx = F.mor(x)
    assert fx.reindex == x.reindex
    assert fx.dom == bs_obj([]) and fx.cod == bs_obj([R.obj(1)], [R.obj(0)])
    c1, c2 = fx.components
    # empty monomial: R's unit constraint; singleton fiber: no merging
    assert bs_eq(BS, c1, R.f0times)
    # empty fiber: R's additive unit constraint
    assert bs_eq(BS, c2, R.f0plus)


def test_L_objects():
    assert L_obj(BS, bs_obj([2, 3], [2])) == 8
    assert L_obj(BS, ZERO) == 0 and L_obj(BS, ONE) == 1


def test_L_on_eta_is_identity():
    for a in BS.objects(2)[:80]:
        assert is_identity(A, L_mor(BS, eta(BS, a)))


def test_L2_times_examples():
    assert L2_times(BS, bs_obj([2]), bs_obj([1], [1])).images == (1, 3, 2, 4)
    assert is_identity(A, L2_times(BS, ZERO, bs_obj([2]))) and A.dom(L2_times(BS, ZERO, bs_obj([2]))) == 0
    assert is_identity(A, L2_times(BS, bs_obj([2]), ZERO))
    assert is_identity(A, L2_times(BS, bs_obj([2]), bs_obj([3])))


def test_R_embedding():
    g = FskMor(2, 3, (3, 0))
    Rg = R.mor(g)
    assert Rg.reindex == IndexFn.identity(1) and Rg.components == (g,)
    r2 = R.f2times(2, 3)
    assert r2.dom == bs_obj([2, 3]) and r2.cod == bs_obj([6])
    assert r2.dom != r2.cod and is_identity(A, r2.components[0])
    assert not BS.is_iso(R.f0plus)
    assert R.f0plus.dom == ZERO and R.f0plus.cod == bs_obj([0])


def test_eta_examples():
    e0 = eta(BS, ZERO)
    assert e0.cod == bs_obj([0]) and e0.reindex == IndexFn(1, [])
    assert is_identity(BS, eta(BS, R.obj(3)))
    e2 = eta(BS, bs_obj([2], [3]))
    assert e2.reindex.values == (1, 1) and A.mor_eq(e2.components[0], A.id(5))
    assert unit(BS)(ONE) == eta(BS, ONE)
    assert is_identity(A, epsilon(A, BS)(4))


def test_LR_is_identity():
    LR = compose_sbf(L, R)
    for a in range(5):
        assert LR.obj(a) == a
        assert is_identity(A, LR.f2times(a, 2)) and is_identity(A, LR.f2plus(a, 1))
    g = FskMor(3, 2, (2, 0, 1))
    assert A.mor_eq(LR.mor(g), g)


def test_sbf_suites_pass_for_R_and_L():
    assert check_sbf(R, QUICK).passed
    assert check_sbf(L, QUICK, Sampler(BS, QUICK, bound=2)).passed


def test_corrupt_f2times_breaks_braiding():
    report = check_sbf(corrupt_f2times(A), QUICK)
    assert "sbf[corrupt-f2times[fsk]]/mul-braiding" in report.failed_laws()


def test_adjunction_bool_semiring():
    B = semiring_category(boolean_semiring())
    assert check_adjunction(B, QUICK).passed


def test_adjunction_fsk_quick():
    report = check_adjunction(A, QUICK)
    assert report.passed, report.failures[:2]


def test_twisted_eta_fails_naturality():
    report = check_adjunction(A, QUICK, eta_fn=twisted_eta(BsCategory(A)))
    assert "bimonnat[unit]/naturality" in report.failed_laws()


def test_naturality_identity_and_R():
    assert check_naturality_squares(identity_sbf(A), QUICK).passed
    report = check_naturality_squares(R, SamplerConfig(samples=20, exhaustive_cap=100))
    assert report.passed
    assert [s["law"] for s in report.skipped] == ["naturality-L[R[fsk]]"]


def test_naturality_L_square_for_strict_bs_functor():
    inner = BsCategory(A, 1, 1)
    f = bs_functor(identity_sbf(A), inner, inner)
    report = check_naturality_squares(f, SamplerConfig(samples=20, exhaustive_cap=100))
    assert report.passed and not report.skipped
    assert any(k.startswith("naturality-L[") for k in report.laws)


def test_transport_and_bs_composition():
    assert check_transport(R, QUICK).passed
    assert check_bs_composition(L, R, QUICK).passed
