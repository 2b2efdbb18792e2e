import random

import pytest

import oracles
from bistrict.checks import EmptySample, Sampler, SamplerConfig, diagram_eq, enumerate_objects, sample_morphism
from bistrict.core import TypingError, is_identity
from bistrict.indexcalc import IndexFn
from bistrict.instances import FskMor, fsk_category
from bistrict.strictify import (
    ONE,
    ZERO,
    BsCategory,
    BsObj,
    bs_beta_plus,
    bs_beta_times,
    bs_compose,
    bs_delta_l,
    bs_eq,
    bs_id,
    bs_mor_prod,
    bs_mor_sum,
    bs_obj,
    bs_obj_prod,
    bs_obj_sum,
    bs_struct_identities,
)
from bistrict.transport import L_mor

A = fsk_category()
BS = BsCategory(A)


def fold(n):
    return FskMor(n, 1, [1] * n)


def random_mors(seed, n, bound=2):
    rng = random.Random(seed)
    samp = Sampler(BS, SamplerConfig(), bound=bound)
    return [samp.mor(rng) for _ in range(n)]


def L_oracle(x):
    return oracles.L_pointed(BS.values(x.dom), BS.values(x.cod), x.reindex.values, [g.images for g in x.components])


def test_object_sum_and_product():
    a, b, c, d = (bs_obj([x]) for x in (1, 2, 3, 4))
    assert bs_obj_sum(a, b) == bs_obj([1], [2])
    assert bs_obj_sum(a, ZERO) == a == bs_obj_sum(ZERO, a)
    assert bs_obj_prod(bs_obj([1], [2]), bs_obj([3], [4])) == bs_obj([1, 3], [1, 4], [2, 3], [2, 4])
    x = bs_obj([1, 2], [])
    assert bs_obj_prod(x, ONE) == x == bs_obj_prod(ONE, x)
    assert bs_obj_prod(x, ZERO) == ZERO == bs_obj_prod(ZERO, x)
    for p, q, r in [(a, b, c), (x, a, d), (ZERO, x, ONE)]:
        assert bs_obj_sum(bs_obj_sum(p, q), r) == bs_obj_sum(p, bs_obj_sum(q, r))
        assert bs_obj_prod(bs_obj_prod(p, q), r) == bs_obj_prod(p, bs_obj_prod(q, r))


def test_identities():
    z = bs_id(BS, ZERO)
    assert z.reindex.dom == 0 and z.components == ()
    assert [BS.base.mor_eq(g, A.id(1)) for g in bs_id(BS, ONE).components] == [True]
    (g,) = bs_id(BS, bs_obj([2, 3])).components
    assert A.mor_eq(g, A.id(6))


def test_typed_constructor_rejects_bad_components():
    a = bs_obj([2], [1])
    with pytest.raises(TypingError, match="component 1"):
        BS.mor(a, bs_obj([2]), IndexFn(1, [1, 1]), [A.id(2)])
    with pytest.raises(TypingError):
        BS.mor(a, bs_obj([3]), IndexFn(1, [1]), [A.id(3)])


def test_enumeration_order():
    small = BsCategory(A, 1, 1)
    assert small.objects(1) == [ZERO, ONE, bs_obj([0]), bs_obj([1])]
    assert enumerate_objects(small, 0) == [ZERO, ONE, bs_obj([0])]
    assert enumerate_objects(A, 2) == [0, 1, 2]
    assert len(BS.objects(2)) == 1 + 13 + 13 * 13


def test_sample_morphism_on_unit():
    seen = set()
    for seed in range(40):
        x = sample_morphism(random.Random(seed), BS, ONE, ONE)
        assert x.reindex == IndexFn.identity(1)
        seen.add(x.components[0].images)
    # frozen: the two pointed endomaps of <1>
    assert seen == {(1,), (0,)}
    assert sample_morphism(random.Random(5), BS, ONE, ONE) == sample_morphism(random.Random(5), BS, ONE, ONE)


def test_sample_morphism_into_zero():
    with pytest.raises(EmptySample):
        sample_morphism(random.Random(0), BS, ONE, ZERO)
    assert sample_morphism(random.Random(0), BS, ZERO, ZERO) == bs_id(BS, ZERO)


def test_compose_example():
    one3 = bs_obj([1], [1], [1])
    one2 = bs_obj([1], [1])
    g = BS.mor(one3, one2, IndexFn(2, [2, 1, 2]), [fold(1), fold(2)])
    h = BS.mor(one2, bs_obj([1]), IndexFn(1, [1, 1]), [fold(2)])
    hg = bs_compose(BS, h, g)
    assert hg.reindex.values == (1, 1, 1)
    # frozen from elementwise evaluation: every point goes to the single point of <1>
    assert hg.components[0].images == (1, 1, 1)
    assert hg.components[0].images == oracles.after(L_oracle(h), L_oracle(g))


def test_compose_units_and_order_preserving():
    for x in random_mors(1, 60):
        assert bs_eq(BS, bs_compose(BS, x, bs_id(BS, x.dom)), x)
        assert bs_eq(BS, bs_compose(BS, bs_id(BS, x.cod), x), x)
    x = BS.mor(bs_obj([2], [1]), bs_obj([2], [1]), IndexFn(2, [1, 2]), [FskMor(2, 2, (2, 0)), fold(1)])
    y = BS.mor(bs_obj([2], [1]), bs_obj([3]), IndexFn(1, [1, 1]), [FskMor(3, 3, (1, 3, 2))])
    assert bs_compose(BS, y, x).components[0].images == (3, 0, 2)


def test_L_matches_pointed_oracle_and_is_functorial():
    rng = random.Random(11)
    samp = Sampler(BS, SamplerConfig(), bound=2)
    for _ in range(300):
        x = samp.mor(rng)
        y = samp.mor_from(rng, x.cod)
        assert L_mor(BS, x).images == L_oracle(x)
        assert L_oracle(bs_compose(BS, y, x)) == oracles.after(L_oracle(y), L_oracle(x))


def test_compose_typing_error():
    x = bs_id(BS, ONE)
    with pytest.raises(TypingError):
        bs_compose(BS, bs_id(BS, ZERO), x)


def test_sum_of_morphisms():
    x, y = random_mors(2, 2)
    assert bs_eq(BS, bs_mor_sum(BS, x, bs_id(BS, ZERO)), x)
    a, b = bs_obj([1], [2]), bs_obj([0, 2])
    assert bs_eq(BS, bs_mor_sum(BS, bs_id(BS, a), bs_id(BS, b)), bs_id(BS, bs_obj_sum(a, b)))


def test_product_example_two_folds():
    x = BS.mor(bs_obj([1], [1]), bs_obj([1]), IndexFn(1, [1, 1]), [fold(2)])
    xy = bs_mor_prod(BS, x, x)
    assert xy.reindex.values == (1, 1, 1, 1)
    assert xy.components[0].images == (1, 1, 1, 1)
    assert xy.components[0].images == oracles.product_component([1, 1], (1, 1), [(1, 1)], [1], [1, 1], (1, 1), [(1, 1)], [1], 1, 1)


def test_product_components_against_pair_tracking():
    for x, y in zip(random_mors(3, 150), random_mors(4, 150)):
        xy = bs_mor_prod(BS, x, y)
        va, vb, vc, vd = BS.values(x.dom), BS.values(x.cod), BS.values(y.dom), BS.values(y.cod)
        cx = [g.images for g in x.components]
        cy = [g.images for g in y.components]
        for k in range(1, x.cod.r + 1):
            for q in range(1, y.cod.r + 1):
                t = q + (k - 1) * y.cod.r
                expected = oracles.product_component(va, x.reindex.values, cx, vb, vc, y.reindex.values, cy, vd, k, q)
                assert xy.components[t - 1].images == expected


def test_product_units():
    (x,) = random_mors(5, 1)
    assert bs_eq(BS, bs_mor_prod(BS, bs_id(BS, ONE), x), x)
    assert bs_eq(BS, bs_mor_prod(BS, x, bs_id(BS, ZERO)), bs_id(BS, ZERO))


def test_beta_plus():
    a = bs_obj([1], [2])
    assert is_identity(BS, bs_beta_plus(BS, a, ZERO)) and is_identity(BS, bs_beta_plus(BS, ZERO, a))
    b = bs_obj([3])
    assert bs_beta_plus(BS, a, b).reindex.values == (2, 3, 1)


def test_beta_times_example():
    x = bs_beta_times(BS, bs_obj([2]), bs_obj([3]))
    (g,) = x.components
    assert g.images == (1, 3, 5, 2, 4, 6) == oracles.swap(2, 3)
    a = bs_obj([2], [1, 2])
    assert is_identity(BS, bs_beta_times(BS, a, ONE))
    assert bs_eq(BS, bs_beta_times(BS, a, ZERO), bs_id(BS, ZERO))


def test_delta_l_examples():
    assert bs_eq(BS, bs_delta_l(BS, bs_obj([1]), ZERO, ZERO), bs_id(BS, ZERO))
    d = bs_delta_l(BS, bs_obj([1]), bs_obj([2]), bs_obj([3]))
    assert d.reindex.values == (1, 2) and all(is_identity(A, g) for g in d.components)
    ids = bs_struct_identities(BS, bs_obj([1]), bs_obj([2], [1]), bs_obj([2]))
    assert set(ids) == {"lambda_zero", "rho_zero", "delta_r"}
    assert all(is_identity(BS, m) for m in ids.values())


def test_bs_eq_distinguishes_reindexing():
    a = bs_obj([0], [0])
    x = BS.mor(a, a, IndexFn(2, [1, 2]), [A.id(0), A.id(0)])
    y = BS.mor(a, a, IndexFn(2, [2, 1]), [A.id(0), A.id(0)])
    assert bs_eq(BS, x, x) and not bs_eq(BS, x, y)


def test_beta_times_naturality_square():
    rng = random.Random(21)
    samp = Sampler(BS, SamplerConfig(), bound=2)
    for _ in range(200):
        x, y = samp.mor(rng), samp.mor(rng)
        ok, detail = diagram_eq(
            BS,
            [bs_mor_prod(BS, x, y), bs_beta_times(BS, x.cod, y.cod)],
            [bs_beta_times(BS, x.dom, y.dom), bs_mor_prod(BS, y, x)],
        )
        assert ok, detail


def test_diagram_eq_mismatched_endpoints():
    assert diagram_eq(BS, [bs_id(BS, ONE)], [bs_id(BS, ONE)]) == (True, None)
    with pytest.raises(TypingError):
        diagram_eq(BS, [bs_id(BS, ONE)], [bs_id(BS, ZERO)])


def test_json_roundtrip():
    for x in random_mors(8, 30):
        assert bs_eq(BS, BS.mor_from_json(BS.mor_to_json(x)), x)
        assert BS.obj_from_json(BS.obj_to_json(x.dom)) == x.dom


def test_bsobj_repr_and_length():
    a = BsObj([[1, 2], []])
    assert a.r == 2
    assert "1" in repr(a)
