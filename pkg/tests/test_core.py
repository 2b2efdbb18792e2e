import itertools
import random

import pytest

import oracles
from bistrict.core import (
    ArityError,
    TypingError,
    compose_path,
    is_identity,
    mutate,
    realize_delta,
    realize_delta_inv,
    realize_sigma,
    sum_mors,
    sum_objs,
)
from bistrict.indexcalc import Perm
from bistrict.instances import FskMor, fsk_category

A = fsk_category()


def bubble_sigma(cat, summands, perm):
    """Alternative schedule: bubble sort passes from the right."""
    xs = list(summands)
    cur = list(range(len(xs)))
    acc = cat.id(sum_objs(cat, xs))
    changed = True
    while changed:
        changed = False
        for j in range(len(cur) - 1, 0, -1):
            if perm.images[cur[j - 1]] > perm.images[cur[j]]:
                before = [xs[c] for c in cur[: j - 1]]
                after = [xs[c] for c in cur[j + 1 :]]
                step = sum_mors(
                    cat,
                    [cat.id(sum_objs(cat, before)), cat.beta_plus(xs[cur[j - 1]], xs[cur[j]]), cat.id(sum_objs(cat, after))],
                )
                acc = cat.compose(step, acc)
                cur[j - 1], cur[j] = cur[j], cur[j - 1]
                changed = True
    return acc


def all_perms(n):
    return [Perm(p) for p in itertools.permutations(range(1, n + 1))]


def test_realize_sigma_trivial_cases():
    assert is_identity(A, realize_sigma(A, [2, 1, 3], Perm.identity(3)))
    assert A.mor_eq(realize_sigma(A, [2, 3], Perm([2, 1])), A.beta_plus(2, 3))


def test_realize_sigma_three_summands():
    got = realize_sigma(A, [2, 1, 3], Perm([2, 1, 3]))
    # frozen from oracles.regroup([2, 1, 3], [1, 0, 2])
    assert got.images == (2, 3, 1, 4, 5, 6)
    assert oracles.regroup([2, 1, 3], [1, 0, 2]) == got.images


def test_realize_sigma_matches_oracle_and_schedule():
    for n in range(5):
        for sizes in itertools.product(range(3), repeat=n):
            for p in all_perms(n):
                got = realize_sigma(A, sizes, p)
                order = [p.inverse()(t) - 1 for t in range(1, n + 1)]
                assert got.images == oracles.regroup(sizes, order)
                assert A.mor_eq(got, bubble_sigma(A, sizes, p))


def test_realize_sigma_functorial():
    rng = random.Random(3)
    for n in range(5):
        perms = all_perms(n)
        for _ in range(30):
            sizes = [rng.randint(0, 3) for _ in range(n)]
            p, q = rng.choice(perms), rng.choice(perms)
            lhs = realize_sigma(A, sizes, q.then(p))
            rhs = A.compose(realize_sigma(A, q.apply(sizes), p), realize_sigma(A, sizes, q))
            assert A.mor_eq(lhs, rhs)


def test_realize_sigma_arity_error():
    with pytest.raises(ArityError):
        realize_sigma(A, [1, 2], Perm.identity(3))


def test_realize_delta_examples():
    assert is_identity(A, realize_delta(A, [], [2, 3])) and A.dom(realize_delta(A, [], [2])) == 0
    assert is_identity(A, realize_delta(A, [2], [3]))
    got = realize_delta(A, [2], [1, 1])
    assert got.images == (1, 3, 2, 4) == oracles.distribute(2, 1, 1)
    inv = realize_delta_inv(A, [2], [1, 1])
    assert inv.images == (1, 3, 2, 4)
    assert is_identity(A, realize_delta_inv(A, [], []))
    assert is_identity(A, realize_delta_inv(A, [3], [2]))


def test_realize_delta_inverse_exhaustive():
    for nl, nr in itertools.product(range(4), repeat=2):
        for left in itertools.product(range(4), repeat=nl):
            for right in itertools.product(range(4), repeat=nr):
                d = realize_delta(A, left, right)
                di = realize_delta_inv(A, left, right)
                assert is_identity(A, A.compose(di, d)) and is_identity(A, A.compose(d, di))


def test_realize_delta_against_pair_tracking():
    for left, right in [([2, 1], [1, 2]), ([3], [2, 2, 1]), ([1, 2, 1], [2])]:
        # source is (+a_i) (x) (+c_k) in lex order over (global a-element, global c-element)
        a_elems = [(i, s) for i, a in enumerate(left) for s in range(a)]
        c_elems = [(k, t) for k, c in enumerate(right) for t in range(c)]
        src = [(i, k, s, t) for (i, s) in a_elems for (k, t) in c_elems]
        tgt = [(i, k, s, t) for i, a in enumerate(left) for k, c in enumerate(right) for s in range(a) for t in range(c)]
        assert realize_delta(A, left, right).images == oracles.relabel(src, tgt)


def test_compose_path_names_junction():
    f = FskMor(2, 3, (1, 2))
    g = FskMor(2, 2, (2, 1))
    with pytest.raises(TypingError, match="junction 1"):
        compose_path(A, [f, g])
    assert A.mor_eq(compose_path(A, [g, f]), A.compose(f, g))


def test_mutate_overrides_only_the_copy():
    broken = mutate(A, beta_plus=lambda a, b: A.id(a + b))
    assert is_identity(broken, broken.beta_plus(2, 3))
    assert not is_identity(A, A.beta_plus(2, 3))
    with pytest.raises(AttributeError):
        mutate(A, no_such_map=lambda: None)
