"""Computable bipermutative categories and their coherence isomorphisms.

A :class:`BipermCat` presents a category with two strict symmetric monoidal
structures: sum (``oplus``) and product (``otimes``).  The right
distributivity and the multiplicative zeros are identities, and the left
distributivity ``delta_l`` is an isomorphism.  Subclasses supply objects in
canonical form and morphisms with decidable equality.

The realizers :func:`realize_sigma` and :func:`realize_delta` build the
canonical coherence isomorphisms out of the structure maps.  Coherence makes
each one unique, so any decomposition would do.  The one fixed here is
deterministic.
"""

from __future__ import annotations

import copy
from abc import ABC, abstractmethod
from functools import reduce
from typing import Any, Iterable, Sequence

from .indexcalc import Perm


class TypingError(ValueError):
    """A composite or structure map was requested on mismatched objects."""


class ArityError(ValueError):
    pass


class CapabilityError(ValueError):
    """A functor lacks data (e.g. inverse constraints) needed for a construction."""


class BipermCat(ABC):
    """Interface of a computable bipermutative category.

    ``compose(g, f)`` is ``g . f`` (apply ``f`` first).
    """

    name = "biperm"

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    def obj_eq(self, a, b) -> bool:
        return a == b

    @abstractmethod
    def mor_eq(self, f, g) -> bool: ...

    @abstractmethod
    def dom(self, f): ...

    @abstractmethod
    def cod(self, f): ...

    @abstractmethod
    def id(self, a): ...

    @abstractmethod
    def compose(self, g, f): ...

    @abstractmethod
    def oplus(self, a, b): ...

    @abstractmethod
    def oplus_mor(self, f, g): ...

    @abstractmethod
    def otimes(self, a, b): ...

    @abstractmethod
    def otimes_mor(self, f, g): ...

    @abstractmethod
    def beta_plus(self, a, b): ...

    @abstractmethod
    def beta_times(self, a, b): ...

    @abstractmethod
    def delta_l(self, a, b, c): ...

    @abstractmethod
    def delta_l_inv(self, a, b, c): ...

    @abstractmethod
    def is_iso(self, f) -> bool: ...

    # sampling hooks used by the verifier

    @abstractmethod
    def objects(self, bound: int) -> list:
        """All objects up to ``bound`` in a fixed ascending order."""

    @abstractmethod
    def random_mor(self, rng, dom, cod):
        """A random morphism ``dom -> cod``, or ``None`` if the hom-set is empty."""

    def all_mors(self, bound: int):
        """Every morphism between objects up to ``bound``, or ``None`` if not finite-listable."""
        return None

    # serialization

    @abstractmethod
    def obj_to_json(self, a): ...

    @abstractmethod
    def obj_from_json(self, data): ...

    @abstractmethod
    def mor_to_json(self, f): ...

    @abstractmethod
    def mor_from_json(self, data): ...

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def mutate(cat: BipermCat, name: str | None = None, **overrides) -> BipermCat:
    """Shallow copy of ``cat`` with some structure maps replaced.

    Used to check that the axiom suites notice broken structure.
    """
    out = copy.copy(cat)
    for key, fn in overrides.items():
        if not callable(getattr(cat, key, None)):
            raise AttributeError(f"{type(cat).__name__} has no structure map {key!r}")
        setattr(out, key, fn)
    out.name = name or f"{cat.name}[mutated:{','.join(sorted(overrides))}]"
    return out


def sum_objs(cat: BipermCat, xs: Iterable):
    return reduce(cat.oplus, xs, cat.zero)


def prod_objs(cat: BipermCat, xs: Iterable):
    return reduce(cat.otimes, xs, cat.one)


def sum_mors(cat: BipermCat, fs: Sequence):
    if not fs:
        return cat.id(cat.zero)
    return reduce(cat.oplus_mor, fs)


def prod_mors(cat: BipermCat, fs: Sequence):
    if not fs:
        return cat.id(cat.one)
    return reduce(cat.otimes_mor, fs)


def compose_path(cat: BipermCat, path: Sequence):
    """Compose a path given in application order (``path[0]`` first)."""
    if not path:
        raise ValueError("empty path")
    acc = path[0]
    for n, f in enumerate(path[1:], 1):
        if not cat.obj_eq(cat.cod(acc), cat.dom(f)):
            raise TypingError(
                f"path junction {n}: codomain {cat.obj_to_json(cat.cod(acc))!r} "
                f"!= domain {cat.obj_to_json(cat.dom(f))!r}"
            )
        acc = cat.compose(f, acc)
    return acc


def is_identity(cat: BipermCat, f) -> bool:
    return cat.obj_eq(cat.dom(f), cat.cod(f)) and cat.mor_eq(f, cat.id(cat.dom(f)))


def _whisker(cat, before, f, after):
    return sum_mors(cat, [cat.id(sum_objs(cat, before)), f, cat.id(sum_objs(cat, after))])


def realize_sigma(cat: BipermCat, summands: Sequence, perm: Perm):
    """Coherence isomorphism ``(+)_i x_i -> (+)_i y_i`` where ``y[perm(i)] = x[i]``.

    Insertion sort; each step is an adjacent ``beta_plus`` whiskered by
    identities.
    """
    if perm.degree != len(summands):
        raise ArityError(f"permutation of degree {perm.degree} for {len(summands)} summands")
    xs = list(summands)
    cur = list(range(len(xs)))
    acc = cat.id(sum_objs(cat, xs))
    for t in range(1, len(cur)):
        j = t
        while j > 0 and perm.images[cur[j - 1]] > perm.images[cur[j]]:
            left, right = cur[j - 1], cur[j]
            step = _whisker(
                cat,
                [xs[c] for c in cur[: j - 1]],
                cat.beta_plus(xs[left], xs[right]),
                [xs[c] for c in cur[j + 1 :]],
            )
            acc = cat.compose(step, acc)
            cur[j - 1], cur[j] = right, left
            j -= 1
    return acc


def _peel_steps(cat, a, right, inverse):
    # a (c_1 + ... + c_n) -> a c_1 + ... + a c_n by repeatedly splitting off c_t
    steps = []
    for t in range(len(right) - 1):
        done = [cat.otimes(a, c) for c in right[:t]]
        rest = sum_objs(cat, right[t + 1 :])
        split = (cat.delta_l_inv if inverse else cat.delta_l)(a, right[t], rest)
        steps.append(_whisker(cat, done, split, []))
    return steps


def realize_delta(cat: BipermCat, left: Sequence, right: Sequence):
    """``((+)_i a_i) (x) ((+)_k c_k) -> (+)_i (+)_k a_i c_k``, ``i`` outer."""
    left, right = list(left), list(right)
    if not left or not right:
        return cat.id(cat.zero)
    parts = []
    for a in left:
        acc = cat.id(cat.otimes(a, sum_objs(cat, right)))
        for step in _peel_steps(cat, a, right, inverse=False):
            acc = cat.compose(step, acc)
        parts.append(acc)
    # right distributivity is an identity, so the blocks just sum
    return sum_mors(cat, parts)


def realize_delta_inv(cat: BipermCat, left: Sequence, right: Sequence):
    """Inverse of :func:`realize_delta`, built from ``delta_l_inv``."""
    left, right = list(left), list(right)
    if not left or not right:
        return cat.id(cat.zero)
    parts = []
    for a in left:
        acc = cat.id(sum_objs(cat, [cat.otimes(a, c) for c in right]))
        for step in reversed(_peel_steps(cat, a, right, inverse=True)):
            acc = cat.compose(step, acc)
        parts.append(acc)
    return sum_mors(cat, parts)
