"""Deliberately broken structure, used to show the suites are not vacuous.

Each mutation keeps every composite well typed, so a failure it causes is a
genuine law failure rather than a typing error.
"""

from __future__ import annotations

from dataclasses import replace

from .core import BipermCat, mutate
from .indexcalc import IndexFn
from .strictify import BsCategory, BsObj
from .transport import L_obj, SBFunctor, identity_sbf


def identity_beta_plus(cat: BipermCat) -> BipermCat:
    """``beta_plus`` replaced by the identity.

    Symmetry and the hexagons still hold; naturality of the braiding does not.
    Needs ``a + b == b + a`` on objects, as in a skeletal instance.
    """
    return mutate(cat, f"{cat.name}[identity-beta-plus]", beta_plus=lambda a, b: cat.id(cat.oplus(a, b)))


def identity_delta_l(cat: BipermCat) -> BipermCat:
    def flat(a, b, c):
        return cat.id(cat.otimes(a, cat.oplus(b, c)))

    return mutate(cat, f"{cat.name}[identity-delta-l]", delta_l=flat, delta_l_inv=flat)


def corrupt_f2times(cat: BipermCat) -> SBFunctor:
    """The identity functor with ``f2times(a, b)`` set to the braiding ``a*b -> b*a``."""
    base = identity_sbf(cat)
    return replace(
        base,
        name=f"corrupt-f2times[{cat.name}]",
        f2times=cat.beta_times,
        f2times_inv=lambda a, b: cat.beta_times(b, a),
    )


def twisted_eta(bs: BsCategory):
    """Unit whose component on two-monomial objects swaps the two summands."""
    A = bs.base

    def component(a: BsObj):
        value = L_obj(bs, a)
        if a.r == 2:
            u, v = bs.values(a)
            g = A.beta_plus(u, v)
        else:
            g = A.id(value)
        return bs.mor(a, BsObj([[value]]), IndexFn.terminal(a.r), [g])

    return component


MUTATIONS = {
    "identity-beta-plus": "permutative",
    "identity-delta-l": "bipermutative",
    "corrupt-f2times": "sbf",
    "twisted-eta": "adjunction",
}
