"""The strictification ``Bs A`` of a bipermutative category ``A``.

Objects are formal polynomials: sequences of monomials, each a sequence of
objects of ``A``.  A morphism ``a -> b`` is a reindexing function ``phi`` from
the monomials of ``a`` to those of ``b``, together with one component
``(+)_{i in phi^-1(k)} a^i -> b^k`` in ``A`` for every monomial ``b^k`` of
``b``.  Here ``a^i`` also denotes the product of the alphabets of a monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    BipermCat,
    TypingError,
    prod_objs,
    realize_delta_inv,
    realize_sigma,
    sum_mors,
    sum_objs,
)
from .indexcalc import (
    IndexFn,
    block_perm,
    coproduct_fn,
    distribute_perm,
    fibers,
    grouping_perm,
    product_fn,
    stable_sort_perm,
    swap_perm,
)


@dataclass(frozen=True)
class BsObj:
    monomials: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(tuple(m) for m in self.monomials))

    @property
    def r(self) -> int:
        """Additive length."""
        return len(self.monomials)

    def __repr__(self):
        inner = ", ".join("<" + ", ".join(map(repr, m)) + ">" for m in self.monomials)
        return f"BsObj<{inner}>"


@dataclass(frozen=True)
class BsMor:
    dom: BsObj
    cod: BsObj
    reindex: IndexFn
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))


ZERO = BsObj(())
ONE = BsObj(((),))


def bs_obj(*monomials) -> BsObj:
    """``bs_obj((a, b), (c,))`` is the polynomial ``ab + c``."""
    return BsObj(monomials)


def bs_obj_sum(a: BsObj, b: BsObj) -> BsObj:
    return BsObj(a.monomials + b.monomials)


def bs_obj_prod(a: BsObj, b: BsObj) -> BsObj:
    return BsObj([x + y for x in a.monomials for y in b.monomials])


class BsCategory(BipermCat):
    """``Bs A`` as a :class:`BipermCat`.

    ``max_add`` and ``max_mul`` bound the enumeration in :meth:`objects`; they
    do not restrict which objects exist.
    """

    def __init__(self, base: BipermCat, max_add: int = 2, max_mul: int = 2):
        self.base = base
        self.max_add = max_add
        self.max_mul = max_mul
        self.name = f"Bs({base.name})"

    # evaluation of monomials and fibers in the base

    def monomial(self, mono):
        return prod_objs(self.base, mono)

    def values(self, a: BsObj) -> list:
        return [self.monomial(m) for m in a.monomials]

    def fiber_source(self, a: BsObj, fiber) -> object:
        return sum_objs(self.base, [self.monomial(a.monomials[i - 1]) for i in fiber])

    def mor(self, dom: BsObj, cod: BsObj, reindex: IndexFn, components) -> BsMor:
        """Build a morphism, checking every component against its fiber."""
        base = self.base
        components = tuple(components)
        if reindex.dom != dom.r or reindex.cod != cod.r:
            raise TypingError(
                f"reindexing {reindex.dom}->{reindex.cod} for additive lengths {dom.r}->{cod.r}"
            )
        if len(components) != cod.r:
            raise TypingError(f"{len(components)} components for additive length {cod.r}")
        for k, (fib, g) in enumerate(zip(fibers(reindex), components), 1):
            src = self.fiber_source(dom, fib)
            tgt = self.monomial(cod.monomials[k - 1])
            if not (base.obj_eq(base.dom(g), src) and base.obj_eq(base.cod(g), tgt)):
                raise TypingError(
                    f"component {k}: expected {base.obj_to_json(src)!r} -> {base.obj_to_json(tgt)!r}, "
                    f"got {base.obj_to_json(base.dom(g))!r} -> {base.obj_to_json(base.cod(g))!r}"
                )
        return BsMor(dom, cod, reindex, components)

    def identity_components_on(self, cod: BsObj):
        return [self.base.id(v) for v in self.values(cod)]

    def perm_mor(self, dom: BsObj, cod: BsObj, perm) -> BsMor:
        """Reindex along a bijection with identity components."""
        return self.mor(dom, cod, perm.as_index_fn(), self.identity_components_on(cod))

    # BipermCat interface

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    def mor_eq(self, f, g):
        return bs_eq(self, f, g)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def id(self, a):
        return BsMor(a, a, IndexFn.identity(a.r), self.identity_components_on(a))

    def compose(self, h, g):
        return bs_compose(self, h, g)

    def oplus(self, a, b):
        return bs_obj_sum(a, b)

    def oplus_mor(self, f, g):
        return bs_mor_sum(self, f, g)

    def otimes(self, a, b):
        return bs_obj_prod(a, b)

    def otimes_mor(self, f, g):
        return bs_mor_prod(self, f, g)

    def beta_plus(self, a, b):
        return bs_beta_plus(self, a, b)

    def beta_times(self, a, b):
        return bs_beta_times(self, a, b)

    def delta_l(self, a, b, c):
        return bs_delta_l(self, a, b, c)

    def delta_l_inv(self, a, b, c):
        return bs_delta_l_inv(self, a, b, c)

    def is_iso(self, f):
        return f.reindex.is_bijective() and all(self.base.is_iso(g) for g in f.components)

    def objects(self, bound):
        """All polynomials with ``r <= max_add``, ``m_i <= max_mul`` and alphabets up to ``bound``.

        Ordered by additive length, then the tuple of multiplicative lengths,
        then the alphabets, all lexicographically.
        """
        alphabet = self.base.objects(bound)
        out = []
        for r in range(self.max_add + 1):
            for lengths in itertools.product(range(self.max_mul + 1), repeat=r):
                pools = [itertools.product(alphabet, repeat=m) for m in lengths]
                for monos in itertools.product(*[list(p) for p in pools]):
                    out.append(BsObj(monos))
        return out

    def random_mor(self, rng, dom, cod):
        """Uniform reindexing function among those admitting components, then random components."""
        base = self.base
        s, r = cod.r, dom.r
        if s == 0 and r > 0:
            return None
        src = self.values(dom)
        tgt = self.values(cod)

        def components_for(phi):
            comps = []
            for k, fib in enumerate(fibers(phi)):
                g = base.random_mor(rng, sum_objs(base, [src[i - 1] for i in fib]), tgt[k])
                if g is None:
                    return None
                comps.append(g)
            return comps

        for _ in range(8):
            phi = IndexFn(s, [rng.randint(1, s) for _ in range(r)])
            comps = components_for(phi)
            if comps is not None:
                return BsMor(dom, cod, phi, comps)
        candidates = [IndexFn(s, vals) for vals in itertools.product(range(1, s + 1), repeat=r)]
        rng.shuffle(candidates)
        for phi in candidates:
            comps = components_for(phi)
            if comps is not None:
                return BsMor(dom, cod, phi, comps)
        return None

    def obj_to_json(self, a):
        return {
            "bs": self.base.name,
            "monomials": [[self.base.obj_to_json(x) for x in m] for m in a.monomials],
        }

    def obj_from_json(self, data):
        return BsObj([[self.base.obj_from_json(x) for x in m] for m in data["monomials"]])

    def mor_to_json(self, f):
        return {
            "dom": self.obj_to_json(f.dom),
            "cod": self.obj_to_json(f.cod),
            "reindex": list(f.reindex.values),
            "components": [self.base.mor_to_json(g) for g in f.components],
        }

    def mor_from_json(self, data):
        dom = self.obj_from_json(data["dom"])
        cod = self.obj_from_json(data["cod"])
        return self.mor(
            dom,
            cod,
            IndexFn(cod.r, data["reindex"]),
            [self.base.mor_from_json(g) for g in data["components"]],
        )


def bs_category(base: BipermCat, max_add: int = 2, max_mul: int = 2) -> BsCategory:
    return BsCategory(base, max_add, max_mul)


def bs_id(bs: BsCategory, a: BsObj) -> BsMor:
    return bs.id(a)


def bs_eq(bs: BsCategory, x: BsMor, y: BsMor) -> bool:
    return (
        x.dom == y.dom
        and x.cod == y.cod
        and x.reindex == y.reindex
        and all(bs.base.mor_eq(g, h) for g, h in zip(x.components, y.components))
    )


def bs_compose(bs: BsCategory, h: BsMor, g: BsMor) -> BsMor:
    """``h . g``: reindex ``psi phi``, components regrouped by a coherence isomorphism."""
    if g.cod != h.dom:
        raise TypingError(f"cannot compose: {g.cod!r} != {h.dom!r}")
    base = bs.base
    phi, psi = g.reindex, h.reindex
    src = bs.values(g.dom)
    psi_fibers = fibers(psi)
    comps = []
    for p in range(1, psi.cod + 1):
        fiber = [i for i in range(1, phi.dom + 1) if psi(phi(i)) == p]
        sigma = realize_sigma(base, [src[i - 1] for i in fiber], grouping_perm(phi, psi, p))
        middle = sum_mors(base, [g.components[k - 1] for k in psi_fibers[p - 1]])
        comps.append(base.compose(h.components[p - 1], base.compose(middle, sigma)))
    return BsMor(g.dom, h.cod, phi.then(psi), comps)


def bs_mor_sum(bs: BsCategory, x: BsMor, y: BsMor) -> BsMor:
    return BsMor(
        bs_obj_sum(x.dom, y.dom),
        bs_obj_sum(x.cod, y.cod),
        coproduct_fn(x.reindex, y.reindex),
        x.components + y.components,
    )


def bs_mor_prod(bs: BsCategory, x: BsMor, y: BsMor) -> BsMor:
    """Component at ``(k, y)`` is ``(g^k (x) h^y) . delta^-1`` over the two fibers."""
    base = bs.base
    a_vals, c_vals = bs.values(x.dom), bs.values(y.dom)
    phi_f, psi_f = fibers(x.reindex), fibers(y.reindex)
    comps = []
    for k, g in enumerate(x.components):
        left = [a_vals[i - 1] for i in phi_f[k]]
        for q, h in enumerate(y.components):
            right = [c_vals[p - 1] for p in psi_f[q]]
            undistribute = realize_delta_inv(base, left, right)
            comps.append(base.compose(base.otimes_mor(g, h), undistribute))
    return BsMor(
        bs_obj_prod(x.dom, y.dom),
        bs_obj_prod(x.cod, y.cod),
        product_fn(x.reindex, y.reindex),
        comps,
    )


def bs_beta_plus(bs: BsCategory, a: BsObj, b: BsObj) -> BsMor:
    return bs.perm_mor(bs_obj_sum(a, b), bs_obj_sum(b, a), block_perm(a.r, b.r))


def bs_beta_times(bs: BsCategory, a: BsObj, b: BsObj) -> BsMor:
    base = bs.base
    av, bv = bs.values(a), bs.values(b)
    comps = [base.beta_times(av[i], bv[k]) for k in range(b.r) for i in range(a.r)]
    return BsMor(bs_obj_prod(a, b), bs_obj_prod(b, a), swap_perm(a.r, b.r).as_index_fn(), comps)


def bs_delta_l(bs: BsCategory, a: BsObj, b: BsObj, c: BsObj) -> BsMor:
    """``a (b + c) -> ab + ac``: reindex by distribution, identity components."""
    return bs.perm_mor(
        bs_obj_prod(a, bs_obj_sum(b, c)),
        bs_obj_sum(bs_obj_prod(a, b), bs_obj_prod(a, c)),
        distribute_perm(a.r, b.r, c.r),
    )


def bs_delta_l_inv(bs: BsCategory, a: BsObj, b: BsObj, c: BsObj) -> BsMor:
    return bs.perm_mor(
        bs_obj_sum(bs_obj_prod(a, b), bs_obj_prod(a, c)),
        bs_obj_prod(a, bs_obj_sum(b, c)),
        distribute_perm(a.r, b.r, c.r).inverse(),
    )


def bs_struct_identities(bs: BsCategory, a: BsObj, b: BsObj, c: BsObj) -> dict:
    """The structure maps of ``Bs A`` that are identities, as explicit morphisms."""
    return {
        "lambda_zero": bs.id(bs_obj_prod(ZERO, a)),
        "rho_zero": bs.id(bs_obj_prod(a, ZERO)),
        "delta_r": bs.id(bs_obj_prod(bs_obj_sum(a, b), c)),
    }


def sigma_for(bs: BsCategory, a: BsObj, phi: IndexFn):
    """Coherence isomorphism regrouping the monomials of ``a`` by the fibers of ``phi``."""
    return realize_sigma(bs.base, bs.values(a), stable_sort_perm(phi.values))
