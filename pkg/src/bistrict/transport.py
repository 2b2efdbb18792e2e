"""Symmetric bimonoidal functors, ``Bs`` on functors, and the adjunction
``L -| R`` between ``Bs A`` and ``A``.

``L`` evaluates a formal polynomial in ``A``.  ``R`` views an object as a
one-monomial, one-alphabet polynomial.  The unit ``eta`` collapses a
polynomial onto its value, and the counit is the identity because ``L R`` is
literally the identity functor.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .axioms import bimonnat_laws, sbf_laws
from .checks import AxiomReport, Eq, Group, Holds, Law, Sampler, SamplerConfig, run_groups, skip
from .core import (
    BipermCat,
    CapabilityError,
    is_identity,
    prod_objs,
    realize_delta,
    realize_delta_inv,
    sum_mors,
    sum_objs,
)
from .indexcalc import IndexFn, fibers
from .strictify import BsCategory, BsMor, BsObj, sigma_for


def _sampled_pairs(laws: list[Law]) -> list[Law]:
    # comparisons of composite functors over Bs objects are costly; only unary laws get the exhaustive tier
    return [replace(law, sampled_only=len(law.sig) > 1) for law in laws]


@dataclass(frozen=True)
class SBFunctor:
    """A symmetric bimonoidal functor ``source -> target``.

    ``f2plus(a, b): F a + F b -> F(a + b)`` and ``f0plus: 0 -> F 0``, and
    likewise for the product.  The product inverses are ``None`` unless the
    functor is multiplicatively strong.
    """

    name: str
    source: BipermCat
    target: BipermCat
    obj: Callable
    mor: Callable
    f2plus: Callable
    f0plus: object
    f2times: Callable
    f0times: object
    f2times_inv: Callable | None = None
    f0times_inv: object | None = None

    @property
    def multiplicatively_strong(self) -> bool:
        return self.f2times_inv is not None and self.f0times_inv is not None


@dataclass(frozen=True)
class BimonNatTrans:
    source: SBFunctor
    target: SBFunctor
    component: Callable = field(compare=False)

    def __call__(self, a):
        return self.component(a)


def identity_sbf(cat: BipermCat) -> SBFunctor:
    def i2(a, b, op):
        return cat.id(op(a, b))

    return SBFunctor(
        name=f"id[{cat.name}]",
        source=cat,
        target=cat,
        obj=lambda a: a,
        mor=lambda g: g,
        f2plus=lambda a, b: i2(a, b, cat.oplus),
        f0plus=cat.id(cat.zero),
        f2times=lambda a, b: i2(a, b, cat.otimes),
        f0times=cat.id(cat.one),
        f2times_inv=lambda a, b: i2(a, b, cat.otimes),
        f0times_inv=cat.id(cat.one),
    )


def compose_sbf(h: SBFunctor, f: SBFunctor) -> SBFunctor:
    """``h . f`` with the composite constraints ``h(f2) . h2`` and ``h(f0) . h0``."""
    C = h.target
    strong = f.multiplicatively_strong and h.multiplicatively_strong
    return SBFunctor(
        name=f"{h.name}.{f.name}",
        source=f.source,
        target=C,
        obj=lambda a: h.obj(f.obj(a)),
        mor=lambda g: h.mor(f.mor(g)),
        f2plus=lambda a, b: C.compose(h.mor(f.f2plus(a, b)), h.f2plus(f.obj(a), f.obj(b))),
        f0plus=C.compose(h.mor(f.f0plus), h.f0plus),
        f2times=lambda a, b: C.compose(h.mor(f.f2times(a, b)), h.f2times(f.obj(a), f.obj(b))),
        f0times=C.compose(h.mor(f.f0times), h.f0times),
        f2times_inv=(lambda a, b: C.compose(h.f2times_inv(f.obj(a), f.obj(b)), h.mor(f.f2times_inv(a, b))))
        if strong
        else None,
        f0times_inv=C.compose(h.f0times_inv, h.mor(f.f0times_inv)) if strong else None,
    )


# -- iterated constraints -------------------------------------------------------


def mul_iterate(f: SBFunctor, mono) -> object:
    """``(x)_j F a_j -> F((x)_j a_j)``, left-folded; ``f0times`` for the empty monomial."""
    A, B = f.source, f.target
    if not mono:
        return f.f0times
    acc = B.id(f.obj(mono[0]))
    cur = mono[0]
    for a in mono[1:]:
        acc = B.compose(f.f2times(cur, a), B.otimes_mor(acc, B.id(f.obj(a))))
        cur = A.otimes(cur, a)
    return acc


def mul_iterate_inv(f: SBFunctor, mono) -> object:
    A, B = f.source, f.target
    if not mono:
        return f.f0times_inv
    if len(mono) == 1:
        return B.id(f.obj(mono[0]))
    head = mono[:-1]
    last = mono[-1]
    split = f.f2times_inv(prod_objs(A, head), last)
    return B.compose(B.otimes_mor(mul_iterate_inv(f, head), B.id(f.obj(last))), split)


def add_iterate(f: SBFunctor, xs) -> object:
    """``(+)_i F x_i -> F((+)_i x_i)``; ``f0plus`` when empty, identity for one summand."""
    A, B = f.source, f.target
    if not xs:
        return f.f0plus
    acc = B.id(f.obj(xs[0]))
    cur = xs[0]
    for x in xs[1:]:
        acc = B.compose(f.f2plus(cur, x), B.oplus_mor(acc, B.id(f.obj(x))))
        cur = A.oplus(cur, x)
    return acc


# -- Bs on functors -------------------------------------------------------------


def bs_functor(f: SBFunctor, source_bs: BsCategory | None = None, target_bs: BsCategory | None = None) -> SBFunctor:
    """The strict functor ``Bs f: Bs A -> Bs B``.

    Reindexing is kept; component ``k`` is
    ``f2times^-1 . f(g^k) . f2plus . ((+)_i f2times)``.
    """
    if not f.multiplicatively_strong:
        raise CapabilityError(f"{f.name} is not multiplicatively strong: product constraint inverses are missing")
    src = source_bs or BsCategory(f.source)
    tgt = target_bs or BsCategory(f.target)
    B = f.target

    def on_obj(a: BsObj) -> BsObj:
        return BsObj([[f.obj(x) for x in m] for m in a.monomials])

    def on_mor(x: BsMor) -> BsMor:
        comps = []
        for k, fib in enumerate(fibers(x.reindex)):
            monos = [x.dom.monomials[i - 1] for i in fib]
            gather = sum_mors(B, [mul_iterate(f, m) for m in monos])
            merge = add_iterate(f, [src.monomial(m) for m in monos])
            out = mul_iterate_inv(f, x.cod.monomials[k])
            comps.append(B.compose(out, B.compose(f.mor(x.components[k]), B.compose(merge, gather))))
        return tgt.mor(on_obj(x.dom), on_obj(x.cod), x.reindex, comps)

    return SBFunctor(
        name=f"Bs({f.name})",
        source=src,
        target=tgt,
        obj=on_obj,
        mor=on_mor,
        f2plus=lambda a, b: tgt.id(tgt.oplus(on_obj(a), on_obj(b))),
        f0plus=tgt.id(tgt.zero),
        f2times=lambda a, b: tgt.id(tgt.otimes(on_obj(a), on_obj(b))),
        f0times=tgt.id(tgt.one),
        f2times_inv=lambda a, b: tgt.id(tgt.otimes(on_obj(a), on_obj(b))),
        f0times_inv=tgt.id(tgt.one),
    )


# -- the adjunction ------------------------------------------------------------


def L_obj(bs: BsCategory, a: BsObj):
    return sum_objs(bs.base, bs.values(a))


def L_mor(bs: BsCategory, x: BsMor):
    """``((+)_k g^k) . sigma`` where ``sigma`` groups the monomials by fiber."""
    A = bs.base
    return A.compose(sum_mors(A, list(x.components)), sigma_for(bs, x.dom, x.reindex))


def L2_times(bs: BsCategory, a: BsObj, b: BsObj):
    return realize_delta(bs.base, bs.values(a), bs.values(b))


def left_adjoint(bs: BsCategory) -> SBFunctor:
    A = bs.base
    return SBFunctor(
        name=f"L[{A.name}]",
        source=bs,
        target=A,
        obj=lambda a: L_obj(bs, a),
        mor=lambda x: L_mor(bs, x),
        f2plus=lambda a, b: A.id(A.oplus(L_obj(bs, a), L_obj(bs, b))),
        f0plus=A.id(A.zero),
        f2times=lambda a, b: L2_times(bs, a, b),
        f0times=A.id(A.one),
        f2times_inv=lambda a, b: realize_delta_inv(A, bs.values(a), bs.values(b)),
        f0times_inv=A.id(A.one),
    )


def R_embed(cat: BipermCat, bs: BsCategory | None = None) -> SBFunctor:
    """``a |-> <<a>>``, with constraints reindexed to the single monomial."""
    bs = bs or BsCategory(cat)
    A = cat
    one_to_one = IndexFn.identity(1)

    def R(a):
        return BsObj([[a]])

    def f2plus(a, b):
        return bs.mor(BsObj([[a], [b]]), R(A.oplus(a, b)), IndexFn.terminal(2), [A.id(A.oplus(a, b))])

    def f2times(a, b):
        return bs.mor(BsObj([[a, b]]), R(A.otimes(a, b)), one_to_one, [A.id(A.otimes(a, b))])

    def f2times_inv(a, b):
        return bs.mor(R(A.otimes(a, b)), BsObj([[a, b]]), one_to_one, [A.id(A.otimes(a, b))])

    return SBFunctor(
        name=f"R[{A.name}]",
        source=A,
        target=bs,
        obj=R,
        mor=lambda g: bs.mor(R(A.dom(g)), R(A.cod(g)), one_to_one, [g]),
        f2plus=f2plus,
        f0plus=bs.mor(bs.zero, R(A.zero), IndexFn.terminal(0), [A.id(A.zero)]),
        f2times=f2times,
        f0times=bs.mor(bs.one, R(A.one), one_to_one, [A.id(A.one)]),
        f2times_inv=f2times_inv,
        f0times_inv=bs.mor(R(A.one), bs.one, one_to_one, [A.id(A.one)]),
    )


def eta(bs: BsCategory, a: BsObj) -> BsMor:
    """Unit component ``a -> R L a``: the unique reindexing to one monomial, identity component."""
    value = L_obj(bs, a)
    return bs.mor(a, BsObj([[value]]), IndexFn.terminal(a.r), [bs.base.id(value)])


def unit(bs: BsCategory) -> BimonNatTrans:
    R = R_embed(bs.base, bs)
    return BimonNatTrans(identity_sbf(bs), compose_sbf(R, left_adjoint(bs)), lambda a: eta(bs, a))


def epsilon(cat: BipermCat, bs: BsCategory | None = None) -> BimonNatTrans:
    """Counit ``L R -> Id``; every component is an identity."""
    bs = bs or BsCategory(cat)
    LR = compose_sbf(left_adjoint(bs), R_embed(cat, bs))
    return BimonNatTrans(LR, identity_sbf(cat), lambda a: cat.id(a))


def is_strict_on(f: SBFunctor, objs) -> bool:
    """Whether every constraint of ``f`` is an identity on the given objects."""
    B = f.target
    if not (is_identity(B, f.f0plus) and is_identity(B, f.f0times)):
        return False
    for a in objs:
        for b in objs:
            if not (is_identity(B, f.f2plus(a, b)) and is_identity(B, f.f2times(a, b))):
                return False
    return True


# -- check suites ----------------------------------------------------------------


def bs_sampler(cat: BipermCat, config: SamplerConfig) -> tuple[BsCategory, Sampler]:
    bs = BsCategory(cat, config.max_add_len, config.max_mul_len)
    return bs, Sampler(bs, config, bound=config.max_alphabet_size)


def adjunction_laws(bs: BsCategory, eta_fn=None) -> tuple[list[Law], list[Law]]:
    """Laws over ``A`` and laws over ``Bs A``; ``eta_fn`` overrides the unit."""
    A = bs.base
    L = left_adjoint(bs)
    R = R_embed(A, bs)
    LR = compose_sbf(L, R)
    RL = compose_sbf(R, L)
    eta_fn = eta_fn or (lambda a: eta(bs, a))
    g = "adjunction"

    def lr_constraints_identity(a, b):
        return Holds(
            all(
                is_identity(A, m)
                for m in (LR.f2plus(a, b), LR.f2times(a, b), LR.f0plus, LR.f0times, LR.f2times_inv(a, b))
            ),
            [A.obj_to_json(a), A.obj_to_json(b)],
        )

    on_a = [
        Law(f"{g}/LR-identity-obj", ("obj",), lambda a: Eq(A, L.obj(R.obj(a)), a, "obj")),
        Law(f"{g}/LR-identity-mor", ("mor",), lambda x: Eq(A, L.mor(R.mor(x)), x)),
        Law(f"{g}/LR-constraints-identity", ("obj", "obj"), lr_constraints_identity),
        Law(
            f"{g}/right-triangle",
            ("obj",),
            lambda a: Eq(bs, [eta_fn(R.obj(a)), R.mor(A.id(a))], bs.id(R.obj(a))),
        ),
    ]
    on_a += bimonnat_laws(lambda a: A.id(a), LR, identity_sbf(A), "counit")
    on_a += sbf_laws(R)

    on_bs = [
        Law(
            f"{g}/left-triangle",
            ("obj",),
            lambda a: Eq(A, [L.mor(eta_fn(a)), A.id(L.obj(a))], A.id(L.obj(a))),
        ),
        Law(
            f"{g}/unit-shape",
            ("obj",),
            lambda a: Holds(
                eta_fn(a).reindex == IndexFn.terminal(a.r)
                and all(is_identity(A, c) for c in eta_fn(a).components),
                bs.obj_to_json(a),
            ),
        ),
        Law(
            f"{g}/unit-invertible-iff-length-one",
            ("obj",),
            lambda a: Holds(bs.is_iso(eta_fn(a)) == (a.r == 1), {"obj": bs.obj_to_json(a), "r": a.r}),
        ),
    ]
    on_bs += bimonnat_laws(eta_fn, identity_sbf(bs), RL, "unit")
    on_bs += sbf_laws(L)
    return on_a, on_bs


def adjunction_groups(cat: BipermCat, config: SamplerConfig, eta_fn=None) -> list[Group]:
    bs, bs_samp = bs_sampler(cat, config)
    on_a, on_bs = adjunction_laws(bs, eta_fn)
    return [Group("adjunction", on_a, Sampler(cat, config)), Group("adjunction", on_bs, bs_samp)]


def check_adjunction(cat: BipermCat, config: SamplerConfig | None = None, eta_fn=None) -> AxiomReport:
    return run_groups("adjunction", adjunction_groups(cat, config or SamplerConfig(), eta_fn))


def _functor_eq_laws(prefix: str, P: SBFunctor, Q: SBFunctor) -> list[Law]:
    """``P`` and ``Q`` agree on objects, morphisms and all constraint data."""
    C = P.target
    return _sampled_pairs([
        Law(f"{prefix}/objects", ("obj",), lambda a: Eq(C, P.obj(a), Q.obj(a), "obj")),
        Law(f"{prefix}/morphisms", ("mor",), lambda x: Eq(C, P.mor(x), Q.mor(x))),
        Law(f"{prefix}/additive-constraint", ("obj", "obj"), lambda a, b: Eq(C, P.f2plus(a, b), Q.f2plus(a, b))),
        Law(f"{prefix}/additive-unit", (), lambda: Eq(C, P.f0plus, Q.f0plus)),
        Law(
            f"{prefix}/multiplicative-constraint",
            ("obj", "obj"),
            lambda a, b: Eq(C, P.f2times(a, b), Q.f2times(a, b)),
        ),
        Law(f"{prefix}/multiplicative-unit", (), lambda: Eq(C, P.f0times, Q.f0times)),
    ])


def naturality_groups(f: SBFunctor, config: SamplerConfig) -> tuple[list[Group], list[dict]]:
    """``Bs f . R = R . f`` always; ``L . Bs f = f . L`` when ``f`` is strict.

    Returns the law groups and the skipped entries.
    """
    src_bs, src_samp = bs_sampler(f.source, config)
    tgt_bs = BsCategory(f.target, config.max_add_len, config.max_mul_len)
    Bsf = bs_functor(f, src_bs, tgt_bs)
    bound = config.max_alphabet_size if isinstance(f.source, BsCategory) else None
    a_samp = Sampler(f.source, config, bound=bound)
    r_square = _functor_eq_laws(
        f"naturality-R[{f.name}]",
        compose_sbf(Bsf, R_embed(f.source, src_bs)),
        compose_sbf(R_embed(f.target, tgt_bs), f),
    )
    groups = [Group("naturality", r_square, a_samp)]
    l_id = f"naturality-L[{f.name}]"
    if not is_strict_on(f, a_samp.objects[:12]):
        return groups, [{"law": l_id, "reason": f"{f.name} is not strict; the L-square only applies to strict functors"}]
    l_square = _functor_eq_laws(
        l_id,
        compose_sbf(left_adjoint(tgt_bs), Bsf),
        compose_sbf(f, left_adjoint(src_bs)),
    )
    groups.append(Group("naturality", l_square, src_samp))
    return groups, []


def check_naturality_squares(f: SBFunctor, config: SamplerConfig | None = None) -> AxiomReport:
    groups, skips = naturality_groups(f, config or SamplerConfig())
    report = run_groups("naturality", groups)
    for s in skips:
        skip(report, s["law"], s["reason"])
    return report


def transport_laws(f: SBFunctor, Bsf: SBFunctor) -> list[Law]:
    """``Bs f`` is strict and preserves every piece of structure."""
    S, T = Bsf.source, Bsf.target
    F, Fm = Bsf.obj, Bsf.mor
    g = f"transport[{f.name}]"
    return _sampled_pairs([
        Law(
            f"{g}/strict-constraints",
            ("obj", "obj"),
            lambda a, b: Holds(
                all(
                    is_identity(T, m)
                    for m in (Bsf.f2plus(a, b), Bsf.f2times(a, b), Bsf.f0plus, Bsf.f0times)
                ),
                [S.obj_to_json(a), S.obj_to_json(b)],
            ),
        ),
        Law(f"{g}/preserves-sum-obj", ("obj", "obj"), lambda a, b: Eq(T, F(S.oplus(a, b)), T.oplus(F(a), F(b)), "obj")),
        Law(f"{g}/preserves-product-obj", ("obj", "obj"), lambda a, b: Eq(T, F(S.otimes(a, b)), T.otimes(F(a), F(b)), "obj")),
        Law(f"{g}/preserves-units", (), lambda: Holds(F(S.zero) == T.zero and F(S.one) == T.one)),
        Law(f"{g}/preserves-sum-mor", ("mor", "mor"), lambda x, y: Eq(T, Fm(S.oplus_mor(x, y)), T.oplus_mor(Fm(x), Fm(y)))),
        Law(
            f"{g}/preserves-product-mor",
            ("mor", "mor"),
            lambda x, y: Eq(T, Fm(S.otimes_mor(x, y)), T.otimes_mor(Fm(x), Fm(y))),
        ),
        Law(f"{g}/preserves-beta-plus", ("obj", "obj"), lambda a, b: Eq(T, Fm(S.beta_plus(a, b)), T.beta_plus(F(a), F(b)))),
        Law(
            f"{g}/preserves-beta-times",
            ("obj", "obj"),
            lambda a, b: Eq(T, Fm(S.beta_times(a, b)), T.beta_times(F(a), F(b))),
        ),
        Law(
            f"{g}/preserves-delta-l",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(T, Fm(S.delta_l(a, b, c)), T.delta_l(F(a), F(b), F(c))),
        ),
        Law(f"{g}/preserves-identity", ("obj",), lambda a: Eq(T, Fm(S.id(a)), T.id(F(a)))),
        Law(f"{g}/preserves-composition", ("chain2",), lambda x, y: Eq(T, Fm(S.compose(y, x)), [Fm(x), Fm(y)])),
    ])


def transport_groups(f: SBFunctor, config: SamplerConfig) -> list[Group]:
    src_bs, samp = bs_sampler(f.source, config)
    Bsf = bs_functor(f, src_bs, BsCategory(f.target, config.max_add_len, config.max_mul_len))
    return [Group("functor-transport", transport_laws(f, Bsf), samp)]


def check_transport(f: SBFunctor, config: SamplerConfig | None = None) -> AxiomReport:
    return run_groups("functor-transport", transport_groups(f, config or SamplerConfig()))


def bs_composition_groups(h: SBFunctor, f: SBFunctor, config: SamplerConfig) -> list[Group]:
    """``Bs(h . f) = Bs h . Bs f`` as symmetric bimonoidal functors."""
    src_bs, samp = bs_sampler(f.source, config)
    mid_bs = BsCategory(f.target, config.max_add_len, config.max_mul_len)
    tgt_bs = BsCategory(h.target, config.max_add_len, config.max_mul_len)
    lhs = bs_functor(compose_sbf(h, f), src_bs, tgt_bs)
    rhs = compose_sbf(bs_functor(h, mid_bs, tgt_bs), bs_functor(f, src_bs, mid_bs))
    return [Group("functor-transport", _functor_eq_laws(f"Bs-functoriality[{h.name}.{f.name}]", lhs, rhs), samp)]


def check_bs_composition(h: SBFunctor, f: SBFunctor, config: SamplerConfig | None = None) -> AxiomReport:
    return run_groups("functor-transport", bs_composition_groups(h, f, config or SamplerConfig()))
