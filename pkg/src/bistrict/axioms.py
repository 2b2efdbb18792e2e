"""Axiom suites for permutative and bipermutative categories, symmetric
bimonoidal functors and bimonoidal natural transformations.

Each ``*_laws`` function returns the list of :class:`~bistrict.checks.Law`
objects for one structure; the ``check_*`` wrappers run them.  Law ids are
stable strings of the form ``"<group>/<name>"``.
"""

from __future__ import annotations

from .checks import AxiomReport, Eq, Holds, Law, Sampler, SamplerConfig, run_laws
from .core import BipermCat


def _ops(cat: BipermCat, structure: str):
    if structure == "additive":
        return cat.oplus, cat.oplus_mor, cat.beta_plus, cat.zero, "add"
    if structure == "multiplicative":
        return cat.otimes, cat.otimes_mor, cat.beta_times, cat.one, "mul"
    raise ValueError(f"unknown structure {structure!r}")


def category_laws(cat: BipermCat) -> list[Law]:
    C = cat
    return [
        Law(
            "category/identity-units",
            ("mor",),
            lambda f: Eq(C, [C.id(C.dom(f)), f, C.id(C.cod(f))], f),
        ),
        Law(
            "category/associativity",
            ("chain3",),
            lambda f, g, h: Eq(C, C.compose(h, C.compose(g, f)), C.compose(C.compose(h, g), f)),
        ),
    ]


def permutative_laws(cat: BipermCat, structure: str) -> list[Law]:
    C = cat
    op, op_mor, beta, unit, tag = _ops(cat, structure)
    g = f"permutative-{tag}"

    def interchange(f, f2, h, h2):
        return Eq(C, op_mor(C.compose(f2, f), C.compose(h2, h)), [op_mor(f, h), op_mor(f2, h2)])

    return [
        Law(f"{g}/assoc-obj", ("obj", "obj", "obj"), lambda a, b, c: Eq(C, op(op(a, b), c), op(a, op(b, c)), "obj")),
        Law(f"{g}/right-unit-obj", ("obj",), lambda a: Eq(C, op(a, unit), a, "obj")),
        Law(f"{g}/left-unit-obj", ("obj",), lambda a: Eq(C, op(unit, a), a, "obj")),
        Law(
            f"{g}/assoc-mor",
            ("mor", "mor", "mor"),
            lambda f, h, k: Eq(C, op_mor(op_mor(f, h), k), op_mor(f, op_mor(h, k))),
        ),
        Law(
            f"{g}/unit-mor",
            ("mor",),
            lambda f: Holds(
                C.mor_eq(op_mor(f, C.id(unit)), f) and C.mor_eq(op_mor(C.id(unit), f), f),
                C.mor_to_json(f),
            ),
        ),
        Law(f"{g}/functor-identity", ("obj", "obj"), lambda a, b: Eq(C, op_mor(C.id(a), C.id(b)), C.id(op(a, b)))),
        Law(f"{g}/functor-composition", ("chain2", "chain2"), interchange),
        Law(
            f"{g}/braiding-naturality",
            ("mor", "mor"),
            lambda f, h: Eq(
                C,
                [beta(C.dom(f), C.dom(h)), op_mor(h, f)],
                [op_mor(f, h), beta(C.cod(f), C.cod(h))],
            ),
        ),
        Law(
            f"{g}/symmetry",
            ("obj", "obj"),
            lambda a, b: Eq(C, [beta(a, b), beta(b, a)], C.id(op(a, b))),
        ),
        Law(
            f"{g}/hexagon",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(
                C,
                beta(a, op(b, c)),
                [op_mor(beta(a, b), C.id(c)), op_mor(C.id(b), beta(a, c))],
            ),
        ),
        Law(
            f"{g}/hexagon-mirror",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(
                C,
                beta(op(a, b), c),
                [op_mor(C.id(a), beta(b, c)), op_mor(beta(a, c), C.id(b))],
            ),
        ),
    ]


def bipermutative_laws(cat: BipermCat) -> list[Law]:
    C = cat
    Z = C.zero
    P, T = C.oplus, C.otimes
    Pm, Tm = C.oplus_mor, C.otimes_mor
    i = C.id
    g = "bipermutative"
    return [
        Law(f"{g}/left-mult-zero-obj", ("obj",), lambda a: Eq(C, T(Z, a), Z, "obj")),
        Law(f"{g}/right-mult-zero-obj", ("obj",), lambda a: Eq(C, T(a, Z), Z, "obj")),
        Law(f"{g}/left-mult-zero-naturality", ("mor",), lambda f: Eq(C, Tm(i(Z), f), i(Z))),
        Law(f"{g}/right-mult-zero-naturality", ("mor",), lambda f: Eq(C, Tm(f, i(Z)), i(Z))),
        Law(f"{g}/beta-times-zero", ("obj",), lambda a: Eq(C, C.beta_times(a, Z), i(Z))),
        Law(f"{g}/right-distributivity-obj", ("obj", "obj", "obj"), lambda a, b, c: Eq(C, T(P(a, b), c), P(T(a, c), T(b, c)), "obj")),
        Law(
            f"{g}/right-distributivity-naturality",
            ("mor", "mor", "mor"),
            lambda f, h, k: Eq(C, Tm(Pm(f, h), k), Pm(Tm(f, k), Tm(h, k))),
        ),
        Law(
            f"{g}/left-distributivity-inverse",
            ("obj", "obj", "obj"),
            lambda a, b, c: Holds(
                C.mor_eq(C.compose(C.delta_l_inv(a, b, c), C.delta_l(a, b, c)), i(T(a, P(b, c))))
                and C.mor_eq(C.compose(C.delta_l(a, b, c), C.delta_l_inv(a, b, c)), i(P(T(a, b), T(a, c)))),
                [C.obj_to_json(x) for x in (a, b, c)],
            ),
        ),
        Law(
            f"{g}/left-distributivity-naturality",
            ("mor", "mor", "mor"),
            lambda f, h, k: Eq(
                C,
                [C.delta_l(C.dom(f), C.dom(h), C.dom(k)), Pm(Tm(f, h), Tm(f, k))],
                [Tm(f, Pm(h, k)), C.delta_l(C.cod(f), C.cod(h), C.cod(k))],
            ),
        ),
        Law(
            f"{g}/ldist-braiding-square",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(
                C,
                C.delta_l(a, b, c),
                [C.beta_times(a, P(b, c)), Pm(C.beta_times(b, a), C.beta_times(c, a))],
            ),
        ),
        Law(
            f"{g}/beta-plus-rdist-square",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(C, C.beta_plus(T(a, c), T(b, c)), Tm(C.beta_plus(a, b), i(c))),
        ),
        Law(
            f"{g}/2x2-distributivity",
            ("obj", "obj", "obj", "obj"),
            lambda a, b, c, d: Eq(
                C,
                [
                    Pm(C.delta_l(a, c, d), C.delta_l(b, c, d)),
                    Pm(Pm(i(T(a, c)), C.beta_plus(T(a, d), T(b, c))), i(T(b, d))),
                ],
                C.delta_l(P(a, b), c, d),
            ),
        ),
    ]


def check_permutative(cat: BipermCat, structure: str, config: SamplerConfig | None = None, sampler: Sampler | None = None) -> AxiomReport:
    sampler = sampler or Sampler(cat, config or SamplerConfig())
    return run_laws(f"permutative-{structure}", permutative_laws(cat, structure), sampler)


def check_bipermutative(cat: BipermCat, config: SamplerConfig | None = None, sampler: Sampler | None = None) -> AxiomReport:
    sampler = sampler or Sampler(cat, config or SamplerConfig())
    laws = (
        category_laws(cat)
        + permutative_laws(cat, "additive")
        + permutative_laws(cat, "multiplicative")
        + bipermutative_laws(cat)
    )
    return run_laws("bipermutative", laws, sampler)


# -- symmetric bimonoidal functors --------------------------------------------


def sbf_laws(f) -> list[Law]:
    """Laws for a symmetric bimonoidal functor ``f`` (see :mod:`bistrict.transport`)."""
    A, B = f.source, f.target
    F, Fm = f.obj, f.mor
    i = B.id
    g = f"sbf[{f.name}]"

    def monoidal(tag, op, a_op_mor, op_mor, beta_a, beta_b, unit_a, unit_b, f2, f0):
        return [
            Law(
                f"{g}/{tag}-left-unity",
                ("obj",),
                lambda a: Eq(B, [op_mor(f0, i(F(a))), f2(unit_a, a)], i(F(a))),
            ),
            Law(
                f"{g}/{tag}-right-unity",
                ("obj",),
                lambda a: Eq(B, [op_mor(i(F(a)), f0), f2(a, unit_a)], i(F(a))),
            ),
            Law(
                f"{g}/{tag}-associativity",
                ("obj", "obj", "obj"),
                lambda a, b, c: Eq(
                    B,
                    [op_mor(f2(a, b), i(F(c))), f2(op(a, b), c)],
                    [op_mor(i(F(a)), f2(b, c)), f2(a, op(b, c))],
                ),
            ),
            Law(
                f"{g}/{tag}-constraint-naturality",
                ("mor", "mor"),
                lambda x, y: Eq(
                    B,
                    [f2(A.dom(x), A.dom(y)), Fm(a_op_mor(x, y))],
                    [op_mor(Fm(x), Fm(y)), f2(A.cod(x), A.cod(y))],
                ),
            ),
            Law(
                f"{g}/{tag}-braiding",
                ("obj", "obj"),
                lambda a, b: Eq(
                    B,
                    [beta_b(F(a), F(b)), f2(b, a)],
                    [f2(a, b), Fm(beta_a(a, b))],
                ),
            ),
        ]

    laws = [
        Law(f"{g}/functor-identity", ("obj",), lambda a: Eq(B, Fm(A.id(a)), i(F(a)))),
        Law(
            f"{g}/functor-composition",
            ("chain2",),
            lambda x, y: Eq(B, Fm(A.compose(y, x)), [Fm(x), Fm(y)]),
        ),
    ]
    laws += monoidal("add", A.oplus, A.oplus_mor, B.oplus_mor, A.beta_plus, B.beta_plus, A.zero, B.zero, f.f2plus, f.f0plus)
    laws += monoidal("mul", A.otimes, A.otimes_mor, B.otimes_mor, A.beta_times, B.beta_times, A.one, B.one, f.f2times, f.f0times)
    if f.f2times_inv is not None and f.f0times_inv is not None:
        laws += [
            Law(
                f"{g}/mul-constraint-inverse",
                ("obj", "obj"),
                lambda a, b: Holds(
                    B.mor_eq(B.compose(f.f2times_inv(a, b), f.f2times(a, b)), i(B.otimes(F(a), F(b))))
                    and B.mor_eq(B.compose(f.f2times(a, b), f.f2times_inv(a, b)), i(F(A.otimes(a, b)))),
                    [A.obj_to_json(a), A.obj_to_json(b)],
                ),
            ),
            Law(
                f"{g}/mul-unit-inverse",
                (),
                lambda: Holds(
                    B.mor_eq(B.compose(f.f0times_inv, f.f0times), i(B.one))
                    and B.mor_eq(B.compose(f.f0times, f.f0times_inv), i(F(A.one))),
                ),
            ),
        ]
    T, P = B.otimes_mor, B.oplus_mor
    laws += [
        Law(
            f"{g}/right-zero",
            ("obj",),
            lambda a: Eq(B, [T(i(F(a)), f.f0plus), f.f2times(a, A.zero)], f.f0plus),
        ),
        Law(
            f"{g}/right-distributivity",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(
                B,
                [P(f.f2times(a, c), f.f2times(b, c)), f.f2plus(A.otimes(a, c), A.otimes(b, c))],
                [T(f.f2plus(a, b), i(F(c))), f.f2times(A.oplus(a, b), c)],
            ),
        ),
        Law(
            f"{g}/left-zero",
            ("obj",),
            lambda a: Eq(B, [T(f.f0plus, i(F(a))), f.f2times(A.zero, a)], f.f0plus),
        ),
        Law(
            f"{g}/left-distributivity",
            ("obj", "obj", "obj"),
            lambda a, b, c: Eq(
                B,
                [
                    B.delta_l(F(a), F(b), F(c)),
                    P(f.f2times(a, b), f.f2times(a, c)),
                    f.f2plus(A.otimes(a, b), A.otimes(a, c)),
                ],
                [T(i(F(a)), f.f2plus(b, c)), f.f2times(a, A.oplus(b, c)), Fm(A.delta_l(a, b, c))],
            ),
        ),
    ]
    return laws


def check_sbf(f, config: SamplerConfig | None = None, sampler: Sampler | None = None) -> AxiomReport:
    sampler = sampler or Sampler(f.source, config or SamplerConfig())
    return run_laws("sbf", sbf_laws(f), sampler)


def bimonnat_laws(theta, f, h, name: str) -> list[Law]:
    """Naturality and the four monoidal diagrams for ``theta: f -> h``."""
    A, B = f.source, f.target
    g = f"bimonnat[{name}]"
    return [
        Law(
            f"{g}/naturality",
            ("mor",),
            lambda x: Eq(B, [theta(A.dom(x)), h.mor(x)], [f.mor(x), theta(A.cod(x))]),
        ),
        Law(f"{g}/additive-unit", (), lambda: Eq(B, [f.f0plus, theta(A.zero)], h.f0plus)),
        Law(
            f"{g}/additive-monoidal",
            ("obj", "obj"),
            lambda a, b: Eq(
                B,
                [f.f2plus(a, b), theta(A.oplus(a, b))],
                [B.oplus_mor(theta(a), theta(b)), h.f2plus(a, b)],
            ),
        ),
        Law(f"{g}/multiplicative-unit", (), lambda: Eq(B, [f.f0times, theta(A.one)], h.f0times)),
        Law(
            f"{g}/multiplicative-monoidal",
            ("obj", "obj"),
            lambda a, b: Eq(
                B,
                [f.f2times(a, b), theta(A.otimes(a, b))],
                [B.otimes_mor(theta(a), theta(b)), h.f2times(a, b)],
            ),
        ),
    ]
