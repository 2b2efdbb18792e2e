"""Suite registry: which laws run, over which samplers, for each suite name.

The CLI, ``replay`` and the coverage manifest all go through
:func:`build_groups`, so a law id always means the same check.
"""

from __future__ import annotations

from .axioms import bipermutative_laws, category_laws, permutative_laws, sbf_laws
from .checks import AxiomReport, Group, Sampler, SamplerConfig, run_groups, skip
from .core import BipermCat
from .mutations import corrupt_f2times, identity_beta_plus, identity_delta_l, twisted_eta
from .strictify import BsCategory
from .transport import (
    R_embed,
    adjunction_groups,
    bs_composition_groups,
    bs_functor,
    bs_sampler,
    identity_sbf,
    left_adjoint,
    naturality_groups,
    transport_groups,
)

SUITES = (
    "permutative",
    "bipermutative",
    "sbf",
    "strictify-axioms",
    "adjunction",
    "naturality",
    "functor-transport",
)


def _full_laws(cat: BipermCat):
    return (
        category_laws(cat)
        + permutative_laws(cat, "additive")
        + permutative_laws(cat, "multiplicative")
        + bipermutative_laws(cat)
    )


def apply_mutation(cat: BipermCat, mutation: str | None) -> BipermCat:
    if mutation == "identity-beta-plus":
        return identity_beta_plus(cat)
    if mutation == "identity-delta-l":
        return identity_delta_l(cat)
    return cat


def build_groups(name: str, cat: BipermCat, config: SamplerConfig, mutation: str | None = None):
    """``(groups, skipped)`` for one suite over the base instance ``cat``."""
    cat = apply_mutation(cat, mutation)
    skips: list = []
    base = Sampler(cat, config)
    if name == "permutative":
        groups = [Group(name, permutative_laws(cat, "additive") + permutative_laws(cat, "multiplicative"), base)]
    elif name == "bipermutative":
        groups = [Group(name, _full_laws(cat), base)]
    elif name == "sbf":
        bs, bs_samp = bs_sampler(cat, config)
        groups = [
            Group(name, sbf_laws(identity_sbf(cat)) + sbf_laws(R_embed(cat, bs)), base),
            Group(name, sbf_laws(left_adjoint(bs)), bs_samp),
        ]
        if mutation == "corrupt-f2times":
            groups.append(Group(name, sbf_laws(corrupt_f2times(cat)), base))
    elif name == "strictify-axioms":
        bs, bs_samp = bs_sampler(cat, config)
        groups = [Group(name, _full_laws(bs), bs_samp)]
    elif name == "adjunction":
        eta_fn = None
        if mutation == "twisted-eta":
            eta_fn = twisted_eta(BsCategory(cat, config.max_add_len, config.max_mul_len))
        groups = adjunction_groups(cat, config, eta_fn)
    elif name == "naturality":
        # The L-square for Bs(id) lives over Bs(Bs A); keep the inner level small.
        inner = BsCategory(cat, 1, 1)
        groups = []
        for f in (R_embed(cat), identity_sbf(cat), bs_functor(identity_sbf(cat), inner, inner)):
            g, s = naturality_groups(f, config)
            groups += g
            skips += s
    elif name == "functor-transport":
        bs = BsCategory(cat, config.max_add_len, config.max_mul_len)
        inner = BsCategory(cat, 1, 1)
        L, R = left_adjoint(bs), R_embed(cat, bs)
        groups = (
            transport_groups(identity_sbf(cat), config)
            + transport_groups(R, config)
            + bs_composition_groups(L, R, config)
            + bs_composition_groups(R_embed(cat, inner), left_adjoint(inner), config)
        )
    else:
        raise KeyError(name)
    return groups, skips


def run_suite(name: str, cat: BipermCat, config: SamplerConfig, mutation: str | None = None) -> AxiomReport:
    groups, skips = build_groups(name, cat, config, mutation)
    report = run_groups(name, groups)
    for s in skips:
        skip(report, s["law"], s["reason"])
    return report


# Each in-scope diagram family and the law ids that check it.  ``{A}`` is the
# instance name.
COVERAGE = {
    "permutative structure (strict associativity, units, braiding)": [
        ("permutative", "permutative-add/hexagon"),
        ("permutative", "permutative-add/symmetry"),
        ("permutative", "permutative-add/braiding-naturality"),
        ("permutative", "permutative-mul/hexagon"),
        ("permutative", "permutative-mul/assoc-obj"),
    ],
    "bipermutative compatibility: left distributivity and braiding": [
        ("bipermutative", "bipermutative/ldist-braiding-square"),
    ],
    "bipermutative compatibility: additive braiding and right distributivity": [
        ("bipermutative", "bipermutative/beta-plus-rdist-square"),
    ],
    "bipermutative compatibility: 2x2 distributivity": [
        ("bipermutative", "bipermutative/2x2-distributivity"),
    ],
    "multiplicative zeros, right distributivity, beta-times at zero": [
        ("bipermutative", "bipermutative/left-mult-zero-naturality"),
        ("bipermutative", "bipermutative/right-distributivity-naturality"),
        ("bipermutative", "bipermutative/beta-times-zero"),
    ],
    "monoidal functor unity and associativity": [
        ("sbf", "sbf[R[{A}]]/add-left-unity"),
        ("sbf", "sbf[R[{A}]]/mul-associativity"),
        ("sbf", "sbf[L[{A}]]/mul-associativity"),
    ],
    "symmetric bimonoidal functor distributivity diagrams (right and left)": [
        ("sbf", "sbf[L[{A}]]/right-distributivity"),
        ("sbf", "sbf[L[{A}]]/left-distributivity"),
        ("sbf", "sbf[L[{A}]]/right-zero"),
        ("sbf", "sbf[L[{A}]]/left-zero"),
    ],
    "L2 product constraint naturality": [
        ("sbf", "sbf[L[{A}]]/mul-constraint-naturality"),
    ],
    "Bs A is a category (composition through the grouping isomorphism)": [
        ("strictify-axioms", "category/associativity"),
        ("strictify-axioms", "category/identity-units"),
    ],
    "sums and products of Bs morphisms are functorial": [
        ("strictify-axioms", "permutative-add/functor-composition"),
        ("strictify-axioms", "permutative-mul/functor-composition"),
    ],
    "Bs A braidings (block and swap permutations)": [
        ("strictify-axioms", "permutative-add/braiding-naturality"),
        ("strictify-axioms", "permutative-add/hexagon"),
        ("strictify-axioms", "permutative-mul/hexagon"),
    ],
    "beta-hat-times is natural": [
        ("strictify-axioms", "permutative-mul/braiding-naturality"),
    ],
    "Bs A distributivity and zeros": [
        ("strictify-axioms", "bipermutative/2x2-distributivity"),
        ("strictify-axioms", "bipermutative/ldist-braiding-square"),
        ("strictify-axioms", "bipermutative/left-distributivity-naturality"),
    ],
    "Bs f is strict": [
        ("functor-transport", "transport[R[{A}]]/strict-constraints"),
    ],
    "Bs f preserves products of morphisms": [
        ("functor-transport", "transport[R[{A}]]/preserves-product-mor"),
        ("functor-transport", "transport[id[{A}]]/preserves-product-mor"),
    ],
    "Bs on functors respects composition": [
        ("functor-transport", "Bs-functoriality[L[{A}].R[{A}]]/morphisms"),
    ],
    "unit eta is a bimonoidal natural transformation": [
        ("adjunction", "bimonnat[unit]/naturality"),
        ("adjunction", "bimonnat[unit]/additive-unit"),
        ("adjunction", "bimonnat[unit]/additive-monoidal"),
        ("adjunction", "bimonnat[unit]/multiplicative-unit"),
        ("adjunction", "bimonnat[unit]/multiplicative-monoidal"),
    ],
    "counit is the identity bimonoidal transformation": [
        ("adjunction", "bimonnat[counit]/naturality"),
        ("adjunction", "adjunction/LR-identity-mor"),
    ],
    "triangle identities": [
        ("adjunction", "adjunction/left-triangle"),
        ("adjunction", "adjunction/right-triangle"),
    ],
    "eta is not a natural isomorphism": [
        ("adjunction", "adjunction/unit-invertible-iff-length-one"),
    ],
    "naturality of R and L in f": [
        ("naturality", "naturality-R[R[{A}]]/morphisms"),
        ("naturality", "naturality-L[Bs(id[{A}])]/morphisms"),
    ],
}


def coverage_manifest(cat: BipermCat) -> dict:
    return {
        diagram: [(suite, law.format(A=cat.name)) for suite, law in entries]
        for diagram, entries in COVERAGE.items()
    }
