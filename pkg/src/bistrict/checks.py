"""Law-checking machinery shared by every axiom suite.

A :class:`Law` names one commuting diagram or equation.  It knows how to draw
inputs (objects, morphisms, composable chains) from a :class:`Sampler`, and
how to evaluate them into an :class:`Eq` or a :class:`Holds` verdict.
:func:`run_laws` evaluates a list of laws and collects the results in an
:class:`AxiomReport`.

Each law draws its cases from its own random stream, seeded by
``(seed, suite, law id)``.  Reports therefore do not depend on evaluation
order.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .core import BipermCat, TypingError, compose_path

TOOL_VERSION = "0.1.0"
REPORT_SCHEMA = "biperm-check/1"


class EmptySample(LookupError):
    """No well-typed morphism exists between the requested objects."""


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    max_size: int = 4
    max_add_len: int = 2
    max_mul_len: int = 2
    max_alphabet_size: int = 2
    samples: int = 1000
    exhaustive: bool = False
    exhaustive_cap: int = 20_000

    def to_json(self):
        return {
            "seed": self.seed,
            "max_size": self.max_size,
            "max_add_len": self.max_add_len,
            "max_mul_len": self.max_mul_len,
            "max_alphabet_size": self.max_alphabet_size,
            "samples": self.samples,
            "exhaustive": self.exhaustive,
            "exhaustive_cap": self.exhaustive_cap,
        }


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get("BIPERM_CHECK_SEED")
    return int(raw) if raw not in (None, "") else default


# -- verdicts ---------------------------------------------------------------


@dataclass
class Eq:
    """Both sides must agree; paths are composed in application order."""

    cat: BipermCat
    lhs: Any
    rhs: Any
    kind: str = "mor"  # "mor" or "obj"


@dataclass
class Holds:
    ok: bool
    detail: Any = None


@dataclass
class Failure:
    law: str
    case: int
    kind: str  # "law", "typing" or "error"
    inputs: list
    left: Any = None
    right: Any = None
    message: str = ""

    def to_json(self):
        return {
            "law": self.law,
            "case": self.case,
            "kind": self.kind,
            "inputs": self.inputs,
            "left": self.left,
            "right": self.right,
            "message": self.message,
        }


@dataclass
class AxiomReport:
    suite: str
    cases: int = 0
    laws: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def failed_laws(self) -> set:
        return {f.law for f in self.failures}

    def extend(self, other: "AxiomReport") -> "AxiomReport":
        self.cases += other.cases
        for law, n in other.laws.items():
            self.laws[law] = self.laws.get(law, 0) + n
        self.failures.extend(other.failures)
        self.skipped.extend(other.skipped)
        self.failures.sort(key=lambda f: (f.law, f.case))
        return self

    def to_json(self):
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "laws": dict(sorted(self.laws.items())),
            "failures": [f.to_json() for f in sorted(self.failures, key=lambda f: (f.law, f.case))],
            "skipped": sorted(self.skipped, key=lambda s: s["law"]),
        }


# -- diagrams ---------------------------------------------------------------


def _as_path(x):
    return list(x) if isinstance(x, (list, tuple)) else [x]


def diagram_eq(cat: BipermCat, path1: Sequence, path2: Sequence):
    """Compose both paths and compare them.

    Returns ``(equal, detail)`` where ``detail`` holds both serialized
    composites when they differ.  Raises :class:`TypingError` if a path does
    not compose or the two paths have different endpoints.
    """
    left = compose_path(cat, _as_path(path1))
    right = compose_path(cat, _as_path(path2))
    for end, a, b in (("domain", cat.dom(left), cat.dom(right)), ("codomain", cat.cod(left), cat.cod(right))):
        if not cat.obj_eq(a, b):
            raise TypingError(
                f"paths have different {end}s: {cat.obj_to_json(a)!r} vs {cat.obj_to_json(b)!r}"
            )
    if cat.mor_eq(left, right):
        return True, None
    return False, {"left": cat.mor_to_json(left), "right": cat.mor_to_json(right)}


# -- sampling ---------------------------------------------------------------


class Sampler:
    """Objects and morphisms of one category within the configured bounds."""

    def __init__(self, cat: BipermCat, config: SamplerConfig, bound: int | None = None):
        self.cat = cat
        self.config = config
        self.bound = config.max_size if bound is None else bound
        self._objects = None
        self._mors = None

    @property
    def objects(self) -> list:
        if self._objects is None:
            self._objects = list(self.cat.objects(self.bound))
        return self._objects

    @property
    def all_mors(self):
        if self._mors is None:
            self._mors = self.cat.all_mors(self.bound) or []
        return self._mors or None

    def obj(self, rng):
        return rng.choice(self.objects)

    def mor_between(self, rng, dom, cod):
        f = self.cat.random_mor(rng, dom, cod)
        if f is None:
            raise EmptySample(f"no morphism {self.cat.obj_to_json(dom)!r} -> {self.cat.obj_to_json(cod)!r}")
        return f

    def mor_from(self, rng, dom, tries: int = 16):
        for _ in range(tries):
            f = self.cat.random_mor(rng, dom, self.obj(rng))
            if f is not None:
                return f
        return self.cat.id(dom)

    def mor(self, rng):
        return self.mor_from(rng, self.obj(rng))


def enumerate_objects(cat: BipermCat, bound: int) -> list:
    return list(cat.objects(bound))


def sample_morphism(rng, cat: BipermCat, dom, cod):
    """Random morphism ``dom -> cod``; raises :class:`EmptySample` if there is none."""
    f = cat.random_mor(rng, dom, cod)
    if f is None:
        raise EmptySample(f"no morphism {cat.obj_to_json(dom)!r} -> {cat.obj_to_json(cod)!r}")
    return f


# -- laws -------------------------------------------------------------------

# signature items: "obj", "mor", or "chainN" (N composable morphisms in order)


@dataclass(frozen=True)
class Law:
    id: str
    sig: tuple
    fn: Callable
    sampled_only: bool = False  # skip the exhaustive tier even when it is small

    def arity(self) -> int:
        return sum(int(s[5:]) if s.startswith("chain") else 1 for s in self.sig)


def _draw(sampler: Sampler, rng, item):
    if item == "obj":
        return [sampler.obj(rng)]
    if item == "mor":
        return [sampler.mor(rng)]
    if item.startswith("chain"):
        n = int(item[5:])
        chain = [sampler.mor(rng)]
        while len(chain) < n:
            chain.append(sampler.mor_from(rng, sampler.cat.cod(chain[-1])))
        return chain
    raise ValueError(f"unknown signature item {item!r}")


def _exhaustive_cases(law: Law, sampler: Sampler):
    """All input tuples over a pool small enough for the configured cap.

    Object laws use every enumerated object when the full product fits under
    the cap (or when the exhaustive flag is set).  Otherwise they use the
    longest prefix of the enumeration whose product fits.  Morphism laws are
    exhaustive only when the instance lists its morphisms and the product
    fits under the cap.
    """
    cfg = sampler.config
    if law.sampled_only or not law.sig:
        return [] if law.sig else [()]
    if all(s == "obj" for s in law.sig):
        pool = sampler.objects
        n = len(law.sig)
        if not cfg.exhaustive and len(pool) ** n > cfg.exhaustive_cap:
            size = int(math.floor(cfg.exhaustive_cap ** (1.0 / n)))
            while (size + 1) ** n <= cfg.exhaustive_cap:
                size += 1
            pool = pool[:size]
        return itertools.product(pool, repeat=n)
    if all(s == "mor" for s in law.sig):
        mors = sampler.all_mors
        if mors and len(mors) ** len(law.sig) <= cfg.exhaustive_cap:
            return itertools.product(mors, repeat=len(law.sig))
    return []


def _serialize(cat: BipermCat, law: Law, inputs):
    out = []
    items = []
    for s in law.sig:
        items.extend(["mor"] * int(s[5:]) if s.startswith("chain") else [s])
    for item, x in zip(items, inputs):
        if item == "obj":
            out.append({"obj": cat.obj_to_json(x)})
        else:
            out.append({"mor": cat.mor_to_json(x)})
    return out


def evaluate(law: Law, inputs, ctx=None):
    """Evaluate one case.  Returns ``None`` on success or ``(kind, left, right, message)``."""
    try:
        verdict = law.fn(*inputs) if ctx is None else law.fn(ctx, *inputs)
        if isinstance(verdict, Holds):
            if verdict.ok:
                return None
            return ("law", verdict.detail, None, "property does not hold")
        cat = verdict.cat
        if verdict.kind == "obj":
            if cat.obj_eq(verdict.lhs, verdict.rhs):
                return None
            return ("law", cat.obj_to_json(verdict.lhs), cat.obj_to_json(verdict.rhs), "objects differ")
        ok, detail = diagram_eq(cat, verdict.lhs, verdict.rhs)
        if ok:
            return None
        return ("law", detail["left"], detail["right"], "composites differ")
    except TypingError as exc:
        return ("typing", None, None, str(exc))
    except EmptySample as exc:
        return ("error", None, None, f"empty sample: {exc}")
    except Exception as exc:  # a broken instance should show up in the report, not crash the run
        return ("error", None, None, f"{type(exc).__name__}: {exc}")


def run_laws(suite: str, laws: Sequence[Law], sampler: Sampler, max_failures_per_law: int = 5) -> AxiomReport:
    """Run every law over its exhaustive tier followed by ``config.samples`` seeded cases.

    Laws with no inputs run exactly once.
    """
    report = AxiomReport(suite)
    cfg = sampler.config
    cat = sampler.cat
    for law in laws:
        rng = random.Random(f"{cfg.seed}:{suite}:{law.id}")
        case = 0
        recorded = 0

        def record(inputs):
            nonlocal case, recorded
            result = evaluate(law, inputs)
            if result is not None and recorded < max_failures_per_law:
                kind, left, right, message = result
                report.failures.append(
                    Failure(law.id, case, kind, _serialize(cat, law, inputs), left, right, message)
                )
                recorded += 1
            case += 1

        if not law.sig:
            record(())
        else:
            for inputs in _exhaustive_cases(law, sampler):
                record(inputs)
            for _ in range(cfg.samples):
                inputs = []
                for item in law.sig:
                    inputs.extend(_draw(sampler, rng, item))
                record(inputs)
        report.laws[law.id] = report.laws.get(law.id, 0) + case
        report.cases += case
    report.failures.sort(key=lambda f: (f.law, f.case))
    return report


@dataclass
class Group:
    """Laws that share one sampler, reported under ``suite``."""

    suite: str
    laws: list
    sampler: Sampler


def run_groups(suite: str, groups: Sequence[Group]) -> AxiomReport:
    report = AxiomReport(suite)
    for g in groups:
        report.extend(run_laws(suite, g.laws, g.sampler))
    return report


def find_law(groups: Sequence[Group], law_id: str):
    """``(law, sampler)`` for the law with this id, or ``None``."""
    for g in groups:
        for law in g.laws:
            if law.id == law_id:
                return law, g.sampler
    return None


def deserialize_inputs(cat: BipermCat, inputs: list) -> list:
    out = []
    for item in inputs:
        if "obj" in item:
            out.append(cat.obj_from_json(item["obj"]))
        else:
            out.append(cat.mor_from_json(item["mor"]))
    return out


def skip(report: AxiomReport, law: str, reason: str) -> AxiomReport:
    report.skipped.append({"law": law, "reason": reason})
    return report
