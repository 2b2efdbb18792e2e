"""Concrete bipermutative categories.

``FskCategory`` is the skeleton of pointed finite sets: objects are the sets
``<n> = {0, 1, ..., n}`` (stored as the integer ``n``), sum is the wedge and
product is the smash, with pairs identified by lexicographic order.

``SemiringCategory`` is the discrete category on a finite commutative
semiring; every structure map is an identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from .core import BipermCat, TypingError
from .indexcalc import Perm, block_perm, distribute_perm, lex_index, swap_perm


@dataclass(frozen=True)
class FskMor:
    """Pointed function ``<dom> -> <cod>``; ``images[i - 1]`` is the image of ``i``.

    The basepoint is never stored; it always maps to 0.
    """

    dom: int
    cod: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.dom < 0 or self.cod < 0:
            raise ValueError("negative pointed set")
        if len(self.images) != self.dom:
            raise ValueError(f"{len(self.images)} images for <{self.dom}>")
        for v in self.images:
            if not 0 <= v <= self.cod:
                raise ValueError(f"image {v} outside <{self.cod}>")

    def __call__(self, i: int) -> int:
        return 0 if i == 0 else self.images[i - 1]

    def to_json(self):
        return {"dom": self.dom, "cod": self.cod, "images": list(self.images)}

    @classmethod
    def from_json(cls, data) -> "FskMor":
        return cls(data["dom"], data["cod"], data["images"])

    @classmethod
    def from_perm(cls, perm: Perm) -> "FskMor":
        return cls(perm.degree, perm.degree, perm.images)


def fsk_delta_l(m: int, n: int, p: int) -> FskMor:
    """Left distributivity ``<m> ^ (<n> v <p>) -> (<m> ^ <n>) v (<m> ^ <p>)``.

    The pair ``(i, x)`` goes to ``(i, x)`` in the first block when ``x <= n``
    and to ``(i, x - n)`` in the second block otherwise.
    """
    return FskMor.from_perm(distribute_perm(m, n, p))


class FskCategory(BipermCat):
    name = "fsk"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def mor_eq(self, f, g):
        return f == g

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def id(self, a):
        return FskMor(a, a, range(1, a + 1))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise TypingError(f"cannot compose <{f.dom}>-><{f.cod}> with <{g.dom}>-><{g.cod}>")
        return FskMor(f.dom, g.cod, [g(v) for v in f.images])

    def oplus(self, a, b):
        return a + b

    def oplus_mor(self, f, g):
        shifted = [v + f.cod if v else 0 for v in g.images]
        return FskMor(f.dom + g.dom, f.cod + g.cod, f.images + tuple(shifted))

    def otimes(self, a, b):
        return a * b

    def otimes_mor(self, f, g):
        m, n = f.cod, g.cod
        images = []
        for x in f.images:
            for y in g.images:
                images.append(lex_index(x, y, m, n) if x and y else 0)
        return FskMor(f.dom * g.dom, m * n, images)

    def beta_plus(self, a, b):
        return FskMor.from_perm(block_perm(a, b))

    def beta_times(self, a, b):
        return FskMor.from_perm(swap_perm(a, b))

    def delta_l(self, a, b, c):
        return fsk_delta_l(a, b, c)

    def delta_l_inv(self, a, b, c):
        return FskMor.from_perm(distribute_perm(a, b, c).inverse())

    def is_iso(self, f):
        return f.dom == f.cod and sorted(f.images) == list(range(1, f.cod + 1))

    def objects(self, bound):
        return list(range(bound + 1))

    def random_mor(self, rng, dom, cod):
        return FskMor(dom, cod, [rng.randint(0, cod) for _ in range(dom)])

    def homs(self, dom, cod):
        for images in itertools.product(range(cod + 1), repeat=dom):
            yield FskMor(dom, cod, images)

    def all_mors(self, bound):
        return [f for m in range(bound + 1) for n in range(bound + 1) for f in self.homs(m, n)]

    def obj_to_json(self, a):
        return a

    def obj_from_json(self, data):
        if not isinstance(data, int) or data < 0:
            raise ValueError(f"not a pointed finite set: {data!r}")
        return data

    def mor_to_json(self, f):
        return f.to_json()

    def mor_from_json(self, data):
        return FskMor.from_json(data)


def fsk_category() -> FskCategory:
    return FskCategory()


class SemiringLawError(ValueError):
    """A semiring table violates a commutative-semiring law."""

    def __init__(self, law: str, witnesses: tuple):
        self.law = law
        self.witnesses = witnesses
        super().__init__(f"{law} fails at {witnesses}")


@dataclass(frozen=True)
class SemiringSpec:
    """Finite commutative semiring given by operation tables.

    ``add[x][y]`` and ``mul[x][y]`` are indexed by position in ``elements``.
    """

    name: str
    elements: tuple
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: object
    one: object

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))

    def index(self, x) -> int:
        return self.elements.index(x)

    def plus(self, x, y):
        return self.elements[self.add[self.index(x)][self.index(y)]]

    def times(self, x, y):
        return self.elements[self.mul[self.index(x)][self.index(y)]]

    def validate(self) -> None:
        """Raise :class:`SemiringLawError` on the first violated law."""
        n = len(self.elements)
        if len(set(self.elements)) != n or n == 0:
            raise SemiringLawError("distinct non-empty carrier", self.elements)
        for table, label in ((self.add, "add"), (self.mul, "mul")):
            if len(table) != n or any(len(row) != n for row in table):
                raise SemiringLawError(f"{label} table is {n}x{n}", ())
            if any(not 0 <= v < n for row in table for v in row):
                raise SemiringLawError(f"{label} table closed", ())
        for u in (self.zero, self.one):
            if u not in self.elements:
                raise SemiringLawError("units belong to the carrier", (u,))
        P, T, Z, O = self.plus, self.times, self.zero, self.one
        E = self.elements
        for x in E:
            if P(x, Z) != x:
                raise SemiringLawError("x + 0 = x", (x,))
            if T(x, O) != x:
                raise SemiringLawError("x * 1 = x", (x,))
            if T(x, Z) != Z:
                raise SemiringLawError("x * 0 = 0", (x,))
        for x, y in itertools.product(E, repeat=2):
            if P(x, y) != P(y, x):
                raise SemiringLawError("x + y = y + x", (x, y))
            if T(x, y) != T(y, x):
                raise SemiringLawError("x * y = y * x", (x, y))
        for x, y, z in itertools.product(E, repeat=3):
            if P(P(x, y), z) != P(x, P(y, z)):
                raise SemiringLawError("(x + y) + z = x + (y + z)", (x, y, z))
            if T(T(x, y), z) != T(x, T(y, z)):
                raise SemiringLawError("(x * y) * z = x * (y * z)", (x, y, z))
            if T(x, P(y, z)) != P(T(x, y), T(x, z)):
                raise SemiringLawError("x * (y + z) = x * y + x * z", (x, y, z))


def boolean_semiring() -> SemiringSpec:
    return SemiringSpec("bool", (0, 1), [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)


def modular_semiring(n: int) -> SemiringSpec:
    """``Z/n`` as a semiring."""
    els = tuple(range(n))
    return SemiringSpec(
        f"mod{n}",
        els,
        [[(x + y) % n for y in els] for x in els],
        [[(x * y) % n for y in els] for x in els],
        0,
        1 % n,
    )


def saturating_semiring(n: int) -> SemiringSpec:
    """``{0..n-1}`` with addition and multiplication truncated at ``n - 1``."""
    top = n - 1
    els = tuple(range(n))
    return SemiringSpec(
        f"sat{n}",
        els,
        [[min(x + y, top) for y in els] for x in els],
        [[min(x * y, top) for y in els] for x in els],
        0,
        min(1, top),
    )


def load_semiring_table(path) -> SemiringSpec:
    """Read a semiring from a plain grid file.

    Format (``#`` starts a comment, blank lines ignored)::

        elements: 0 1 2
        zero: 0
        one: 1
        add:
        0 1 2
        1 2 2
        2 2 2
        mul:
        0 0 0
        0 1 2
        0 2 2

    Table entries are element labels; row ``x``, column ``y`` holds ``x op y``
    with rows and columns in the order of ``elements``.
    """
    path = Path(path)
    lines = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    fields: dict[str, object] = {}
    tables: dict[str, list[list[str]]] = {}
    current = None
    for line in lines:
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("elements", "zero", "one", "add", "mul", "name"):
            current = None
            if key in ("add", "mul"):
                current = tables.setdefault(key, [])
                if rest.strip():
                    raise ValueError(f"{path}: table rows for {key!r} go on the following lines")
            elif key == "elements":
                fields[key] = rest.split()
            else:
                fields[key] = rest.strip()
            continue
        if current is None:
            raise ValueError(f"{path}: unexpected line {line!r}")
        current.append(line.split())
    for key in ("elements", "zero", "one"):
        if key not in fields:
            raise ValueError(f"{path}: missing {key!r}")
    for key in ("add", "mul"):
        if key not in tables:
            raise ValueError(f"{path}: missing {key!r} table")
    labels = list(fields["elements"])
    pos = {lab: t for t, lab in enumerate(labels)}

    def grid(rows):
        try:
            return [[pos[v] for v in row] for row in rows]
        except KeyError as exc:
            raise ValueError(f"{path}: unknown element {exc.args[0]!r} in a table") from None

    return SemiringSpec(
        str(fields.get("name", path.stem)),
        labels,
        grid(tables["add"]),
        grid(tables["mul"]),
        fields["zero"],
        fields["one"],
    )


@dataclass(frozen=True)
class DiscreteMor:
    """The identity morphism of an element; discrete categories have no others."""

    obj: object


class SemiringCategory(BipermCat):
    def __init__(self, spec: SemiringSpec):
        spec.validate()
        self.spec = spec
        self.name = f"semiring:{spec.name}"

    @property
    def zero(self):
        return self.spec.zero

    @property
    def one(self):
        return self.spec.one

    def mor_eq(self, f, g):
        return f == g

    def dom(self, f):
        return f.obj

    def cod(self, f):
        return f.obj

    def id(self, a):
        return DiscreteMor(a)

    def compose(self, g, f):
        if f.obj != g.obj:
            raise TypingError(f"cannot compose 1_{f.obj!r} with 1_{g.obj!r}")
        return f

    def oplus(self, a, b):
        return self.spec.plus(a, b)

    def oplus_mor(self, f, g):
        return DiscreteMor(self.spec.plus(f.obj, g.obj))

    def otimes(self, a, b):
        return self.spec.times(a, b)

    def otimes_mor(self, f, g):
        return DiscreteMor(self.spec.times(f.obj, g.obj))

    def beta_plus(self, a, b):
        return DiscreteMor(self.spec.plus(a, b))

    def beta_times(self, a, b):
        return DiscreteMor(self.spec.times(a, b))

    def delta_l(self, a, b, c):
        return DiscreteMor(self.spec.times(a, self.spec.plus(b, c)))

    def delta_l_inv(self, a, b, c):
        return self.delta_l(a, b, c)

    def is_iso(self, f):
        return True

    def objects(self, bound):
        return list(self.spec.elements)

    def random_mor(self, rng, dom, cod):
        return DiscreteMor(dom) if dom == cod else None

    def all_mors(self, bound):
        return [DiscreteMor(x) for x in self.spec.elements]

    def obj_to_json(self, a):
        return a

    def obj_from_json(self, data):
        if data not in self.spec.elements:
            raise ValueError(f"{data!r} is not an element of {self.spec.name}")
        return data

    def mor_to_json(self, f):
        return {"id": f.obj}

    def mor_from_json(self, data):
        return DiscreteMor(self.obj_from_json(data["id"]))


def semiring_category(spec: SemiringSpec) -> SemiringCategory:
    return SemiringCategory(spec)


def instance_from_name(name: str) -> BipermCat:
    """``fsk``, ``bool-semiring``, ``mod<n>``, ``sat<n>`` or ``table:PATH``."""
    if name == "fsk":
        return fsk_category()
    if name == "bool-semiring":
        return semiring_category(boolean_semiring())
    if name.startswith("table:"):
        return semiring_category(load_semiring_table(name[len("table:") :]))
    for prefix, make in (("mod", modular_semiring), ("sat", saturating_semiring)):
        if name.startswith(prefix) and name[len(prefix) :].isdigit():
            return semiring_category(make(int(name[len(prefix) :])))
    raise ValueError(f"unknown instance {name!r}")

