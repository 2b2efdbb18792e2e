"""Combinatorics of the finite index sets ``{1 < 2 < ... < r}``.

Everything here is 1-based.  An :class:`IndexFn` is a function between such
sets and a :class:`Perm` is a bijection of one.  Permutations use the
"send" convention: ``images[i - 1]`` is the position that the element at
position ``i`` is moved to.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IndexFn:
    """A function ``dom -> cod`` between finite ordinal index sets."""

    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.cod < 0:
            raise ValueError(f"negative codomain arity {self.cod}")
        for v in self.values:
            if not 1 <= v <= self.cod:
                raise ValueError(f"index {v} outside 1..{self.cod}")

    @property
    def dom(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.dom:
            raise IndexError(f"index {i} outside 1..{self.dom}")
        return self.values[i - 1]

    def then(self, other: "IndexFn") -> "IndexFn":
        """Diagrammatic composite: first ``self``, then ``other``."""
        if self.cod != other.dom:
            raise ValueError(f"cannot compose {self.dom}->{self.cod} with {other.dom}->{other.cod}")
        return IndexFn(other.cod, [other.values[v - 1] for v in self.values])

    def is_bijective(self) -> bool:
        return self.dom == self.cod and sorted(self.values) == list(range(1, self.cod + 1))

    def to_json(self):
        return {"dom": self.dom, "cod": self.cod, "values": list(self.values)}

    @classmethod
    def from_json(cls, data) -> "IndexFn":
        fn = cls(data["cod"], data["values"])
        if fn.dom != data.get("dom", fn.dom):
            raise ValueError("IndexFn: 'dom' disagrees with the length of 'values'")
        return fn

    @classmethod
    def identity(cls, r: int) -> "IndexFn":
        return cls(r, range(1, r + 1))

    @classmethod
    def terminal(cls, r: int) -> "IndexFn":
        """The unique function ``r -> 1``."""
        return cls(1, [1] * r)


@dataclass(frozen=True)
class Perm:
    """A permutation of ``{1..degree}`` in the send convention."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def then(self, other: "Perm") -> "Perm":
        """Apply ``self`` first, then ``other``."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Perm([other.images[v - 1] for v in self.images])

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Perm(inv)

    def apply(self, seq: Sequence) -> list:
        """Rearrange ``seq``: the entry at position ``i`` lands at ``self(i)``."""
        if len(seq) != self.degree:
            raise ValueError(f"sequence of length {len(seq)} for a permutation of degree {self.degree}")
        out = [None] * self.degree
        for i, v in enumerate(self.images):
            out[v - 1] = seq[i]
        return out

    def as_index_fn(self) -> IndexFn:
        return IndexFn(self.degree, self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))


def fibers(phi: IndexFn) -> list[list[int]]:
    """Preimages ``phi^-1(k)`` for ``k = 1..cod``, each in ascending order."""
    out: list[list[int]] = [[] for _ in range(phi.cod)]
    for i, v in enumerate(phi.values, 1):
        out[v - 1].append(i)
    return out


def lex_index(i: int, j: int, m: int, n: int) -> int:
    """Position of the pair ``(i, j)`` of ``{1..m} x {1..n}`` in lexicographic order."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise IndexError(f"pair ({i}, {j}) outside {m} x {n}")
    return j + (i - 1) * n


def lex_pair(t: int, m: int, n: int) -> tuple[int, int]:
    """Inverse of :func:`lex_index`."""
    if not 1 <= t <= m * n:
        raise IndexError(f"index {t} outside 1..{m * n}")
    q, r = divmod(t - 1, n)
    return q + 1, r + 1


def product_fn(phi: IndexFn, psi: IndexFn) -> IndexFn:
    """``phi x psi`` with both sides identified with ordinals lexicographically."""
    s, w = phi.cod, psi.cod
    return IndexFn(
        s * w,
        [lex_index(a, b, s, w) for a in phi.values for b in psi.values],
    )


def coproduct_fn(phi: IndexFn, psi: IndexFn) -> IndexFn:
    """``phi + psi``: ``phi`` on the first block, ``psi`` shifted by ``phi.cod`` on the second."""
    return IndexFn(phi.cod + psi.cod, list(phi.values) + [v + phi.cod for v in psi.values])


def stable_sort_perm(keys: Sequence) -> Perm:
    """The permutation moving each position to its rank in a stable sort by ``keys``."""
    order = sorted(range(len(keys)), key=lambda t: keys[t])
    images = [0] * len(keys)
    for new, old in enumerate(order, 1):
        images[old] = new
    return Perm(images)


def grouping_perm(phi: IndexFn, psi: IndexFn, p: int) -> Perm:
    """Regroup ``(psi phi)^-1(p)`` (ascending) by the value of ``phi``.

    The result acts on positions within the ascending fiber; blocks appear
    in increasing ``phi``-value, each block ascending.
    """
    if phi.cod != psi.dom:
        raise ValueError("phi and psi are not composable")
    if not 1 <= p <= psi.cod:
        raise IndexError(f"index {p} outside 1..{psi.cod}")
    fiber = [i for i in range(1, phi.dom + 1) if psi(phi(i)) == p]
    return stable_sort_perm([phi(i) for i in fiber])


def block_perm(r: int, s: int) -> Perm:
    """Interchange of the blocks ``{1..r}`` and ``{r+1..r+s}``."""
    return Perm([s + i for i in range(1, r + 1)] + list(range(1, s + 1)))


def swap_perm(r: int, s: int) -> Perm:
    """Lex position of ``(i, k)`` in ``r x s`` to that of ``(k, i)`` in ``s x r``."""
    return Perm([lex_index(k, i, s, r) for i in range(1, r + 1) for k in range(1, s + 1)])


def distribute_perm(r: int, s: int, u: int) -> Perm:
    """``r x (s + u) -> (r x s) + (r x u)``, matching pairs with their counterparts."""
    images = []
    for i in range(1, r + 1):
        for x in range(1, s + u + 1):
            if x <= s:
                images.append(lex_index(i, x, r, s))
            else:
                images.append(r * s + lex_index(i, x - s, r, u))
    return Perm(images)


def canonical_perms(kind: str, r: int, s: int) -> Perm:
    """``kind`` is ``"block"`` or ``"swap"``."""
    if r < 0 or s < 0:
        raise ValueError("negative arity")
    if kind == "block":
        return block_perm(r, s)
    if kind == "swap":
        return swap_perm(r, s)
    raise ValueError(f"unknown permutation kind {kind!r}")
