"""Permutations, finitely generated groups by full enumeration, and
recognition of the handful of small groups that show up here.

Products act left to right: ``(a * b)[p] == b[a[p]]``, i.e. ``x^(ab) = (x^a)^b``.
"""

from __future__ import annotations

import json
import threading
from collections import Counter, deque
from dataclasses import dataclass
from math import gcd
from operator import itemgetter
from typing import Callable, Iterable, Sequence

from .cayley import SmallGraph
from .gf2 import GF2Matrix

DEFAULT_GROUP_CAP = 8192
SMALL_AUT_CAP = 16


class GroupTooLarge(RuntimeError):
    pass


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = cls.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def from_matrix(cls, m: GF2Matrix) -> Permutation:
        return cls._trusted(m.table)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p]

    def __getitem__(self, p: int) -> int:
        return self.images[p]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def order(self) -> int:
        out = 1
        for cyc in self.cycles():
            out = out * len(cyc) // gcd(out, len(cyc))
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            out.append(tuple(cyc))
        return out

    def cycle_string(self, label: Callable[[int], str] = str) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(label(p) for p in c) + ")" for c in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a then b."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    if a.degree <= 1:
        return a
    return Permutation._trusted(itemgetter(*a.images)(b.images))


def inverse(a: Permutation) -> Permutation:
    out = [0] * a.degree
    for p, q in enumerate(a.images):
        out[q] = p
    return Permutation._trusted(tuple(out))


class PermGroup:
    """Group given by generators, with elements enumerated on first use.

    Enumeration is a breadth-first product closure that stops with
    ``GroupTooLarge`` once more than ``cap`` elements are found.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 cap: int = DEFAULT_GROUP_CAP, elements: Sequence[Permutation] | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree needed for a group without generators")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators have different degrees")
        self.degree = degree
        self.generators = gens
        self.cap = cap
        self._elements: list[Permutation] | None = sorted(set(elements)) if elements is not None else None
        self._members: frozenset[Permutation] | None = None
        self._lock = threading.Lock()

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements = _enumerate(self.generators, self.degree, self.cap)
        return self._elements

    @property
    def members(self) -> frozenset[Permutation]:
        if self._members is None:
            self._members = frozenset(self.elements)
        return self._members

    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(self.elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def center(self) -> list[Permutation]:
        gens = self.generators
        return [z for z in self.elements if all(z * g == g * z for g in gens)]


def _enumerate(gens: Sequence[Permutation], degree: int, cap: int) -> list[Permutation]:
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    gens = [g for g in dict.fromkeys(gens) if not g.is_identity()]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupTooLarge(f"group exceeds the element cap of {cap}")
                queue.append(y)
    return sorted(seen)


def closure(gens: Sequence[Permutation], cap: int = DEFAULT_GROUP_CAP, degree: int | None = None) -> PermGroup:
    if not gens and degree is None:
        raise ValueError("closure needs at least one generator")
    group = PermGroup(gens, degree=degree, cap=cap)
    group.elements  # noqa: B018 - force enumeration so cap errors surface here
    return group


def generating_subset(elements: Sequence[Permutation]) -> list[Permutation]:
    """Greedy generating set: keep each element not yet in the span of the kept ones."""
    kept: list[Permutation] = []
    if not elements:
        return kept
    span = {Permutation.identity(elements[0].degree)}
    for x in elements:
        if x in span:
            continue
        kept.append(x)
        span = set(_enumerate(kept, x.degree, max(len(elements), 1)))
    return kept


def orbit(group: PermGroup, p: int) -> list[int]:
    if not 0 <= p < group.degree:
        raise ValueError(f"point {p} outside 0..{group.degree - 1}")
    seen = {p}
    queue = deque([p])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def orbits(group: PermGroup) -> list[list[int]]:
    done = [False] * group.degree
    out = []
    for p in range(group.degree):
        if not done[p]:
            orb = orbit(group, p)
            for q in orb:
                done[q] = True
            out.append(orb)
    return out


@dataclass(frozen=True)
class InducedAction:
    image: PermGroup
    kernel_order: int
    group_order: int

    @property
    def faithful(self) -> bool:
        return self.kernel_order == 1


def action_on_sets(g: Permutation, sets: Sequence[frozenset[int]], index: dict[frozenset[int], int]) -> Permutation:
    images = []
    for s in sets:
        t = frozenset(g.images[p] for p in s)
        if t not in index:
            raise ValueError(f"{g.cycle_string()} maps {sorted(s)} outside the given family")
        images.append(index[t])
    return Permutation._trusted(tuple(images))


def induced_action(group: PermGroup, blocks: Sequence[Iterable[int]]) -> InducedAction:
    """Action of ``group`` on a family of point sets, by set image.

    The sets may overlap; every generator must map each set onto a member
    of the family.
    """
    sets = [frozenset(b) for b in blocks]
    index = {s: i for i, s in enumerate(sets)}
    if len(index) != len(sets):
        raise ValueError("repeated set in the family")
    gens = [action_on_sets(g, sets, index) for g in group.generators]
    image = PermGroup(gens, degree=len(sets), cap=group.cap)
    order = group.order()
    return InducedAction(image, order // image.order(), order)


def permutation_is_linear(p: Permutation, n: int | None = None) -> GF2Matrix | None:
    """Matrix M with p(x) = M x for every x, or None when p is not linear."""
    if n is None:
        n = p.degree.bit_length() - 1
    if p.degree != 1 << n:
        raise ValueError(f"degree {p.degree} is not 2^{n}")
    img = p.images
    if img[0] != 0:
        raise ValueError("permutation does not fix the zero vector")
    for x in range(1, p.degree):
        low = x & -x
        if img[x] != img[x ^ low] ^ img[low]:
            return None
    return GF2Matrix(n, tuple(img[1 << (n - i)] for i in range(1, n + 1)))


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian: bool
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int

    def involutions(self) -> int:
        return dict(self.order_histogram).get(2, 0)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "abelian": self.abelian,
            "element_orders": {str(k): v for k, v in self.order_histogram},
            "center_order": self.center_order,
        }


@dataclass(frozen=True)
class GroupType:
    tag: str
    params: tuple = ()
    fingerprint: Fingerprint | None = None

    def __str__(self) -> str:
        if self.tag == "Trivial":
            return "Trivial"
        if self.tag == "DirectProduct":
            return "DirectProduct[" + ", ".join(str(p) for p in self.params) + "]"
        if self.tag == "Unrecognized":
            return f"Unrecognized(order={self.fingerprint.order if self.fingerprint else '?'})"
        return f"{self.tag}({', '.join(str(p) for p in self.params)})"

    def to_json(self) -> str:
        return json.dumps({"type": str(self), "fingerprint": self.fingerprint.to_dict() if self.fingerprint else None},
                          sort_keys=True)


TRIVIAL = GroupType("Trivial")
C2 = GroupType("Cyclic", (2,))
D8 = GroupType("Dihedral", (8,))
S4 = GroupType("Symmetric", (4,))
S3 = GroupType("Symmetric", (3,))
D8xC2 = GroupType("DirectProduct", (D8, C2))

RECOGNIZE_CAP = 512
# element-order histograms of the catalog groups, computed from explicit
# permutation models in tests/test_perm.py
_S4_HISTOGRAM = ((1, 1), (2, 9), (3, 8), (4, 6))


def fingerprint(group: PermGroup) -> Fingerprint:
    elems = group.elements
    hist = Counter(g.order() for g in elems)
    return Fingerprint(len(elems), group.is_abelian(), tuple(sorted(hist.items())), len(group.center()))


def recognize(group: PermGroup) -> GroupType:
    if group.order() > RECOGNIZE_CAP:
        raise GroupTooLarge(f"recognition is limited to groups of order <= {RECOGNIZE_CAP}")
    fp = fingerprint(group)
    order, hist = fp.order, dict(fp.order_histogram)
    if order == 1:
        return GroupType("Trivial", fingerprint=fp)
    if fp.abelian:
        if order in hist:
            return GroupType("Cyclic", (order,), fp)
        if set(hist) <= {1, 2}:
            return GroupType("ElementaryAbelian", (2, order.bit_length() - 1), fp)
    else:
        if order == 6:
            return GroupType("Symmetric", (3,), fp)
        if order == 8 and fp.involutions() == 5:
            return GroupType("Dihedral", (8,), fp)
        if order == 16 and fp.center_order == 4 and fp.involutions() == 11:
            return GroupType("DirectProduct", (D8, C2), fp)
        if order == 24 and fp.order_histogram == _S4_HISTOGRAM:
            return GroupType("Symmetric", (4,), fp)
    return GroupType("Unrecognized", (), fp)


def same_type(a: GroupType, b: GroupType) -> bool:
    if a.tag == "Unrecognized" or b.tag == "Unrecognized":
        return a.tag == b.tag and a.fingerprint == b.fingerprint
    return str(a) == str(b)


def graph_automorphisms(g: SmallGraph) -> PermGroup:
    """All automorphisms of a graph on at most 16 vertices.

    Backtracking over vertex images, pruned by degree and by adjacency to
    already-placed vertices.
    """
    k = len(g)
    if k > SMALL_AUT_CAP:
        raise ValueError(f"brute-force automorphism search is capped at {SMALL_AUT_CAP} vertices")
    if k == 0:
        return PermGroup([], degree=0, elements=[])
    deg = [g.degree(i) for i in range(k)]
    found: list[Permutation] = []
    img = [-1] * k
    used = [False] * k

    def extend(i: int) -> None:
        if i == k:
            found.append(Permutation._trusted(tuple(img)))
            return
        for c in range(k):
            if used[c] or deg[c] != deg[i]:
                continue
            if any(g.adjacent(i, j) != g.adjacent(c, img[j]) for j in range(i)):
                continue
            img[i], used[c] = c, True
            extend(i + 1)
            used[c] = False
        img[i] = -1

    extend(0)
    return PermGroup(generating_subset(found), degree=k, elements=found)
