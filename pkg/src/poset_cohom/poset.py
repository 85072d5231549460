"""Finite posets and their Hasse diagrams.

Order data is cached as Python-int bitmasks over the input positions of the
elements: bit ``j`` of ``_up[i]`` is set iff ``elements[i] <= elements[j]``.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import NotAPosetError, UnknownElementError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset built from any generating set of order relations.

    Elements are opaque hashable ids.  The cover relation, the full order and
    a topological index (a linear extension, ties broken by input order) are
    computed once at construction; instances are treated as immutable.
    """

    def __init__(self, elements: Iterable[Hashable] = (), relations: Iterable[Sequence] = ()):
        elements = tuple(elements)
        idx: dict = {}
        for i, e in enumerate(elements):
            if e in idx:
                raise NotAPosetError(f"duplicate element {e!r}")
            idx[e] = i
        n = len(elements)
        succ: list[set[int]] = [set() for _ in range(n)]
        for pair in relations:
            a, b = pair
            for e in (a, b):
                if e not in idx:
                    raise UnknownElementError(f"unknown element {e!r}")
            if a != b:
                succ[idx[a]].add(idx[b])

        indeg = [0] * n
        for s in succ:
            for j in s:
                indeg[j] += 1
        heap = [i for i in range(n) if not indeg[i]]
        heapq.heapify(heap)
        topo: list[int] = []
        while heap:
            i = heapq.heappop(heap)
            topo.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if not indeg[j]:
                    heapq.heappush(heap, j)
        if len(topo) != n:
            raise NotAPosetError("not a poset: the relations contain a cycle")

        up = [0] * n
        for i in reversed(topo):
            m = 1 << i
            for j in succ[i]:
                m |= up[j]
            up[i] = m
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i

        self._elements = elements
        self._idx = idx
        self._up = up
        self._down = down
        self._topo = topo
        self._pos = {i: k for k, i in enumerate(topo)}
        self._succ: list[list[int]] = []
        self._pred: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            above = up[i] & ~(1 << i)
            covers = [j for j in _bits(above) if not (above & down[j] & ~(1 << j))]
            covers.sort(key=self._pos.__getitem__)
            self._succ.append(covers)
        for i in topo:
            for j in self._succ[i]:
                self._pred[j].append(i)
        self._height: int | None = None

    @classmethod
    def from_relations(cls, elements: Iterable[Hashable], relations: Iterable[Sequence]) -> Poset:
        return cls(elements, relations)

    # -- basic access -------------------------------------------------------

    @property
    def elements(self) -> tuple:
        """Elements in input order."""
        return self._elements

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, x) -> bool:
        try:
            return x in self._idx
        except TypeError:
            return False

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self._elements) == set(other._elements) and self.covers == other.covers

    def __hash__(self):
        return hash((frozenset(self._elements), self.covers))

    def _i(self, x) -> int:
        try:
            return self._idx[x]
        except (KeyError, TypeError):
            raise UnknownElementError(f"unknown element {x!r}") from None

    def _ids(self, mask: int) -> list:
        return [self._elements[j] for j in sorted(_bits(mask), key=self._pos.__getitem__)]

    @property
    def covers(self) -> frozenset:
        return frozenset((self._elements[i], self._elements[j])
                         for i in range(len(self)) for j in self._succ[i])

    @property
    def topological_order(self) -> tuple:
        return tuple(self._elements[i] for i in self._topo)

    def index(self, x) -> int:
        """Topological index of ``x``: ``a < b`` implies ``index(a) < index(b)``."""
        return self._pos[self._i(x)]

    def leq(self, a, b) -> bool:
        return bool(self._up[self._i(a)] >> self._i(b) & 1)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def successors(self, x) -> list:
        """Immediate successors x+ (upper covers), in topological order."""
        return [self._elements[j] for j in self._succ[self._i(x)]]

    def predecessors(self, x) -> list:
        """Immediate predecessors x- (lower covers), in topological order."""
        return [self._elements[j] for j in self._pred[self._i(x)]]

    def up(self, x, strict: bool = False) -> list:
        i = self._i(x)
        return self._ids(self._up[i] & ~(1 << i) if strict else self._up[i])

    def down(self, x, strict: bool = False) -> list:
        i = self._i(x)
        return self._ids(self._down[i] & ~(1 << i) if strict else self._down[i])

    def minimal_elements(self) -> list:
        return [self._elements[i] for i in self._topo if not self._pred[i]]

    def maximal_elements(self) -> list:
        return [self._elements[i] for i in self._topo if not self._succ[i]]

    def relations(self) -> list[tuple]:
        """All strict pairs ``(a, b)`` with ``a < b``."""
        out = []
        for i in self._topo:
            for j in sorted(_bits(self._up[i] & ~(1 << i)), key=self._pos.__getitem__):
                out.append((self._elements[i], self._elements[j]))
        return out

    @property
    def height(self) -> int:
        """Number of covers in a longest chain (-1 for the empty poset)."""
        if self._height is None:
            depth = [0] * len(self)
            for i in self._topo:
                for j in self._succ[i]:
                    depth[j] = max(depth[j], depth[i] + 1)
            self._height = max(depth, default=-1)
        return self._height

    # -- derived posets -----------------------------------------------------

    def induced(self, subset: Iterable[Hashable]) -> Poset:
        keep = [self._elements[i] for i in sorted(self._i(e) for e in set(subset))]
        mask = 0
        for e in keep:
            mask |= 1 << self._idx[e]
        rels = [(self._elements[i], self._elements[j])
                for i in _bits(mask) for j in _bits(self._up[i] & mask & ~(1 << i))]
        return Poset(keep, rels)

    def open_interval(self, x, b) -> Poset:
        """The induced subposet on ``{c : x < c < b}``."""
        i, j = self._i(x), self._i(b)
        mask = self._up[i] & self._down[j] & ~(1 << i) & ~(1 << j)
        return self.induced(self._elements[k] for k in _bits(mask))

    def opposite(self) -> Poset:
        return Poset(self._elements, [(b, a) for (a, b) in self.covers])

    def star_extension(self) -> Poset:
        """Adjoin a new global minimum and maximum.

        They are the first and last entries of the result's ``elements``
        (named ``"x*"`` and ``"y*"``, with extra stars on a name clash).
        """
        bot, top = "x*", "y*"
        while bot in self:
            bot += "*"
        while top in self or top == bot:
            top += "*"
        rels = list(self.covers)
        rels += [(bot, m) for m in self.minimal_elements()]
        rels += [(m, top) for m in self.maximal_elements()]
        if not len(self):
            rels.append((bot, top))
        return Poset((bot,) + self._elements + (top,), rels)

    def connected_components(self) -> list[list]:
        """Weakly connected components of the Hasse diagram, each in topological order."""
        seen = 0
        comps = []
        for i in self._topo:
            if seen >> i & 1:
                continue
            comp = 1 << i
            stack = [i]
            while stack:
                k = stack.pop()
                for j in self._succ[k] + self._pred[k]:
                    if not comp >> j & 1:
                        comp |= 1 << j
                        stack.append(j)
            seen |= comp
            comps.append(self._ids(comp))
        return comps

    def mobius(self, x, b) -> int:
        i, j = self._i(x), self._i(b)
        if not self._up[i] >> j & 1:
            raise ValueError(f"mobius({x!r}, {b!r}) needs x <= b")
        interval = sorted(_bits(self._up[i] & self._down[j]), key=self._pos.__getitem__)
        mu: dict[int, int] = {}
        for c in interval:
            if c == i:
                mu[c] = 1
            else:
                mu[c] = -sum(v for d, v in mu.items() if self._down[c] >> d & 1)
        return mu[j]


def from_relations(elements: Iterable[Hashable], relations: Iterable[Sequence]) -> Poset:
    return Poset(elements, relations)


def chain(n: int) -> Poset:
    return Poset(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return Poset(range(1, n + 1))
