"""Ext groups, Hochschild cohomology and cohomology of finite T0 spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import DomainError, InconsistencyError, NotATopologyError
from .exactla import QQ, FieldSpec
from .poset import Poset
from .resolution import Resolution, compute_cycles


def _trim(dims, keep: int = 1) -> tuple[int, ...]:
    dims = list(dims)
    while len(dims) > keep and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


@dataclass(frozen=True)
class ExtTable:
    """``dims[i]`` is dim Ext^i(S_base, S_target) for i up to the resolution length."""

    base: Hashable
    target: Hashable
    dims: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def trimmed(self) -> tuple[int, ...]:
        return _trim(self.dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))


def ext_dims(p: Poset, x: Hashable, b: Hashable, field: FieldSpec = QQ,
             resolution: Resolution | None = None) -> ExtTable:
    """Ext between simples: the number of resolution cycles of level i at ``b``."""
    p._i(b)  # unknown target raises
    r = resolution if resolution is not None else compute_cycles(p, x, field)
    return ExtTable(x, b, r.betti().column(b))


def ext_dims_all(p: Poset, x: Hashable, field: FieldSpec = QQ) -> dict:
    r = compute_cycles(p, x, field)
    bt = r.betti()
    return {b: ExtTable(x, b, bt.column(b)) for b in p.elements}


@dataclass(frozen=True)
class HHTable:
    """Hochschild cohomology dimensions HH^0, HH^1, ... with trailing zeros trimmed.

    Every HH^i with ``i > max_degree`` vanishes.  ``star_ext`` keeps the raw
    Ext^i(S_x*, S_y*) column of the extended poset for diagnostics.
    """

    dims: tuple[int, ...]
    max_degree: int
    star_ext: tuple[int, ...] = ()

    def __getitem__(self, i: int) -> int:
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(n))


def hochschild_dims(p: Poset, field: FieldSpec = QQ) -> HHTable:
    """HH^i of the incidence algebra of ``p``.

    Adjoin a bottom x* and top y*, resolve the simple at x*, and count the
    level ``i + 2`` cycles at y*; HH^0 gets one extra, and is checked against
    the number of connected components.
    """
    if not len(p):
        raise DomainError("hochschild_dims needs a nonempty poset")
    star = p.star_extension()
    bot, top = star.elements[0], star.elements[-1]
    r = compute_cycles(star, bot, field)
    col = r.betti().column(top)
    hh = [col[2] + 1 if len(col) > 2 else 1]
    hh += [col[i + 2] for i in range(1, len(col) - 2)]
    components = len(p.connected_components())
    if hh[0] != components:
        raise InconsistencyError(f"HH^0 = {hh[0]} but the poset has {components} components")
    return HHTable(_trim(hh), p.height, col)


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space given by its full family of open sets."""

    points: tuple
    opens: frozenset

    def __init__(self, points: Iterable[Hashable], opens: Iterable[Iterable[Hashable]]):
        pts = tuple(points)
        fam = frozenset(frozenset(u) for u in opens)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "opens", fam)
        self._validate()

    @classmethod
    def generated_by(cls, points: Iterable[Hashable], subbasis: Iterable[Iterable[Hashable]]) -> FiniteSpace:
        """The coarsest topology containing every set in ``subbasis``."""
        pts = tuple(points)
        fam = {frozenset(), frozenset(pts)} | {frozenset(u) for u in subbasis}
        while True:
            cur = list(fam)
            grown = {a | b for a in cur for b in cur} | {a & b for a in cur for b in cur}
            if grown <= fam:
                break
            fam |= grown
        return cls(pts, fam)

    def _validate(self):
        full = frozenset(self.points)
        if len(full) != len(self.points):
            raise NotATopologyError("duplicate points")
        for u in self.opens:
            if not u <= full:
                raise NotATopologyError(f"open set {sorted(map(str, u))} has unknown points")
        if frozenset() not in self.opens or full not in self.opens:
            raise NotATopologyError("open sets must include the empty set and the whole space")
        ops = list(self.opens)
        for a in ops:
            for b in ops:
                if a | b not in self.opens or a & b not in self.opens:
                    raise NotATopologyError("open sets are not closed under union and intersection")
        seen = {}
        for x in self.points:
            u = self.minimal_open(x)
            if u in seen:
                raise NotATopologyError(f"not T0: {seen[u]!r} and {x!r} have the same neighbourhoods")
            seen[u] = x

    def minimal_open(self, x: Hashable) -> frozenset:
        u = frozenset(self.points)
        for v in self.opens:
            if x in v:
                u &= v
        return u


def specialization_poset(s: FiniteSpace) -> Poset:
    """``a <= b`` iff ``a`` lies in every open set containing ``b``."""
    rels = [(a, b) for b in s.points for a in s.minimal_open(b) if a != b]
    return Poset(s.points, rels)


def finite_space_cohomology(s: FiniteSpace, field: FieldSpec = QQ) -> tuple[int, ...]:
    return hochschild_dims(specialization_poset(s), field).dims
