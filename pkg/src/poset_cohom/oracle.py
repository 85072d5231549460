"""Brute-force simplicial cohomology of order complexes.

Deliberately naive: every chain of the poset is enumerated and the
coboundary ranks are computed directly.  Used only to cross-check the
resolution-based numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .exactla import QQ, DenseMatrix, FieldSpec, _rank_rows
from .poset import Poset


@dataclass(frozen=True)
class SimplicialComplex:
    """``simplices[n]`` lists the n-simplices as vertex tuples in a fixed vertex order."""

    simplices: tuple[tuple[tuple, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * k for n, k in enumerate(self.counts()))

    def abstract(self) -> tuple[frozenset, ...]:
        """Simplices as vertex sets, for comparisons that ignore vertex order."""
        return tuple(frozenset(frozenset(s) for s in level) for level in self.simplices)

    def _coboundary_rows(self, n: int, field: FieldSpec) -> list[list]:
        """Rows of the coboundary from n-cochains to (n+1)-cochains.

        ``n = -1`` gives the augmentation (one column, all ones on vertices).
        """
        p = field.characteristic
        if n == -1:
            return [[1] for _ in (self.simplices[0] if self.simplices else ())]
        if n + 1 >= len(self.simplices):
            return []
        col = {s: j for j, s in enumerate(self.simplices[n])}
        rows = []
        for s in self.simplices[n + 1]:
            row = [0] * len(self.simplices[n])
            for k in range(len(s)):
                sign = 1 if k % 2 == 0 else -1
                row[col[s[:k] + s[k + 1:]]] = sign % p if p else sign
            rows.append(row)
        return rows

    def coboundary(self, n: int, field: FieldSpec = QQ) -> DenseMatrix:
        rows = self._coboundary_rows(n, field)
        ncols = 1 if n == -1 else (len(self.simplices[n]) if 0 <= n < len(self.simplices) else 0)
        return DenseMatrix(len(rows), ncols, tuple(map(tuple, rows)), field)

    def coboundary_rank(self, n: int, field: FieldSpec) -> int:
        ncols = 1 if n == -1 else (len(self.simplices[n]) if 0 <= n < len(self.simplices) else 0)
        return _rank_rows(self._coboundary_rows(n, field), ncols, field)


def order_complex(p: Poset) -> SimplicialComplex:
    """All chains of ``p``, each listed bottom to top; chains of one length
    are in lexicographic order of topological index."""
    levels: list[list[tuple]] = []
    topo = p.topological_order

    def extend(chain: tuple):
        n = len(chain) - 1
        while len(levels) <= n:
            levels.append([])
        levels[n].append(chain)
        for y in p.up(chain[-1], strict=True):
            extend(chain + (y,))

    for x in topo:
        extend((x,))
    key = {e: k for k, e in enumerate(topo)}
    return SimplicialComplex(tuple(tuple(sorted(lv, key=lambda s: [key[e] for e in s])) for lv in levels))


def simplicial_cohomology_dims(c: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """dim H^n for n = 0 .. dimension (empty list for the empty complex)."""
    ranks = [c.coboundary_rank(n, field) for n in range(c.dimension + 1)]
    out = []
    for n, size in enumerate(c.counts()):
        out.append(size - ranks[n] - (ranks[n - 1] if n else 0))
    return out


def reduced_cohomology_dims(c: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """Reduced cohomology; entry 0 is degree -1 (1 for the empty complex, else 0)."""
    ranks = [c.coboundary_rank(n, field) for n in range(-1, c.dimension + 1)]
    sizes = (1,) + c.counts()
    return [size - ranks[k] - (ranks[k - 1] if k else 0) for k, size in enumerate(sizes)]


def interval_betti_oracle(p: Poset, x: Hashable, b: Hashable, field: FieldSpec = QQ) -> list[int]:
    """Ext dims between the simples at ``x < b`` read off the open interval:
    degree i is the reduced cohomology of its order complex in degree i - 2."""
    if not p.lt(x, b):
        raise ValueError(f"interval_betti_oracle needs {x!r} < {b!r}")
    red = reduced_cohomology_dims(order_complex(p.open_interval(x, b)), field)
    return [0] + red
