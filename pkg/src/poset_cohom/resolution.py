"""Minimal projective resolutions of simple modules over incidence algebras.

For a base point ``x`` the resolution of the simple module at ``x`` is
indexed by *cycles*: level 0 is ``{x}``, level 1 has one cycle ``(x, y)`` per
upper cover ``y`` of ``x``, and the level ``i + 1`` cycles sitting at a vertex
``z`` are a complement basis of

    W_z = sum of V_z' over the lower covers z' of z     inside
    V_z = kernel vectors of the level-i boundary supported on cycles below z.

The boundary of a new cycle ``(w, z)`` is ``w`` itself.  The projective in
degree ``i`` is the direct sum of ``P_z`` over the level-``i`` cycles at
``z``; :func:`expand_complex` writes that out as plain vector spaces so the
exactness and minimality claims can be checked by rank computations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Hashable

from .exactla import (
    QQ,
    DenseMatrix,
    FieldSpec,
    SubspaceBasis,
    _complement_rows,
    _kernel_rows,
    _rank_rows,
    kernel_basis,
    subspace_intersection,
)
from .poset import Poset, _bits


@dataclass(frozen=True)
class Cycle:
    """A cycle ``(w, z)``; ``coeffs`` are the coordinates of ``w`` on the
    previous level's cycles.  The level-0 cycle ``x`` has empty ``coeffs``."""

    level: int
    vertex: Hashable
    coeffs: tuple


@dataclass(frozen=True)
class CycleLevel:
    level: int
    cycles: tuple[Cycle, ...]
    boundary: DenseMatrix

    def __len__(self):
        return len(self.cycles)

    @property
    def vertices(self) -> list:
        return [c.vertex for c in self.cycles]

    def by_vertex(self) -> dict:
        """The groups ``B^i_z`` as ``{z: [cycle indices]}``."""
        out: dict = {}
        for k, c in enumerate(self.cycles):
            out.setdefault(c.vertex, []).append(k)
        return out


@dataclass(frozen=True)
class BettiTable:
    """Cycle counts ``|B^i_b|`` per ``(level, vertex)``.

    Levels 0 and 1 hold exactly the augmented values (1 at ``x``, 1 on each
    upper cover of ``x``) because that is what the first two cycle levels are.
    """

    base: Hashable
    length: int
    counts: dict = dc_field(default_factory=dict)

    def __getitem__(self, key) -> int:
        return self.counts.get(key, 0)

    def column(self, b) -> tuple[int, ...]:
        return tuple(self[i, b] for i in range(self.length + 1))

    def level_sizes(self) -> tuple[int, ...]:
        sizes = Counter()
        for (i, _), n in self.counts.items():
            sizes[i] += n
        return tuple(sizes[i] for i in range(self.length + 1))


@dataclass(frozen=True)
class Resolution:
    poset: Poset
    base: Hashable
    field: FieldSpec
    levels: tuple[CycleLevel, ...]
    terminated: bool

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(lv) for lv in self.levels)

    def betti(self) -> BettiTable:
        return betti(self)


# --------------------------------------------------------------------------
# computing the cycles


def _restricted_kernel(cols: list[tuple], D: list[int], nrows: int, ncols: int, field: FieldSpec) -> list[list]:
    """rref basis of ker(boundary restricted to columns D), embedded in all columns."""
    rows = [[cols[k][r] for k in D] for r in range(nrows)]
    ker = _kernel_rows(rows, len(D), field)
    out = []
    for v in ker:
        full = [0] * ncols
        for a, k in zip(v, D):
            full[k] = a
        out.append(full)
    return out


def compute_cycles(
    poset: Poset,
    x: Hashable,
    field: FieldSpec = QQ,
    max_level: int | None = None,
    *,
    strategy: str = "first",
    method: str = "restricted",
) -> Resolution:
    """Compute all cycle levels for the simple module at ``x``.

    ``strategy`` picks the complement ("first": earliest pivots of the rref
    basis of V_z, "last": latest).  ``method`` picks how V_z is obtained:
    "restricted" takes the kernel of the boundary restricted to the columns
    of cycles below ``z``; "intersection" intersects the full kernel with the
    coordinate subspace of those columns.  Both give the same V_z.
    """
    if method not in ("restricted", "intersection"):
        raise ValueError(f"unknown method {method!r}")
    xi = poset._i(x)
    if max_level is None:
        max_level = poset.height + 2
    above_x = [z for z in poset._topo if z != xi and poset._up[xi] >> z & 1]

    lv0 = CycleLevel(0, (Cycle(0, x, ()),), DenseMatrix.zeros(0, 1, field))
    levels = [lv0]
    cyc1 = tuple(Cycle(1, y, (1,)) for y in poset.successors(x))
    if not cyc1:
        return Resolution(poset, x, field, tuple(levels), True)
    levels.append(CycleLevel(1, cyc1, DenseMatrix(1, len(cyc1), ((1,) * len(cyc1),), field)))

    terminated = False
    i = 1
    while True:
        if i >= max_level:
            break
        cycles = levels[i].cycles
        nrows = len(levels[i - 1].cycles)
        ncols = len(cycles)
        cols = [c.coeffs for c in cycles]
        vert = [poset._idx[c.vertex] for c in cycles]
        full_kernel = None
        V: dict[int, list] = {}
        cache: dict[int, list] = {}
        new: list[Cycle] = []
        for z in above_x:
            below = poset._down[z] & ~(1 << z)
            Dmask = 0
            D = []
            for k, v in enumerate(vert):
                if below >> v & 1:
                    D.append(k)
                    Dmask |= 1 << k
            if not D:
                continue
            if Dmask in cache:
                Vz = cache[Dmask]
            elif method == "restricted":
                Vz = cache[Dmask] = _restricted_kernel(cols, D, nrows, ncols, field)
            else:
                if full_kernel is None:
                    full_kernel = kernel_basis(levels[i].boundary)
                inter = subspace_intersection(full_kernel, SubspaceBasis.coordinate(D, ncols, field))
                Vz = cache[Dmask] = [list(r) for r in inter.vectors]
            V[z] = Vz
            if not Vz:
                continue
            W = [w for zp in poset._pred[z] for w in V.get(zp, ())]
            zid = poset._elements[z]
            for b in _complement_rows(W, Vz, ncols, field, strategy):
                new.append(Cycle(i + 1, zid, tuple(b)))
        if not new:
            terminated = True
            break
        boundary = DenseMatrix(ncols, len(new), tuple(zip(*(c.coeffs for c in new))), field)
        levels.append(CycleLevel(i + 1, tuple(new), boundary))
        i += 1
    return Resolution(poset, x, field, tuple(levels), terminated)


def betti(r: Resolution) -> BettiTable:
    counts: Counter = Counter()
    for lv in r.levels:
        for c in lv.cycles:
            counts[lv.level, c.vertex] += 1
    return BettiTable(r.base, r.length, dict(counts))


def kernel_at(r: Resolution, i: int, z: Hashable) -> SubspaceBasis:
    """V_z at level ``i``: kernel vectors of the level-i boundary supported on
    cycles whose vertex is strictly below ``z``."""
    lv = r.levels[i]
    cols = [c.coeffs for c in lv.cycles]
    D = [k for k, c in enumerate(lv.cycles) if r.poset.lt(c.vertex, z)]
    n = len(cols)
    if not D:
        return SubspaceBasis.zero(n, r.field)
    rows = _restricted_kernel(cols, D, len(r.levels[i - 1].cycles), n, r.field)
    return SubspaceBasis.span(rows, n, r.field)


def boundary_rank(r: Resolution, i: int) -> int:
    """Rank of the level-i boundary map; zero past the last level."""
    if i > r.length:
        if not r.terminated:
            raise IndexError(f"level {i} was not computed (max_level reached)")
        return 0
    if i < 0:
        raise IndexError(f"no level {i}")
    m = r.levels[i].boundary
    return _rank_rows(m.entries, m.cols, r.field)


def nonexactness_gap(r: Resolution, i: int) -> int:
    """dim ker(d_i) - rank(d_{i+1}) for the cycle complex itself.

    The cycle complex need not be exact; this measures by how much it fails
    at level ``i``.
    """
    if i < 0 or i > r.length:
        raise IndexError(f"level {i} out of range 0..{r.length}")
    ker = len(r.levels[i].cycles) - boundary_rank(r, i)
    return ker - boundary_rank(r, i + 1)


def euler_sums(r: Resolution) -> dict:
    """For each b, the alternating count of cycles at vertices <= b."""
    p = r.poset
    out = {}
    for b in p.elements:
        s = 0
        for lv in r.levels:
            n = sum(1 for c in lv.cycles if p.leq(c.vertex, b))
            s += -n if lv.level % 2 else n
        out[b] = s
    return out


def satisfies_euler_identity(r: Resolution) -> bool:
    return all(v == (1 if b == r.base else 0) for b, v in euler_sums(r).items())


def support_is_strict(r: Resolution) -> bool:
    """Every cycle's boundary is supported on cycles at strictly lower vertices."""
    p = r.poset
    for i in range(1, r.length + 1):
        prev = r.levels[i - 1].cycles
        for c in r.levels[i].cycles:
            for a, pc in zip(c.coeffs, prev):
                if a and not p.lt(pc.vertex, c.vertex):
                    return False
    return True


def boundaries_compose_to_zero(r: Resolution) -> bool:
    for i in range(2, r.length + 1):
        if not (r.levels[i - 1].boundary @ r.levels[i].boundary).is_zero():
            return False
    return True


# --------------------------------------------------------------------------
# the expanded complex of projectives


@dataclass(frozen=True)
class ExpandedComplex:
    """The resolution as vector spaces.

    ``bases[i]`` lists triples ``(k, z, v)``: the path from ``z`` to ``v``
    in the summand ``P_z`` belonging to cycle ``k`` (at vertex ``z``) of
    level ``i``.  ``differentials[i - 1]`` is the map from degree ``i`` to
    degree ``i - 1``; ``augmentation`` maps degree 0 onto the simple module.
    """

    base: Hashable
    field: FieldSpec
    bases: tuple[tuple[tuple, ...], ...]
    differentials: tuple[DenseMatrix, ...]
    augmentation: DenseMatrix
    complete: bool

    def dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def expand_complex(r: Resolution) -> ExpandedComplex:
    p = r.poset
    bases = []
    index = []
    for lv in r.levels:
        basis = tuple((k, c.vertex, v) for k, c in enumerate(lv.cycles) for v in p.up(c.vertex))
        bases.append(basis)
        index.append({(k, v): n for n, (k, _, v) in enumerate(basis)})

    diffs = []
    for i in range(1, len(r.levels)):
        rows = [[0] * len(bases[i]) for _ in bases[i - 1]]
        cycles = r.levels[i].cycles
        for col, (k, _, v) in enumerate(bases[i]):
            for kp, a in enumerate(cycles[k].coeffs):
                if a:
                    rows[index[i - 1][kp, v]][col] = a
        diffs.append(DenseMatrix(len(bases[i - 1]), len(bases[i]), tuple(map(tuple, rows)), r.field))

    aug = tuple(int(v == r.base) for (_, _, v) in bases[0])
    return ExpandedComplex(
        r.base, r.field, tuple(bases), tuple(diffs),
        DenseMatrix(1, len(bases[0]), (aug,), r.field), r.terminated,
    )


@dataclass(frozen=True)
class VerificationReport:
    chain_ok: bool
    exact_ok: bool
    minimal_ok: bool
    augmentation_ok: bool

    def __bool__(self):
        return self.chain_ok and self.exact_ok and self.minimal_ok and self.augmentation_ok

    def as_dict(self) -> dict:
        return {
            "chain_ok": self.chain_ok,
            "exact_ok": self.exact_ok,
            "minimal_ok": self.minimal_ok,
            "augmentation_ok": self.augmentation_ok,
        }


def verify_resolution(e: ExpandedComplex) -> VerificationReport:
    """Check that the expanded complex is a minimal projective resolution.

    Failures are reported as ``False`` flags, never raised.
    """
    D = e.differentials
    dims = e.dims()
    ranks = [m.rank() for m in D]

    chain_ok = all((D[k] @ D[k + 1]).is_zero() for k in range(len(D) - 1))
    aug_kills = not D or (e.augmentation @ D[0]).is_zero()
    chain_ok = chain_ok and aug_kills

    rank_d1 = ranks[0] if D else 0
    augmentation_ok = aug_kills and e.augmentation.rank() == 1 and rank_d1 == dims[0] - 1

    # exactness at degree i >= 1: rank d_{i+1} == dim_i - rank d_i
    top = len(dims) - 1
    exact_ok = True
    for i in range(1, top + 1):
        if i == top and not e.complete:
            break
        nxt = ranks[i] if i < len(ranks) else 0
        if nxt != dims[i] - ranks[i - 1]:
            exact_ok = False
            break

    minimal_ok = True
    for k, m in enumerate(D):
        target = e.bases[k]
        for row, (_, z, v) in zip(m.entries, target):
            if v == z and any(row):
                minimal_ok = False
                break
        if not minimal_ok:
            break

    return VerificationReport(chain_ok, exact_ok, minimal_ok, augmentation_ok)
