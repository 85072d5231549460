"""Exact linear algebra over Q or a prime field GF(p).

Scalars are plain Python numbers: ``int`` residues in ``[0, p)`` for a prime
field, ``int`` or :class:`fractions.Fraction` for the rationals (integral
values are kept as ``int``).  Nothing here ever rounds.

The heavy lifting is done on lists of rows by :func:`_rref_rows`; the frozen
:class:`DenseMatrix` and :class:`SubspaceBasis` types wrap that for callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, PreconditionError


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: Q when ``characteristic == 0``, else GF(characteristic)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"bad characteristic {c!r}")
        if c and not _is_prime(c):
            raise ValueError(f"GF({c}) is not a field: {c} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        if p == 0:
            raise ValueError("prime field needs p > 0")
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse the command-line syntax ``q`` or ``gf:p``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field {text!r}; expected 'q' or 'gf:p'")

    @property
    def kind(self) -> str:
        return "PrimeField" if self.characteristic else "Rationals"

    @property
    def p(self) -> int | None:
        return self.characteristic or None

    def __str__(self):
        return f"gf:{self.characteristic}" if self.characteristic else "q"

    def coerce(self, value) -> int | Fraction:
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(f"{value} has no image in GF({p})")
                return value.numerator * pow(value.denominator, -1, p) % p
            return int(value) % p
        q = Fraction(value)
        return q.numerator if q.denominator == 1 else q

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(a, -1, p)
        if a == 1 or a == -1:
            return a
        return Fraction(1, a) if isinstance(a, int) else 1 / a

    def neg(self, a):
        return (-a) % self.characteristic if self.characteristic else -a


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


# --------------------------------------------------------------------------
# row-list kernels


def _rref_rows(rows: list[list], ncols: int, field: FieldSpec) -> tuple[list[list], list[int]]:
    """Reduce ``rows`` in place to reduced row-echelon form.

    Returns the nonzero rows and their pivot columns.  Only the nonzero
    positions of each pivot row are touched during elimination, which keeps
    the {0, +-1} matrices coming out of the resolution cheap.
    """
    m = len(rows)
    p = field.characteristic
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        k = r
        while k < m and not rows[k][c]:
            k += 1
        if k == m:
            continue
        if k != r:
            rows[k], rows[r] = rows[r], rows[k]
        pr = rows[r]
        a = pr[c]
        if a != 1:
            inv = field.inv(a)
            if p:
                pr = [x * inv % p for x in pr]
            else:
                pr = [_norm(x * inv) for x in pr]
            rows[r] = pr
        nz = [j for j in range(c, ncols) if pr[j]]
        for k in range(m):
            if k == r:
                continue
            row = rows[k]
            f = row[c]
            if not f:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * pr[j]) % p
            else:
                for j in nz:
                    row[j] = _norm(row[j] - f * pr[j])
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _kernel_rows(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> list[list]:
    """Canonical (rref) basis of the null space of the matrix with these rows."""
    ech, pivots = _rref_rows([list(r) for r in rows], ncols, field)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    p = field.characteristic
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(ech, pivots):
            if row[f]:
                v[pc] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    # Free-column vectors are already independent; rref makes them canonical.
    ech, _ = _rref_rows(basis, ncols, field)
    return ech


def _reduce(vec: list, echelon: Sequence[Sequence], pivots: Sequence[int], field: FieldSpec) -> list:
    """Reduce ``vec`` modulo the row space of an rref basis."""
    p = field.characteristic
    v = list(vec)
    for row, c in zip(echelon, pivots):
        f = v[c]
        if not f:
            continue
        if p:
            v = [(a - f * b) % p for a, b in zip(v, row)]
        else:
            v = [_norm(a - f * b) for a, b in zip(v, row)]
    return v


def _rank_rows(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> int:
    if not rows or not ncols:
        return 0
    return len(_rref_rows([list(r) for r in rows], ncols, field)[1])


# --------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class DenseMatrix:
    """An immutable ``rows x cols`` matrix with entries in one field."""

    rows: int
    cols: int
    entries: tuple[tuple, ...]
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], field: FieldSpec = QQ, cols: int | None = None) -> DenseMatrix:
        data = tuple(tuple(field.coerce(a) for a in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionMismatch("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int, field: FieldSpec = QQ) -> DenseMatrix:
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatch("column length differs from row count")
        data = tuple(tuple(field.coerce(col[i]) for col in columns) for i in range(nrows))
        return cls(nrows, len(columns), data, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> DenseMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> DenseMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                           tuple(() for _ in range(self.cols)), self.field)

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        if other.field != self.field:
            raise FieldMismatch(f"cannot multiply over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} do not compose")
        p = self.field.characteristic
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if a]
            line = []
            for col in cols:
                s = sum(a * col[k] for k, a in nz)
                line.append(s % p if p else _norm(Fraction(s)))
            out.append(tuple(line))
        return DenseMatrix(self.rows, other.cols, tuple(out), self.field)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length differs from column count")
        p = self.field.characteristic
        out = []
        for row in self.entries:
            s = sum(a * b for a, b in zip(row, vec) if a)
            out.append(s % p if p else _norm(Fraction(s)))
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def rank(self) -> int:
        return _rank_rows(self.entries, self.cols, self.field)

    def with_entry(self, i: int, j: int, value) -> DenseMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = self.field.coerce(value)
        return DenseMatrix(self.rows, self.cols, tuple(map(tuple, rows)), self.field)


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of ``field ** ambient_dim`` stored by its rref basis.

    Equal subspaces have identical ``vectors`` and ``pivots``, so ``==`` on
    two instances is subspace equality.
    """

    ambient_dim: int
    vectors: tuple[tuple, ...]
    pivots: tuple[int, ...]
    field: FieldSpec = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, field: FieldSpec = QQ) -> SubspaceBasis:
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append([field.coerce(a) for a in v])
        ech, piv = _rref_rows(rows, ambient_dim, field)
        return cls(ambient_dim, tuple(map(tuple, ech)), tuple(piv), field)

    @classmethod
    def _from_rref(cls, ech, piv, ambient_dim, field) -> SubspaceBasis:
        return cls(ambient_dim, tuple(map(tuple, ech)), tuple(piv), field)

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec = QQ) -> SubspaceBasis:
        return cls(ambient_dim, (), (), field)

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec = QQ) -> SubspaceBasis:
        return cls.coordinate(range(ambient_dim), ambient_dim, field)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_dim: int, field: FieldSpec = QQ) -> SubspaceBasis:
        """The span of the standard basis vectors ``e_j`` for ``j`` in ``indices``."""
        idx = sorted(set(indices))
        vecs = tuple(tuple(int(k == j) for k in range(ambient_dim)) for j in idx)
        return cls(ambient_dim, vecs, tuple(idx), field)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, vec) -> bool:
        return membership(vec, self)

    def _check_compatible(self, other: SubspaceBasis):
        if self.field != other.field:
            raise FieldMismatch(f"subspaces over {self.field} and {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")


# --------------------------------------------------------------------------
# operations


def rref(m: DenseMatrix) -> tuple[DenseMatrix, list[int], int]:
    """Reduced row-echelon form of ``m``, keeping zero rows at the bottom."""
    ech, piv = _rref_rows([list(r) for r in m.entries], m.cols, m.field)
    rows = [tuple(r) for r in ech] + [(0,) * m.cols] * (m.rows - len(ech))
    return DenseMatrix(m.rows, m.cols, tuple(rows), m.field), piv, len(piv)


def rank(m: DenseMatrix) -> int:
    return m.rank()


def kernel_basis(m: DenseMatrix) -> SubspaceBasis:
    ech = _kernel_rows(m.entries, m.cols, m.field)
    piv = [next(j for j, a in enumerate(r) if a) for r in ech]
    return SubspaceBasis._from_rref(ech, piv, m.cols, m.field)


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    a._check_compatible(b)
    if not b.vectors:
        return a
    if not a.vectors:
        return b
    ech, piv = _rref_rows([list(v) for v in a.vectors + b.vectors], a.ambient_dim, a.field)
    return SubspaceBasis._from_rref(ech, piv, a.ambient_dim, a.field)


def subspace_intersection(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Zassenhaus: reduce ``[a | a]`` over ``[b | 0]``; rows with a zero left
    half carry a basis of the intersection in their right half."""
    a._check_compatible(b)
    n = a.ambient_dim
    if not a.vectors or not b.vectors:
        return SubspaceBasis.zero(n, a.field)
    rows = [list(v) + list(v) for v in a.vectors] + [list(v) + [0] * n for v in b.vectors]
    ech, piv = _rref_rows(rows, 2 * n, a.field)
    right = [r[n:] for r, c in zip(ech, piv) if c >= n]
    return SubspaceBasis.span(right, n, a.field)


def membership(vec: Sequence, s: SubspaceBasis) -> bool:
    if len(vec) != s.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(vec)} in ambient dimension {s.ambient_dim}")
    v = [s.field.coerce(a) for a in vec]
    return not any(_reduce(v, s.vectors, s.pivots, s.field))


def complement_basis(u: SubspaceBasis, v: SubspaceBasis, strategy: str = "first") -> list[tuple]:
    """Vectors extending a basis of ``u`` to one of ``v``, taken from v's rref basis.

    ``strategy="first"`` scans v's basis in pivot order, ``"last"`` in reverse;
    each vector not yet in the running span is kept.
    """
    u._check_compatible(v)
    for w in u.vectors:
        if not membership(w, v):
            raise PreconditionError("complement_basis: u is not contained in v")
    if u.dim == v.dim:
        return []
    return _complement_rows(u.vectors, v.vectors, v.ambient_dim, v.field, strategy)


def _complement_rows(u_rows, v_rows, n: int, field: FieldSpec, strategy: str = "first") -> list[tuple]:
    """``u_rows`` may be any spanning set of u (dependent rows are fine)."""
    if strategy not in ("first", "last"):
        raise ValueError(f"unknown complement strategy {strategy!r}")
    # running semi-echelon basis, pivot column -> normalized row
    ech: list[list] = []
    piv: list[int] = []
    p = field.characteristic

    def add(w) -> bool:
        r = _reduce(w, ech, piv, field)
        lead = next((j for j, a in enumerate(r) if a), None)
        if lead is None:
            return False
        inv = field.inv(r[lead])
        r = [x * inv % p for x in r] if p else [_norm(x * inv) for x in r]
        # keep ech reduced at the new pivot so _reduce stays a single pass
        for k, row in enumerate(ech):
            f = row[lead]
            if f:
                ech[k] = [(a - f * b) % p for a, b in zip(row, r)] if p else \
                         [_norm(a - f * b) for a, b in zip(row, r)]
        ech.append(r)
        piv.append(lead)
        return True

    for w in u_rows:
        add(w)
    order = v_rows if strategy == "first" else list(reversed(v_rows))
    out = [tuple(w) for w in order if add(w)]
    if strategy == "last":
        out.reverse()
    return out
