import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from poset_cohom.errors import DimensionMismatch, FieldMismatch, PreconditionError
from poset_cohom.exactla import (
    GF,
    QQ,
    DenseMatrix,
    FieldSpec,
    SubspaceBasis,
    complement_basis,
    kernel_basis,
    membership,
    rank,
    rref,
    subspace_intersection,
    subspace_sum,
)

FIELDS = [QQ, GF(2), GF(3), GF(5)]

# the level-2 boundary of the 10-point example: three cycles, all mapping to r = (1,2) - (1,3)
D2 = [[1, 1, 1], [-1, -1, -1]]
U = (1, -1, 0)
V = (0, 1, -1)


def E(n, *idx):
    return [tuple(int(k == j) for k in range(n)) for j in idx]


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


# --------------------------------------------------------------------------
# fields


def test_field_parse_and_validation():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("gf:7") == GF(7)
    assert GF(7).kind == "PrimeField" and QQ.kind == "Rationals"
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        FieldSpec.parse("gf:x")
    with pytest.raises(ValueError):
        FieldSpec.parse("r")


def test_coerce():
    assert GF(3).coerce(-1) == 2
    assert GF(5).coerce(Fraction(1, 2)) == 3
    assert QQ.coerce(Fraction(4, 2)) == 2 and type(QQ.coerce(Fraction(4, 2))) is int
    assert QQ.coerce("3/6") == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        GF(3).coerce(Fraction(1, 3))


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50), st.integers(1, 50))
def test_prime_field_agrees_with_rationals_mod_p(a, b, c, d):
    p = 7
    if c % p == 0 or d % p == 0:
        return
    F = GF(p)
    x, y = Fraction(a, c), Fraction(b, d)
    assert F.coerce(x + y) == (F.coerce(x) + F.coerce(y)) % p
    assert F.coerce(x * y) == F.coerce(x) * F.coerce(y) % p


# --------------------------------------------------------------------------
# rref


def test_rref_duplicate_rows():
    ech, piv, r = rref(DenseMatrix.from_rows([[1, 1], [1, 1]]))
    assert r == 1 and piv == [0]
    assert ech.entries == ((1, 1), (0, 0))


def test_rref_identity():
    I3 = DenseMatrix.identity(3)
    ech, piv, r = rref(I3)
    assert ech == I3 and r == 3 and piv == [0, 1, 2]


def test_rref_mod_3():
    # 2^-1 = 2 mod 3, and 4 * 2 = 8 = 2 mod 3
    ech, piv, r = rref(DenseMatrix.from_rows([[2, 4]], GF(3)))
    assert ech.entries == ((1, 2),) and r == 1


def test_rref_rationals_stay_exact():
    ech, _, _ = rref(DenseMatrix.from_rows([[3, 1], [1, 3]]))
    assert ech.entries == ((1, 0), (0, 1))
    ech, _, _ = rref(DenseMatrix.from_rows([[3, 1]]))
    assert ech.entries == ((1, Fraction(1, 3)),)


@given(matrices())
def test_rref_is_reduced_echelon(rows):
    for F in FIELDS:
        ech, piv, r = rref(DenseMatrix.from_rows(rows, F))
        assert r == len(piv) and piv == sorted(piv)
        for k, c in enumerate(piv):
            assert ech[k, c] == 1
            assert all(ech[j, c] == 0 for j in range(ech.rows) if j != k)
            assert all(ech[k, j] == 0 for j in range(c))
        assert all(not any(ech.entries[k]) for k in range(r, ech.rows))


@given(matrices())
def test_prime_rref_is_rational_rref_mod_p_when_ranks_agree(rows):
    Q_ech, Q_piv, Q_rank = rref(DenseMatrix.from_rows(rows, QQ))
    for p in (2, 3, 5):
        F = GF(p)
        if any(isinstance(a, Fraction) and a.denominator % p == 0 for r in Q_ech.entries for a in r):
            continue
        ech, piv, r = rref(DenseMatrix.from_rows(rows, F))
        if r != Q_rank:
            continue
        assert piv == Q_piv
        assert ech.entries == tuple(tuple(F.coerce(a) for a in row) for row in Q_ech.entries)


# --------------------------------------------------------------------------
# kernels


def test_kernel_one_relation():
    K = kernel_basis(DenseMatrix.from_rows([[1, 1]]))
    assert K == SubspaceBasis.span([(1, -1)], 2)


def test_kernel_of_worked_example_boundary():
    for F in FIELDS:
        K = kernel_basis(DenseMatrix.from_rows(D2, F))
        assert K.dim == 2
        assert K == SubspaceBasis.span([U, V], 3, F)


def test_kernel_of_zero_map():
    K = kernel_basis(DenseMatrix.zeros(4, 4))
    assert K == SubspaceBasis.full(4)


@given(matrices())
def test_kernel_vectors_are_killed(rows):
    for F in FIELDS:
        m = DenseMatrix.from_rows(rows, F)
        K = kernel_basis(m)
        assert K.dim + rank(m) == m.cols
        for v in K.vectors:
            assert not any(m.apply(v))


# --------------------------------------------------------------------------
# subspaces


def test_sum_examples():
    e1, e2 = E(2, 0, 1)
    assert subspace_sum(SubspaceBasis.span([e1], 2), SubspaceBasis.span([e2], 2)) == SubspaceBasis.full(2)
    Vs = SubspaceBasis.span([(1, 2, 3), (0, 1, 1)], 3)
    assert subspace_sum(Vs, Vs) == Vs
    K = kernel_basis(DenseMatrix.from_rows(D2))
    assert subspace_sum(SubspaceBasis.span([U], 3), SubspaceBasis.span([V], 3)) == K


def test_intersection_examples():
    e1, e2, e3 = E(3, 0, 1, 2)
    a = SubspaceBasis.span([e1, e2], 3)
    b = SubspaceBasis.span([e2, e3], 3)
    assert subspace_intersection(a, b) == SubspaceBasis.span([e2], 3)
    assert subspace_intersection(a, SubspaceBasis.zero(3)).dim == 0
    # cycles below 7 are (r,4), (r,5): the first two coordinates
    K = kernel_basis(DenseMatrix.from_rows(D2))
    assert subspace_intersection(K, SubspaceBasis.coordinate([0, 1], 3)) == SubspaceBasis.span([U], 3)


def test_complement_examples():
    e1 = E(1, 0)
    assert complement_basis(SubspaceBasis.zero(1), SubspaceBasis.span(e1, 1)) == [(1,)]
    Vs = SubspaceBasis.span([(1, 1, 0)], 3)
    assert complement_basis(Vs, Vs) == []
    u = SubspaceBasis.span([U], 3)
    v = SubspaceBasis.span([U, V], 3)
    (c,) = complement_basis(u, v)
    assert subspace_sum(u, SubspaceBasis.span([c], 3)) == v
    # the worked example chooses u + v, which is also a valid complement
    assert subspace_sum(u, SubspaceBasis.span([(1, 0, -1)], 3)) == v


def test_complement_requires_containment():
    with pytest.raises(PreconditionError):
        complement_basis(SubspaceBasis.span([(1, 0)], 2), SubspaceBasis.span([(0, 1)], 2))


def test_membership_examples():
    e1, e2 = E(2, 0, 1)
    s = SubspaceBasis.span([e1], 2)
    assert membership(e1, s) and not membership(e2, s)
    K = kernel_basis(DenseMatrix.from_rows(D2))
    assert membership((1, 0, -1), K)
    with pytest.raises(DimensionMismatch):
        membership((1, 0, 0), s)


def test_mismatches_rejected():
    with pytest.raises(FieldMismatch):
        DenseMatrix.identity(2, QQ) @ DenseMatrix.identity(2, GF(2))
    with pytest.raises(DimensionMismatch):
        subspace_sum(SubspaceBasis.zero(2), SubspaceBasis.zero(3))
    with pytest.raises(FieldMismatch):
        subspace_intersection(SubspaceBasis.zero(2), SubspaceBasis.zero(2, GF(2)))
    with pytest.raises(DimensionMismatch):
        DenseMatrix(2, 2, ((1, 2),))


def vector_lists(n):
    return st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), max_size=4)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), vector_lists(n), vector_lists(n))))
def test_dimension_formula_and_complements(args):
    n, A, B = args
    for F in FIELDS:
        a = SubspaceBasis.span(A, n, F)
        b = SubspaceBasis.span(B, n, F)
        s, i = subspace_sum(a, b), subspace_intersection(a, b)
        assert a.dim + b.dim == s.dim + i.dim
        assert all(membership(v, a) and membership(v, b) for v in i.vectors)
        for strategy in ("first", "last"):
            C = complement_basis(a, s, strategy)
            assert len(C) == s.dim - a.dim
            assert subspace_sum(a, SubspaceBasis.span(C, n, F)) == s


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), vector_lists(n))), st.randoms())
def test_canonical_under_shuffles_and_combinations(args, rnd):
    n, A = args
    for F in FIELDS:
        a = SubspaceBasis.span(A, n, F)
        gens = list(A)
        rnd.shuffle(gens)
        # add random combinations of the generators too
        for _ in range(2):
            coeffs = [rnd.randint(-2, 2) for _ in gens]
            gens.append([sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(n)])
        b = SubspaceBasis.span(gens, n, F)
        assert a.vectors == b.vectors and a.pivots == b.pivots


def test_matmul_and_apply():
    A = DenseMatrix.from_rows([[1, 2], [3, 4]])
    B = DenseMatrix.from_rows([[0, 1], [1, 0]])
    assert (A @ B).entries == ((2, 1), (4, 3))
    assert A.apply((1, 1)) == (3, 7)
    assert (A @ DenseMatrix.identity(2)) == A
    rng = random.Random(1)
    for F in FIELDS:
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        M = DenseMatrix.from_rows(rows, F)
        assert M.transpose().transpose() == M
