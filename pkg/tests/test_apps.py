import pytest
from hypothesis import given

from conftest import FIELDS, posets
from poset_cohom.apps import (
    FiniteSpace,
    ext_dims,
    ext_dims_all,
    finite_space_cohomology,
    hochschild_dims,
    specialization_poset,
)
from poset_cohom.errors import DomainError, NotATopologyError, UnknownElementError
from poset_cohom.exactla import GF, QQ
from poset_cohom.fixtures import circle, rp2, ten_point
from poset_cohom.oracle import interval_betti_oracle, order_complex, simplicial_cohomology_dims
from poset_cohom.poset import Poset, antichain, chain

SIERPINSKI = FiniteSpace("ab", [(), ("a",), ("a", "b")])
PSEUDO_CIRCLE = FiniteSpace.generated_by("abcd", ["a", "b", "abc", "abd"])


def test_ext_examples():
    p = ten_point()
    assert ext_dims(p, 1, 9).dims == (0, 0, 0, 1, 0)
    assert ext_dims(p, 1, 9).trimmed() == (0, 0, 0, 1)
    for x in p:
        assert ext_dims(p, x, x).trimmed() == (1,)
    assert not any(ext_dims(p, 2, 3).dims)
    assert not any(ext_dims(p, 10, 1).dims)
    with pytest.raises(UnknownElementError):
        ext_dims(p, 1, 99)


def test_ext_table_for_all_targets():
    table = ext_dims_all(ten_point(), 1)
    assert table[10].dims == (0, 0, 0, 0, 1)
    assert table[4][2] == 1


def test_hh_examples():
    assert hochschild_dims(antichain(3)).dims == (3,)
    assert hochschild_dims(chain(1)).dims == (1,)
    assert hochschild_dims(circle()).dims == (1, 1)
    assert hochschild_dims(circle()).padded(4) == (1, 1, 0, 0)
    with pytest.raises(DomainError):
        hochschild_dims(Poset())


def test_hh_rp2_depends_on_characteristic():
    assert hochschild_dims(rp2(), GF(2)).dims == (1, 1, 1)
    assert hochschild_dims(rp2(), QQ).dims == (1,)


def test_specialization_examples():
    discrete = FiniteSpace("ab", [(), ("a",), ("b",), ("a", "b")])
    assert specialization_poset(discrete).covers == frozenset()
    assert specialization_poset(SIERPINSKI).covers == {("a", "b")}
    assert specialization_poset(PSEUDO_CIRCLE) == circle()


def test_finite_space_cohomology_examples():
    assert finite_space_cohomology(SIERPINSKI) == (1,)
    discrete = FiniteSpace("abc", FiniteSpace.generated_by("abc", ["a", "b", "c"]).opens)
    assert finite_space_cohomology(discrete) == (3,)
    assert finite_space_cohomology(PSEUDO_CIRCLE) == (1, 1)


def test_invalid_spaces():
    with pytest.raises(NotATopologyError):
        FiniteSpace("ab", [("a",), ("a", "b")])          # no empty set
    with pytest.raises(NotATopologyError):
        FiniteSpace("abc", [(), ("a",), ("b",), ("a", "b", "c")])   # a | b missing
    with pytest.raises(NotATopologyError):
        FiniteSpace("ab", [(), ("a", "b")])              # indiscrete: not T0
    with pytest.raises(NotATopologyError):
        FiniteSpace("ab", [(), ("c",), ("a", "b")])


@given(posets(min_size=1))
def test_hh0_counts_components_and_matches_oracle(p):
    for field in FIELDS:
        hh = hochschild_dims(p, field)
        assert hh[0] == len(p.connected_components())
        oracle = simplicial_cohomology_dims(order_complex(p), field)
        assert list(hh.padded(len(oracle))) == oracle
        assert len(hh.dims) <= len(oracle)


@given(posets(min_size=1))
def test_cohomology_ignores_order_convention(p):
    assert hochschild_dims(p).dims == hochschild_dims(p.opposite()).dims


@given(posets(min_size=1))
def test_ext1_is_the_cover_relation(p):
    for x in p:
        table = ext_dims_all(p, x)
        for b in p:
            assert table[b][1] == (b in p.successors(x))


@given(posets(min_size=1))
def test_ext_matches_interval_oracle_and_mobius(p):
    for field in (QQ, GF(2)):
        for x in p:
            table = ext_dims_all(p, x, field)
            for b in p.up(x, strict=True):
                ext = table[b]
                oracle = interval_betti_oracle(p, x, b, field)
                n = max(len(oracle), len(ext.dims))
                assert [ext[i] for i in range(n)] == oracle + [0] * (n - len(oracle))
                assert ext.euler_characteristic() == p.mobius(x, b)
