"""Minimal projective resolutions of simple modules over incidence algebras of
finite posets, and the Ext, Hochschild and finite-space cohomology built on them."""

from .apps import (
    ExtTable,
    FiniteSpace,
    HHTable,
    ext_dims,
    ext_dims_all,
    finite_space_cohomology,
    hochschild_dims,
    specialization_poset,
)
from .exactla import GF, QQ, DenseMatrix, FieldSpec, SubspaceBasis
from .oracle import interval_betti_oracle, order_complex, simplicial_cohomology_dims
from .poset import Poset, from_relations
from .resolution import (
    BettiTable,
    Resolution,
    betti,
    compute_cycles,
    expand_complex,
    nonexactness_gap,
    verify_resolution,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "DenseMatrix", "ExtTable", "FieldSpec", "FiniteSpace", "GF", "HHTable", "Poset", "QQ",
    "Resolution", "SubspaceBasis", "betti", "compute_cycles", "expand_complex", "ext_dims", "ext_dims_all",
    "finite_space_cohomology", "from_relations", "hochschild_dims", "interval_betti_oracle",
    "nonexactness_gap", "order_complex", "simplicial_cohomology_dims", "specialization_poset",
    "verify_resolution",
]
