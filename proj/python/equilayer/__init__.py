"""Exact bases for symmetric- and alternating-group equivariant layers.

Everything heavy lives in the compiled extension; this package re-exports it
and adds a couple of pure-python conveniences.
"""

from fractions import Fraction

from ._equilayer import (
    BasisElement,
    LayerBasis,
    Orbit,
    Permutation,
    ResourceLimitError,
    SetPartition,
    SparseMatrix,
    SubspaceReport,
    act,
    an_dim,
    bell_restricted,
    bias_basis,
    block_labelling,
    check_basis,
    element_to_json,
    enumerate_group,
    enumerate_partitions,
    equivariant_dimension_bruteforce,
    jellyfish_sign,
    layer_basis,
    linearize,
    local_basis,
    rho,
    sign,
    sn_dim,
    sn_orbit,
    split_orbit,
    split_sign_table,
    splits,
    stirling2,
    verify_equivariance,
    weight_matrix,
    with_features,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def to_dense(matrix: SparseMatrix) -> list[list[Fraction]]:
    """Materialize a sparse matrix as nested lists of Fractions."""
    dense = [[Fraction(0)] * matrix.cols for _ in range(matrix.rows)]
    for row, col, value in matrix.entries():
        dense[row][col] = value
    return dense
