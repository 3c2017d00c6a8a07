"""Dimers on a honeycomb cylinder, KR crystals and the quantum cohomology of Grassmannians."""
from .combinatorics import (
    BinaryString,
    BoxShape,
    Composition,
    Partition,
    boundary_pair,
    conjugate,
    degree,
    partition_to_string,
    string_to_partition,
    theta_profile,
)
from .crystals import R_lambda, build_crystal_graph, combinatorial_R, select_B_lambda, signature
from .dimers import (
    DimerConfiguration,
    count_configurations,
    enumerate_all,
    enumerate_configurations,
    to_crystal_vertex,
    to_lozenge_cells,
)
from .errors import BudgetExceeded, DomainError, InvariantViolation
from .qcohomology import (
    RingElement,
    gromov_witten,
    quantum_kostka,
    schubert_product,
    sum_rule_gw,
    sum_rule_kostka,
    toric_schur,
)
from .render import render_svg

__all__ = [
    "BinaryString", "BoxShape", "Composition", "Partition", "boundary_pair", "conjugate", "degree",
    "partition_to_string", "string_to_partition", "theta_profile",
    "R_lambda", "build_crystal_graph", "combinatorial_R", "select_B_lambda", "signature",
    "DimerConfiguration", "count_configurations", "enumerate_all", "enumerate_configurations",
    "to_crystal_vertex", "to_lozenge_cells",
    "BudgetExceeded", "DomainError", "InvariantViolation",
    "RingElement", "gromov_witten", "quantum_kostka", "schubert_product", "sum_rule_gw",
    "sum_rule_kostka", "toric_schur", "render_svg",
]
