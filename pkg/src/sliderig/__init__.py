"""Rigidity with sliders: typed graphs, orientations, cores, and limits.

Vertices carry one of two types: sliders (one degree of freedom) and
free points (two).  The package decides sparsity and rigidity exactly,
peels degree cores, decomposes graphs into maximal rigid components,
evaluates the asymptotic threshold formulas, and runs reproducible
Monte-Carlo sweeps comparing the two.
"""

from .asymptotics import (
    CoreFractions,
    ThresholdReport,
    branching_coeffs,
    c_star,
    c_tilde,
    calF,
    core_fractions,
    core_plus_fraction,
    delta,
    f_ratio,
    orientable_fraction_limit,
    poisson_tail,
    psi,
    threshold_report,
    xi_star,
    xi_tilde,
)
from .cores import CoreResult, core_2_5, core_plus, core_stats
from .experiments import (
    SummaryRow,
    SweepConfig,
    TrialRecord,
    compare,
    emit_csv,
    emit_plotdata,
    parse_csv,
    run_sweep,
    witness_scan,
)
from .graph import (
    ErConfig,
    GraphFormatError,
    TypedGraph,
    VertexType,
    induced_subgraph,
    read_graph,
    sample_er,
    write_graph,
)
from .orientation import (
    DenseWitness,
    Orientation,
    find_orientation,
    max_orientable_edges,
    verify_orientation,
)
from .rigidity import (
    RankResult,
    RigidDecomposition,
    construct_minimally_rigid,
    edges_to_merge,
    is_laman_sparse,
    is_minimally_rigid,
    is_rigid,
    is_sparse,
    maximal_block_of_edge,
    rank,
    retype_to_1,
    rigid_components,
    rigidity_target,
)

__version__ = "0.1.0"

__all__ = [
    "CoreFractions",
    "CoreResult",
    "DenseWitness",
    "ErConfig",
    "GraphFormatError",
    "Orientation",
    "RankResult",
    "RigidDecomposition",
    "SummaryRow",
    "SweepConfig",
    "ThresholdReport",
    "TrialRecord",
    "TypedGraph",
    "VertexType",
    "branching_coeffs",
    "c_star",
    "c_tilde",
    "calF",
    "compare",
    "construct_minimally_rigid",
    "core_2_5",
    "core_fractions",
    "core_plus",
    "core_plus_fraction",
    "core_stats",
    "delta",
    "edges_to_merge",
    "emit_csv",
    "emit_plotdata",
    "f_ratio",
    "find_orientation",
    "induced_subgraph",
    "is_laman_sparse",
    "is_minimally_rigid",
    "is_rigid",
    "is_sparse",
    "maximal_block_of_edge",
    "max_orientable_edges",
    "orientable_fraction_limit",
    "parse_csv",
    "poisson_tail",
    "psi",
    "rank",
    "read_graph",
    "retype_to_1",
    "rigid_components",
    "rigidity_target",
    "run_sweep",
    "sample_er",
    "threshold_report",
    "verify_orientation",
    "witness_scan",
    "write_graph",
    "xi_star",
    "xi_tilde",
]
