"""Strong robustness of codimension-2 toric ideals via planar Gale diagrams.

The library decides whether the Graver basis of a corank-2 toric ideal
equals its set of indispensable binomials, producing the full certificate
chain on the way: kernel lattice bases, the reduced Gale configuration,
per-cone Hilbert bases, bouquet decompositions, and independent
brute-force verifications of every claim.
"""

from .errors import (
    ConsistencyError,
    DegenerateError,
    GaleRobustError,
    GradingError,
    MatrixFormatError,
    RankError,
    ShellWarning,
    ZeroRowError,
)
from .gale import (
    Bouquet,
    GaleConfiguration,
    ReducedGaleConfiguration,
    bouquets,
    gale_transform,
    is_positively_graded,
    reduce_configuration,
)
from .hilbert import (
    Cone2D,
    HilbertBasisSet,
    fan_hilbert_union,
    fan_radius_bound,
    hilbert_basis,
    hilbert_basis_visible,
    symmetric_core,
)
from .intlinalg import (
    IntegerMatrix,
    determinant,
    hermite_normal_form,
    kernel_lattice_basis,
    rank,
)
from .oracle import (
    SHELL_WIDTH,
    FiberEnumeration,
    enumerate_fiber,
    graver_bruteforce,
    is_indispensable_oracle,
)
from .toric import (
    Binomial,
    LawrenceMatrix,
    RobustnessReport,
    binomial_from_gale,
    centrally_symmetric_hull,
    graver_basis,
    indispensable_set,
    is_strongly_robust,
    lawrence_lifting,
    markov_basis,
    render_binomial,
)

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "Bouquet",
    "Cone2D",
    "ConsistencyError",
    "DegenerateError",
    "FiberEnumeration",
    "GaleConfiguration",
    "GaleRobustError",
    "GradingError",
    "HilbertBasisSet",
    "IntegerMatrix",
    "LawrenceMatrix",
    "MatrixFormatError",
    "RankError",
    "ReducedGaleConfiguration",
    "RobustnessReport",
    "SHELL_WIDTH",
    "ShellWarning",
    "ZeroRowError",
    "binomial_from_gale",
    "bouquets",
    "centrally_symmetric_hull",
    "determinant",
    "enumerate_fiber",
    "fan_hilbert_union",
    "fan_radius_bound",
    "gale_transform",
    "graver_basis",
    "graver_bruteforce",
    "hermite_normal_form",
    "hilbert_basis",
    "hilbert_basis_visible",
    "indispensable_set",
    "is_indispensable_oracle",
    "is_positively_graded",
    "is_strongly_robust",
    "kernel_lattice_basis",
    "lawrence_lifting",
    "markov_basis",
    "rank",
    "reduce_configuration",
    "render_binomial",
    "symmetric_core",
]
