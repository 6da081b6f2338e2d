"""Singularity classification of Schubert varieties: pattern avoidance,
diagram conditions, determinantal generators, and local classes."""

from .catalogs import (
    DBI_PATTERNS,
    EXCEPTIONAL_INTERVALS,
    LCI_PATTERNS,
    MATRIX_LCI_PATTERNS,
    SMOOTH_PATTERNS,
    exceptional_intervals,
    family_interval,
)
from .classify import (
    NonLciWitness,
    SingularityReport,
    classify,
    is_slab,
    matrix_schubert_tilde,
    witness_nonlci,
)
from .diagrams import (
    ADBI_ONLY,
    DBI,
    NEITHER,
    EssentialBox,
    Region,
    associated_dbi,
    box_conditions,
    essential_set,
    inclusion_level,
    region_partition,
    rothe_diagram,
)
from .ideals import (
    GeneratorSet,
    GenericMatrix,
    MinorSpec,
    generator_degrees,
    generic_matrix,
    kl_ideal_generators,
    minimal_generators,
    minor,
    vanishing_equal,
    vanishing_points,
)
from .localclass import local_class_product, oracle_class
from .patterns import (
    IntervalPattern,
    MarkedMeshPattern,
    bruhat_interval,
    contains_classical,
    contains_marked_mesh,
    embeddings_classical,
    interval_embeds,
)
from .permutations import (
    bruhat_leq,
    coxeter_length,
    enumerate_perms,
    format_perm,
    parse_perm,
    rank,
    symmetry,
)
from .polynomials import MultiPoly, divided_difference
from .schubert import double_grothendieck, double_schubert
from .symfuncs import cohomology_presentation, phi_image, schur_rect, sym_func

__version__ = "0.1.0"
