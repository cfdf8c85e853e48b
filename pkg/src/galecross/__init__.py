"""Exact Gale duality, rectilinear crossing counts, k-set statistics and
crossing-witness pipelines for drawings of complete uniform hypergraphs."""

__version__ = "0.1.0"

from .errors import InputError, InvariantError, UnsupportedError
from .gale import (
    AffineGaleDiagram,
    GaleTransform,
    LinearSeparation,
    affine_diagram,
    enumerate_separations,
    gale_transform,
    is_convex_position_gale,
    neighborliness_gale,
    separation_to_crossing,
)
from .pointconfig import (
    PointConfiguration,
    gen_moment_curve,
    gen_planted,
    gen_random,
    gen_segment_sum,
    is_convex_position,
    is_general_position,
    load_config,
    plant_interior,
    save_config,
)
from .simplexcross import (
    CrossingPair,
    count_all_crossings,
    extend_crossing,
    radon_partition,
    simplices_cross,
)
from .witness import (
    WitnessReport,
    highly_neighborly_witnesses,
    main_witnesses,
    nonconvex_witnesses,
    t_neighborly_witnesses,
    verify_report,
)
