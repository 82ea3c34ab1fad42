"""Maniplexes as properly edge-coloured graphs, their induced face posets,
and equivalent polytopality criteria with executable cross-checks."""

from . import errors
from .errors import ManiplexError
from .generators import (
    DEFAULT_3TORUS_BASIS,
    hypercube,
    klein_44,
    polygon,
    random_maniplex,
    rectified_cubic_3torus,
    torus_44,
)
from .graphs import (
    ColouredGraph,
    Partition,
    are_isomorphic,
    build_graph,
    components,
    is_connected,
    meet_all,
    partition_meet,
)
from .maniplex import (
    ColouredPath,
    Face,
    FaceFactors,
    Maniplex,
    make_path,
    normalize_path,
    validate,
    walk,
)
from .mix import CoveringMap, find_covering, is_covering, mix, mix_with_projections
from .mpxio import (
    poset_dot,
    read_mpx,
    report_to_dict,
    write_dot,
    write_json,
    write_mpx,
)
from .posets import (
    CheckResult,
    InducedPoset,
    MaximalChain,
    PosetReport,
    all_chains,
    chain_intersection,
    chain_of_flag,
    diamond,
    faithful_by_chain_count,
    faithful_by_enumeration,
    induced_poset,
    is_faithful,
    is_polytope,
    maximal_chains,
    poset_isomorphic,
    section,
    strong_flag_connectivity,
    uniform_chain_length,
)
from .polytopality import (
    CipWitness,
    PolytopalityReport,
    SpipWitness,
    WindowWitness,
    WpipResult,
    beta,
    check_cip,
    check_cip_via_chains,
    check_spip,
    check_wpip,
    flag_graph,
    is_polytopal,
)

__version__ = "0.1.0"

__all__ = [
    "ManiplexError",
    "errors",
    "ColouredGraph",
    "Partition",
    "build_graph",
    "components",
    "partition_meet",
    "meet_all",
    "is_connected",
    "are_isomorphic",
    "Maniplex",
    "validate",
    "Face",
    "FaceFactors",
    "ColouredPath",
    "make_path",
    "walk",
    "normalize_path",
    "InducedPoset",
    "MaximalChain",
    "PosetReport",
    "CheckResult",
    "induced_poset",
    "maximal_chains",
    "all_chains",
    "chain_intersection",
    "chain_of_flag",
    "section",
    "is_faithful",
    "faithful_by_chain_count",
    "faithful_by_enumeration",
    "uniform_chain_length",
    "diamond",
    "strong_flag_connectivity",
    "is_polytope",
    "poset_isomorphic",
    "CipWitness",
    "WindowWitness",
    "SpipWitness",
    "WpipResult",
    "PolytopalityReport",
    "check_cip",
    "check_cip_via_chains",
    "check_wpip",
    "check_spip",
    "is_polytopal",
    "flag_graph",
    "beta",
    "polygon",
    "hypercube",
    "torus_44",
    "klein_44",
    "rectified_cubic_3torus",
    "DEFAULT_3TORUS_BASIS",
    "random_maniplex",
    "mix",
    "mix_with_projections",
    "CoveringMap",
    "find_covering",
    "is_covering",
    "read_mpx",
    "write_mpx",
    "write_dot",
    "poset_dot",
    "write_json",
    "report_to_dict",
]
