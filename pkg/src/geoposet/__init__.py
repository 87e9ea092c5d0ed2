"""Geo-equivalence classes of permutations and the homomorphism poset of
straight-line drawings of K_{2,n}.

Crossings in a drawing correspond to inversions of a permutation word, so
classifying drawings up to crossing-preserving isomorphism reduces to
grouping S_n by their permutation digraphs modulo relabeling and arc
reversal.  The package builds those classes, sizes them through modular
decomposition, orders them by crossing-pattern embedding, and backs the
whole chain with an exact rational geometry oracle.
"""

from .digraphs import (
    CanonicalKey,
    Digraph,
    Orientation,
    canonical_key,
    canonical_key_hex,
    enumerate_transitive_orientations,
    induced_permutation,
    is_isomorphic,
    is_transitive,
    related,
    spanning_embeds,
)
from .geoequiv import (
    ClassTable,
    GeoClass,
    class_key,
    class_members,
    compare_with_reference,
    enumerate_classes,
    equivalent_bruteforce,
    equivalent_fast,
    four_family,
    load_s5_reference,
)
from .geometry import (
    GeneralPositionError,
    Realization,
    build_realization,
    crossing_pairs,
    crossings,
    recover_permutation,
    recover_with_relabeling,
    render_svg,
    validate_general_position,
)
from .graphs import Graph, complete_graph, cycle_graph, empty_graph, inversion_graph, path_graph
from .moddecomp import (
    ClassSizeReport,
    MDNode,
    MDTree,
    NodeKind,
    cograph_class_size,
    count_transitive_orientations,
    decompose,
    is_cograph,
    is_module,
    prime_unique_orientability_check,
)
from .perms import (
    InversionSet,
    OrientationClass,
    PairSet,
    Permutation,
    act,
    all_permutations,
    check_symmetric_difference,
    compose,
    identity,
    inverse,
    inversion_count,
    inversion_set,
    is_inversion_set,
    parse,
    perm_from_inversion_set,
    reverse,
)
from .poset import (
    HasseDiagram,
    Poset,
    bruhat_below,
    bruhat_covers,
    bruhat_extension_check,
    build_poset,
    hasse,
    is_graded,
    precedes,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalKey",
    "ClassSizeReport",
    "ClassTable",
    "Digraph",
    "GeneralPositionError",
    "GeoClass",
    "Graph",
    "HasseDiagram",
    "InversionSet",
    "MDNode",
    "MDTree",
    "NodeKind",
    "Orientation",
    "OrientationClass",
    "PairSet",
    "Permutation",
    "Poset",
    "Realization",
    "act",
    "all_permutations",
    "bruhat_below",
    "bruhat_covers",
    "bruhat_extension_check",
    "build_poset",
    "build_realization",
    "canonical_key",
    "canonical_key_hex",
    "check_symmetric_difference",
    "class_key",
    "class_members",
    "cograph_class_size",
    "compare_with_reference",
    "complete_graph",
    "compose",
    "count_transitive_orientations",
    "crossing_pairs",
    "crossings",
    "cycle_graph",
    "decompose",
    "empty_graph",
    "enumerate_classes",
    "enumerate_transitive_orientations",
    "equivalent_bruteforce",
    "equivalent_fast",
    "four_family",
    "hasse",
    "identity",
    "induced_permutation",
    "inverse",
    "inversion_count",
    "inversion_graph",
    "inversion_set",
    "is_cograph",
    "is_graded",
    "is_inversion_set",
    "is_isomorphic",
    "is_module",
    "is_transitive",
    "load_s5_reference",
    "parse",
    "path_graph",
    "perm_from_inversion_set",
    "precedes",
    "prime_unique_orientability_check",
    "recover_permutation",
    "recover_with_relabeling",
    "related",
    "render_svg",
    "reverse",
    "spanning_embeds",
    "validate_general_position",
]
