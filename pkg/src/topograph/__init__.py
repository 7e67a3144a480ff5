"""Exact arithmetic on the Conway topograph.

Five structures share one binary tree: Farey fractions, Markov fractions,
Markov triples, Cohn matrices, and even continued fraction words.  This
package builds each of them with exact integer arithmetic, exposes the maps
between them, and ships verification suites that check the known identities
node by node on any finite window of the tree.
"""

from .cftree import (
    QuadraticIrrational,
    compare_gap,
    format_qi,
    left_companion,
    make_qi,
    markov_cf,
    markov_irrationality,
    periodic_value,
    qi_compare,
    qi_satisfies,
)
from .cohn import (
    CohnMatrix,
    IndexReport,
    cohn_A,
    cohn_B,
    cohn_at,
    cohn_index,
    trace_map,
    verify_cohn_index,
)
from .errors import (
    CombineError,
    DepthLimitError,
    DomainError,
    InvariantError,
    PreconditionError,
    TopographError,
)
from .export import TREE_KINDS, TreeExport, build_export, from_json, render, to_csv, to_dot, to_json
from .markov import (
    MarkovTriple,
    NodeRelations,
    RelationReport,
    check_relations,
    markov_child,
    markov_fraction,
    markov_triple_at,
    springborn_mediant,
    vieta_flip,
)
from .rational import (
    Mat2,
    cf_concat,
    cf_eval,
    cf_expand_even,
    convergent_matrix,
    farey_mediant,
    format_cf_word,
    format_fraction,
    is_farey_neighbors,
    make_fraction,
    parse_cf_word,
    parse_fraction,
)
from .tree import (
    HARD_DEPTH_CAP,
    Node,
    descend,
    enumerate_tree,
    format_path,
    locate,
    mirror,
    parse_path,
)
from .verify import SUITES, VerifyReport, format_report, run_suites

__version__ = "0.1.0"
