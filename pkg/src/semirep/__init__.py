"""Minimal faithful completely reducible representations of finite semigroups.

Everything is decided combinatorially from a Cayley table: Green's relations,
the congruences ≡_J, the relative kernels N_J and normal-subgroup generation
in the maximal subgroups.
"""

from .analyzer import (
    AnalysisReport,
    Row,
    analyze,
    min_faithful_cr_length,
    obstruction_primes,
    rhodes_irreducible_check,
)
from .congruence import (
    Congruence,
    all_ggm_congruences,
    classify_j_classes,
    compute_N_J,
    ggm_all,
    ggm_congruence,
    is_generalized_group_mapping,
    meet,
)
from .constructions import (
    PosetSpec,
    build_group_union_quotient,
    build_matrix_monoid,
    build_QG,
    build_semilattice,
    builtin,
    builtin_group,
)
from .core import (
    Semigroup,
    Transformation,
    build_from_cayley,
    closure_from_transformations,
    parse_cayley,
    read_cayley,
)
from .errors import ConsistencyError, SemirepError
from .green import compute_green, j_order, maximal_subgroup, stability_audit, subgroup_transport_iso
from .grouptheory import (
    NormalSubgroup,
    Subgroup,
    as_group,
    min_normal_generators,
    min_normal_generators_reduced,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    p_core,
    socle_data,
)
from .zmud import ZmudResult, faithful_cr_exists, gaschutz_check, zmud_number

__version__ = "0.1.0"
