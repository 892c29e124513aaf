"""Exact character identities between symmetric groups and the hyperoctahedral group.

The library computes symmetric-group characters by the Murnaghan-Nakayama
recursion, hyperoctahedral (B_n) characters and dimensions, the norm map on
even-cycle classes, the basechange map through 2-cores and 2-quotients, and
exact rational Schur polynomial values, together with harnesses that verify
the identities tying all of these together.
"""

from .partitions import (
    Partition,
    PartitionParseError,
    beta_set,
    format_partition,
    from_core_and_quotient,
    hook_lengths,
    is_p_core,
    p_core,
    p_quotient,
    parse_partition,
    partition_from_beta,
    partitions_of,
    sign_odd_parts,
    sign_shuffle,
)
from .characters import (
    centralizer_order,
    character_table,
    class_size,
    dimension,
    double_class,
    even_cycle_classes,
    mn_character,
    product_character,
    sign_of_class,
)
from .hyperoctahedral import (
    BiPartition,
    BnClass,
    basechange,
    bipartition,
    bipartitions_of,
    bn_character_bruteforce,
    bn_character_positive,
    bn_class,
    bn_class_of,
    bn_dimension,
    embed_class,
    format_bipartition,
    norm,
    parse_bipartition,
)
from .symfunc import (
    det,
    mirrored_point,
    mirrored_point_plus,
    power_sum,
    random_rationals,
    schur_eval,
    verify_factorization_even,
    verify_factorization_odd,
    verify_frobenius,
)
from .verify import (
    CorrespondenceRow,
    SignCensus,
    SweepReport,
    TableResult,
    basechange_image_matches_support,
    build_table,
    dimension_match,
    main_theorem_sweep,
    sign_census,
    w0_class,
)

__version__ = "0.1.0"
