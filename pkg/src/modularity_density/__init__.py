"""Community structure quality: modularity, Split Penalty, Qs and Modularity Density."""

from .closed_forms import (
    RingSpec,
    clique_split_qds,
    modularity_merge_threshold,
    ring_qds_pairs,
    ring_qds_single,
    two_pairs_qds_delta,
)
from .errors import InputError, ModularityDensityError, RefusalError
from .graph import Graph, format_edge_list, parse_edge_list, symmetrize
from .metrics import (
    CommunityQuality,
    CommunityStats,
    MetricReport,
    community_quality,
    compute_stats,
    modularity,
    qds,
    qs,
    report,
    split_penalty,
)
from .partition import Partition, enumerate_partitions, format_partition, merge, parse_partition

__version__ = "0.1.0"
