# Color classes of one instance; instances of interest stay at 10 or below
MAX_CLASSES = 16

# Exhaustive permutation canonicalization
CANONICAL_KEY_LIMIT = 10

GOOD_PERMUTATION_LIMIT = 12

ENUMERATION_LIMIT = 7

MINOR_PATTERN_LIMIT = 8
MINOR_HOST_LIMIT = 40

Z_SMALL_LIMIT = 6

MAX_GRAPH_VERTICES = 512

# Solver progress is checked against the clock every this many nodes
CLOCK_CHECK_INTERVAL = 1024

PRUNING_RULES = ('reachability', 'capacity', 'freeze')

FAMILY_NAMES = (
    'cycle', 'path', 'complete', 'complete_bipartite', 'petersen',
    'hourglass', 'k23', 'c5plus', 'wheel', 'prism', 'wagner', 'g7',
)
