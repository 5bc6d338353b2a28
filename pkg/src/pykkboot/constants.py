"""
Defines some constants for package

Default bounds for the oracle, the Prüfer probes and the seeded
verification corpora. Every function that uses one of these takes
a keyword argument of the same (lower case) name to override it.

"""

# Names accepted by pykkboot.bifunctor()
BIFUNCTORS = [
    'ext',
    'hom',
    'tensor',
    'tor',
]

# Largest group order the brute-force oracle will enumerate
MAX_ORDER = 64

# Largest ambient group the Prüfer probes will enumerate
PROBE_MAX_ELEMENTS = 200_000
PROBE_DEPTH        = 8

# Primes used when enumerating subsets of Spec Z
PRIME_BOUND         = 13
RESIDUE_PRIME_BOUND = 50
THICK_PRIME_BOUND   = 7
PROBE_PRIME_BOUND   = 7

# Seeded corpus shape
DEFAULT_SEED  = 0
CORPUS_SIZE   = 200
ORACLE_PAIRS  = 500
FAMILY_COUNT  = 200
MORPHISMS     = 100
MAX_RANK      = 3
MAX_FACTORS   = 4
MAX_FACTOR    = 64
MAX_ATOMS     = 2
MAX_CONE_N    = 64

SUITES = [
    'oracle',
    'uct',
    'kunneth',
    'residue',
    'classification',
    'smashing',
    'support-datum',
    'cone',
    'colimit',
]

# CLI exit codes
EXIT_OK              = 0
EXIT_FAILURE         = 1
EXIT_USAGE           = 2
EXIT_UNREPRESENTABLE = 3
