#!/usr/bin/env python
'''
Constants used in ColorCodim.
Size guards, caps and defaults; any of the guards can be overridden
from the run configuration dict.
'''

# package version, embedded in every report
VERSION             = '1.0.0'

# exact mode: largest number of coordinate columns, dim(A)^(n+1)
EXACT_COLUMN_CAP    = 10**6

# largest alternation that alt_on_set will expand (8! terms)
EXPANSION_CAP       = 8

# largest n for which group-algebra elements of S_n are materialized
GROUP_ALGEBRA_CAP   = 8

# largest n accepted by partitions_of
PARTITION_CAP       = 40

# randomized mode: columns per batch
BATCH_COLUMNS       = 64

# randomized mode: consecutive batches with unchanged rank before stopping
STABLE_WINDOW       = 5

# randomized mode: hard ceiling on batches for a single seed/prime run
MAX_BATCHES         = 4000

# default primes for the modular fast path (both > 10^6, p^2 < 2^63 / 2^20)
DEFAULT_PRIMES      = [1000003, 1000033]

# default seeds for randomized mode
DEFAULT_SEEDS       = [11, 23, 37]

# default master seed for witness search and lemma checks
DEFAULT_SEED        = 20100

# witness search: trials before giving up
WITNESS_TRIALS      = 400

# witness search: largest dim B accepted
WITNESS_DIM_CAP     = 8

# random rational entries are drawn with numerators in [-RAND_NUM, RAND_NUM]
RAND_NUM            = 5

# and denominators in [1, RAND_DEN]
RAND_DEN            = 3

# determinant check: largest q for the double alternation
DET_CHECK_Q_CAP     = 4

# lift check: default number of sampled cross-set permutations
CROSS_SAMPLES       = 10**4

# significant digits for printed floats
FLOAT_DIGITS        = 12
