"""
File collects various constants used in the project as well as enums used for configuration.
"""

import os
from enum import Enum, IntEnum


# ------------------------------
# TYPE ENUMS
# ------------------------------

class CountKind(Enum):
    """
    Families of monic irreducible polynomials counted by the counting lemmas
    """

    PLAIN = "plain"
    SELF_RECIPROCAL = "self-reciprocal"
    SELF_CONJUGATE = "self-conjugate"


class GroupFamily(Enum):
    """
    Matrix algebra / classical group families supported by the enumeration layer
    """

    M = "m"
    GL = "gl"
    SP = "sp"
    U = "u"


class CountMethod(Enum):
    """
    How count-irr evaluates a count
    """

    FORMULA = "formula"
    ORACLE = "oracle"
    BOTH = "both"


class PeriodicMethod(Enum):
    """
    How the periodic command obtains the number of periodic points
    """

    CLASS = "class"
    CLOSED = "closed"
    BRUTE = "brute"
    ALL = "all"


class OutputFormat(Enum):
    """
    Report serialization formats
    """

    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class VerifySuite(Enum):
    """
    Verification suites run by the verify command
    """

    LEMMAS = "lemmas"
    DYNAMICS = "dynamics"
    CLASSES = "classes"
    LIMITS = "limits"
    ALL = "all"


class EnumerationMethod(IntEnum):
    """
    Strategies used to list the elements of a matrix group
    """

    FILTER = 0
    SL2 = 1
    CLOSURE = 2


class ExitCode(IntEnum):
    """
    Process exit codes of the command line front end
    """

    OK = 0
    MISMATCH = 1
    INVALID_PARAMETERS = 2
    GUARD_EXCEEDED = 3


# ------------------------------
# GENERAL constants
# ------------------------------

VERSION: str = "ffdyn 1.0.0"
"""
Version string embedded in every report
"""

# ------------------------------
# ENVIRONMENT constants
# ------------------------------

ENV_CACHE_DIR: str = "FFDYN_CACHE"
"""
Name of the environment variable pointing at the group enumeration cache directory
"""

ENV_LOG_LEVEL: str = "FFDYN_LOG_LEVEL"

LOG_LEVEL: str = os.environ.get(ENV_LOG_LEVEL, "WARNING").upper()

SHOW_PROGRESS: bool = True
"""
Progress bars are drawn on stderr only, and only when it is a terminal
"""

# ------------------------------
# FIELD constants
# ------------------------------

FIELD_MAX_ORDER: int = 2 ** 20
"""
Largest field order accepted by make_field
"""

# ------------------------------
# GUARD constants
# ------------------------------

POLY_ENUMERATION_GUARD: int = 2 ** 24
"""
Upper bound on the number of monic polynomials scanned by a single enumeration
"""

GROUP_FILTER_GUARD: int = 2 ** 26
"""
Upper bound on q^(n^2) for filter enumeration of a matrix group
"""

GROUP_CLOSURE_GUARD: int = 2 ** 26
"""
Upper bound on |G| for closure enumeration
"""

ORBIT_MEMO_BUDGET: int = 100_000
"""
Maximum number of distinct states remembered while following a power map orbit
"""

CLASS_COUNT_MAX_N: int = 6
"""
Largest dimension accepted by the class based exact counter
"""

# ------------------------------
# ENUMERATION constants
# ------------------------------

MATRIX_BATCH_SIZE: int = 65536
"""
Number of matrices decoded and tested per numpy batch
"""

FILTER_PREFERRED_LIMIT: int = 2 ** 20
"""
Sp / U groups whose whole matrix space is at most this large are enumerated by filtering;
larger ones use the SL_2 parametrisation (Sp_2) or closure
"""

CLOSURE_SEED: int = 20240917
CLOSURE_ATTEMPTS: int = 16
CLOSURE_POOL_SIZE: int = 4
"""
Number of random generators drawn from the transvection / reflection pool per attempt
"""

CROSS_CHECK_SAMPLE: int = 512
"""
Number of enumerated elements whose power identity verdict is re-derived structurally
and by orbit iteration
"""

PARALLEL_CHUNKS_PER_JOB: int = 4

# ------------------------------
# VERIFY constants
# ------------------------------

VERIFY_DEFAULT_BUDGET: int = 2 ** 24
"""
Default work budget of a single verify check (enumeration size, not time)
"""

VERIFY_LEMMA_QS: list[int] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31,
                              32, 37, 41, 43, 47, 49]
VERIFY_LEMMA_LS: list[int] = [2, 3, 5, 7]
VERIFY_PLAIN_MAX_N: int = 4
VERIFY_SELF_RECIPROCAL_MAX_N: int = 3
VERIFY_SELF_CONJUGATE_MAX_N: int = 3

VERIFY_FIELD_MAX_Q: int = 343
VERIFY_FIELD_LS: list[int] = [2, 3, 5]

VERIFY_DYNAMICS_SPACES: list[tuple[int, int]] = [(2, 3), (2, 5), (2, 7), (3, 3)]
"""
(n, q) pairs whose whole matrix algebra is swept by the structural versus orbit check
"""

VERIFY_EXACT_SPACES: list[tuple[int, int]] = [(2, 3), (2, 5), (2, 7), (2, 9), (2, 11),
                                              (3, 3), (3, 5)]
VERIFY_CENTRALIZER_SPACES: list[tuple[int, int]] = [(2, 3), (3, 2), (3, 3)]
VERIFY_CONVERGENCE_QS: list[int] = [13, 31, 67]
VERIFY_NORMALIZATION_MAX_ELL: int = 8

# ------------------------------
# SWEEP constants
# ------------------------------

SWEEP_PATTERN: str = r"^q=(\d+)\.\.(\d+)$"
