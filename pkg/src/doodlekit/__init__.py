"""Virtual twin groups, virtual doodle Gauss data, braiding, Markov moves."""

from .alexander import braid
from .derived import DerivedMove, apply_derived
from .errors import (
    CertificateError,
    DoodleError,
    GaussDataError,
    IndexOutOfRange,
    InvalidGaussData,
    InvalidStrandCount,
    MatchingViolation,
    NegativeCount,
    PatternMismatch,
    RankMismatch,
    SlotMisuse,
    UnknownToken,
)
from .freegroup import (
    FreeEndomorphism,
    FreeWord,
    compose,
    mu,
    reduce_free,
    relation_count,
    relation_instances,
    separates,
    separating_generator,
    verify_relations,
)
from .gauss import (
    End,
    GaussData,
    closure_gauss,
    format_gauss,
    isomorphic,
    make_gauss,
    parse_gauss,
    relabel,
    validate,
)
from .markov import (
    Budget,
    Distinct,
    Equivalent,
    MoveInstance,
    MoveTrace,
    Unknown,
    Verdict,
    apply_move,
    equivalent_closures,
    format_certificate,
    neighbors,
    parse_certificate,
    verify_certificate,
)
from .words import (
    Letter,
    Permutation,
    TwinWord,
    closure_components,
    concat,
    format_word,
    format_word_file,
    free_reduce,
    inverse,
    parse_word,
    parse_word_file,
    pi,
    random_word,
    shift_left,
)

__version__ = "0.1.0"
