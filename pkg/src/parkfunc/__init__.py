"""Parking function combinatorics: simulation, decomposition, counting, regions."""

from .core import (
    ParkOutcome,
    format_word,
    is_parking_function,
    is_prime_parking_function,
    parse_word,
    prime_street,
    rotated_street,
    simulate,
    sorted_rearrangement,
    standard_street,
    strip_first_one,
)
from .cycle_lemma import (
    Decomposition,
    ScoreVector,
    decompose,
    recompose,
    sample_prime,
    sample_primes,
    scores,
)
from .enumeration import (
    CountReport,
    all_words,
    count_parking_functions,
    count_prime_parking_functions,
    verify_bijection,
    verify_proposition,
)
from .errors import GuardRangeError
from .shi import (
    Hyperplane,
    Region,
    SignVector,
    base_region,
    enumerate_regions,
    feasible_point,
    hyperplanes,
    is_bounded,
    is_feasible,
    verify_pak_stanley,
)

__version__ = "0.1.0"

__all__ = [
    "CountReport",
    "Decomposition",
    "GuardRangeError",
    "Hyperplane",
    "ParkOutcome",
    "Region",
    "ScoreVector",
    "SignVector",
    "all_words",
    "base_region",
    "count_parking_functions",
    "count_prime_parking_functions",
    "decompose",
    "enumerate_regions",
    "feasible_point",
    "format_word",
    "hyperplanes",
    "is_bounded",
    "is_feasible",
    "is_parking_function",
    "is_prime_parking_function",
    "parse_word",
    "prime_street",
    "recompose",
    "rotated_street",
    "sample_prime",
    "sample_primes",
    "scores",
    "simulate",
    "sorted_rearrangement",
    "standard_street",
    "strip_first_one",
    "verify_bijection",
    "verify_pak_stanley",
    "verify_proposition",
]
