"""Tight T(n)-universal sums of (generalized) m-gonal numbers."""

from .classify import ClassificationReport, enumerate_new, expected_results
from .polygonal import GonalSet, gonal_value, is_member, values_up_to
from .sieve import FormVector, find_witness, odd_square_repr, repr_set, shift_equiv, truant
from .universality import Status, construct_lemma123, is_new, necessary_conditions, verify_tight

__all__ = [
    "ClassificationReport",
    "FormVector",
    "GonalSet",
    "Status",
    "construct_lemma123",
    "enumerate_new",
    "expected_results",
    "find_witness",
    "gonal_value",
    "is_member",
    "is_new",
    "necessary_conditions",
    "odd_square_repr",
    "repr_set",
    "shift_equiv",
    "truant",
    "values_up_to",
    "verify_tight",
]
