"""Exact Dedekind sums and their p-adic approximation properties."""

from .approximate import Target, Witness, approximate, verify_witness
from .arith import INFINITY, Congruence, crt, mod_inverse, parse_rational, rational_residue, vp
from .congruences import eq216_check, lemma1_check, lemma1_predict
from .dedekind import DedekindPair, dedekind_fast, dedekind_naive, n_times_s, sawtooth
from .errors import (
    DedekindError,
    InvalidArgument,
    InvalidTarget,
    InvariantViolation,
    NoInverse,
    NotApproximable,
    NotPIntegral,
    OracleCapExceeded,
    TheoremViolation,
)
from .families import FamilyParams, FamilyValue, closed_form, family_value, lemma5_forward, lemma5_inverse
from .obstruction import residue_class_check, scan

__version__ = "0.1.0"
