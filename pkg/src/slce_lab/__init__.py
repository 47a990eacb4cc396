"""Sidelnikov / SLCE sequences, almost difference sets, Jacobi sums and
multiplier groups, with exact arithmetic throughout."""
from .errors import SlceLabError
from .gf import FiniteField, FieldElement, make_field, field_of_order
from .seq import (PeriodicSequence, Provenance, gen_mseq, gen_sidelnikov, gen_slce,
                  decimate, shift, const_mul, termwise_sum, is_balanced, shift_equivalent,
                  build_family_L, build_family_K, build_family_M, build_family_F1)
from .corr import CorrelationSpectrum, correlation, check_bound, sweep_family
from .ads import (ResidueSet, characteristic_set, classify, is_multiplier,
                  multiplier_group_brute, strong_multiplier_group_brute)
from .cyclo import CycInt, Character, make_character, jacobi_K, stickelberger_exponents
from .mult import compute_S0, compute_S1, akiyama_test, prove_trivial

__version__ = "0.1.0"

__all__ = [
    "SlceLabError", "FiniteField", "FieldElement", "make_field", "field_of_order",
    "PeriodicSequence", "Provenance", "gen_mseq", "gen_sidelnikov", "gen_slce", "decimate",
    "shift", "const_mul", "termwise_sum", "is_balanced", "shift_equivalent",
    "build_family_L", "build_family_K", "build_family_M", "build_family_F1",
    "CorrelationSpectrum", "correlation", "check_bound", "sweep_family",
    "ResidueSet", "characteristic_set", "classify", "is_multiplier",
    "multiplier_group_brute", "strong_multiplier_group_brute",
    "CycInt", "Character", "make_character", "jacobi_K", "stickelberger_exponents",
    "compute_S0", "compute_S1", "akiyama_test", "prove_trivial",
]
