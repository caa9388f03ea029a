"""Signature-based Groebner basis computation over prime fields."""
from .engine import (GBResult, LabeledPoly, MonSig, SignatureEngine, certify,
                     incremental_gb, sig_cmp, sig_mul, sigma_reduce)
from .field import PrimeField
from .monomial import Monomial, MonomialOrder, mono_cmp, mono_divides, mono_lcm, mono_quot
from .oracle import buchberger, ideals_equal, interreduce, is_groebner
from .poly import PolyRing, Polynomial, s_polynomial, top_reduce_full
from .strategies import PRESETS, StrategyConfig, get_strategy
from .systems import (SystemSpec, gen_cyclic, gen_eco, gen_katsura, load_system,
                      named_system, parse_system)

__version__ = "0.1.0"

__all__ = [
    "PrimeField", "Monomial", "MonomialOrder", "mono_cmp", "mono_divides",
    "mono_lcm", "mono_quot", "PolyRing", "Polynomial", "s_polynomial",
    "top_reduce_full", "MonSig", "LabeledPoly", "SignatureEngine", "GBResult",
    "incremental_gb", "certify", "sig_cmp", "sig_mul", "sigma_reduce",
    "StrategyConfig", "PRESETS", "get_strategy", "buchberger", "interreduce",
    "ideals_equal", "is_groebner", "SystemSpec", "gen_cyclic", "gen_katsura",
    "gen_eco", "named_system", "parse_system", "load_system",
]
