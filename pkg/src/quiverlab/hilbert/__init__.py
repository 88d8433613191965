"""Graded characters of quiver reductions and their brute-force oracles."""
from .molien import koszul_euler_series, matter_series
from .oracles import abelian_invariant_oracle, symmetric_power_series
from .series import TruncSeries

__all__ = [
    "TruncSeries",
    "abelian_invariant_oracle",
    "koszul_euler_series",
    "matter_series",
    "symmetric_power_series",
]
