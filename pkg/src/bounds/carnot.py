"""
Temperature-based efficiency bounds: Carnot, the Clausius multi-bath bound and
its generalisation to heat release at several temperatures.
"""
import math
from typing import Optional

from src.bounds.profile import HeatProfile
from src.exceptions import BoundError


def carnot_bound(t_hot: float, t_cold: float) -> float:
    if not (t_cold > 0.0 and t_hot >= t_cold):
        raise BoundError(f"need T_hot >= T_cold > 0, got T_hot={t_hot!r}, T_cold={t_cold!r}")
    return 1.0 - t_cold / t_hot


def _absorption(profile: HeatProfile):
    absorbed = profile.absorbed
    if not absorbed:
        raise BoundError("the profile has no absorbing entry")
    heat_in = math.fsum(e.heat for e in absorbed)
    entropy_in = math.fsum(e.heat / e.temperature for e in absorbed)
    return heat_in, entropy_in


def clausius_multibath_bound(profile: HeatProfile, t_min: Optional[float] = None) -> float:
    """η ≤ 1 − T_min·S_in/Q_in, S_in = Σ_{Q_b>0} Q_b/T_b."""
    heat_in, entropy_in = _absorption(profile)
    t_min = profile.t_min if t_min is None else t_min
    return 1.0 - t_min * entropy_in / heat_in


def generalized_carnot_bound(profile: HeatProfile, t_min: Optional[float] = None) -> float:
    """
    η ≤ 1 − T̄_out / T̄_in with T̄ = Q/S the heat-weighted harmonic temperature
    of absorption and of release.

    A reversible cycle with this profile attains the value exactly. When the
    profile lists no release, the release is completed reversibly at T_min.
    """
    heat_in, entropy_in = _absorption(profile)
    released = profile.released
    if released:
        heat_out = -math.fsum(e.heat for e in released)
        entropy_out = -math.fsum(e.heat / e.temperature for e in released)
        t_out = heat_out / entropy_out
    else:
        t_out = profile.t_min if t_min is None else t_min
    return 1.0 - t_out * entropy_in / heat_in
