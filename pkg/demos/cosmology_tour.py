"""
Counting the points of empty space
===================================

From two observed numbers -- the vacuum energy density and the size of
the universe -- the calculator derives a point count, its growth rate,
the density of points, and the smallest resolvable cell, then checks
the whole story against a numerically integrated expansion history.
"""

import math

from finiverse.constants import CODATA2018, GIGAYEAR
from finiverse.cosmology import (
    OBSERVED,
    FluidState,
    acceleration_constant_check,
    evolve_scale_factor,
    friedmann_hubble_rate,
    growth_exponent_per_gigayear,
    lambda_from_density,
    min_metric_diameter,
    planck_vacuum_density,
    point_count_growth_factor,
    point_count_rate,
    pointset_density,
    vacuum_point_count,
    vacuum_pressure_law,
)

print("observed inputs:")
print(f"  rho_vac = {OBSERVED.rho_vac:.3g} J/m^3")
print(f"  L_U     = {OBSERVED.L_U0:.3g} m")
print(f"  H0      = {OBSERVED.H0:.3g} 1/s")

# the headline number: how many points does the vacuum contain?
p0 = vacuum_point_count(OBSERVED)
print(f"\nvacuum point count P = {p0:.3e}")
print(f"cosmological constant Lambda = {lambda_from_density(OBSERVED):.3e} 1/m^2")

# the count grows as the universe expands
print(f"point creation rate dP/dt = {point_count_rate(OBSERVED):.3e} 1/s")
print(f"growth exponent per Gyr   = {growth_exponent_per_gigayear(OBSERVED.H0):.4f}")
print(f"growth factor over 6 Gyr  = {point_count_growth_factor(OBSERVED.H0, 6 * GIGAYEAR):.3f}")

# dividing count by volume gives a density, and its inverse cube root
# a minimum meaningful length: about six femtometers
print(f"\npointset density = {pointset_density(OBSERVED):.3e} 1/m^3")
print(f"minimum metric diameter = {min_metric_diameter(OBSERVED):.3e} m")

# had the vacuum carried the Planck-scale density instead, the cell
# would be absurdly smaller than the Planck length itself
rho_planck = planck_vacuum_density()
print(f"\nPlanck-scale vacuum density = {rho_planck:.3e} J/m^3")

# the vacuum equation of state makes expansion accelerate at a constant
# ratio; integrate the full system and compare with pure exponential
rho_mass = OBSERVED.rho_vac / CODATA2018.c**2
hubble = friedmann_hubble_rate(rho_mass)
print(f"\nconstant acceleration ratio = {acceleration_constant_check(OBSERVED):.3e} 1/s^2")
print(f"implied expansion rate H = {hubble:.3e} 1/s")

t_end = 3.0 / hubble  # three e-folds
initial = FluidState(a=1.0, a_dot=hubble, rho=rho_mass, p=-OBSERVED.rho_vac, t=0.0)
trajectory = evolve_scale_factor(
    initial, vacuum_pressure_law(), lam=0.0, kappa=0, t_end=t_end, step=t_end / 1500
)
final = trajectory.final
exact = math.exp(hubble * t_end)
print("\nintegrated de Sitter expansion over three e-folds:")
print(f"  a(end) numeric = {final.a:.9f}")
print(f"  a(end) exact   = {exact:.9f}")
print(f"  relative error = {abs(final.a - exact) / exact:.2e}")
print(f"  worst Friedmann residual = {max(abs(r) for r in trajectory.friedmann_residuals):.2e}")
print(f"  step-halving endpoint shift = {trajectory.halving_rel_diff:.2e}")
