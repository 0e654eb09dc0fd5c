"""
Taming the divergent zero-point sum
====================================

The mode sum for a field in a box grows without bound as the cutoff
rises.  Assigning the full sum its zeta-regularized value turns the
divergence into a small negative constant: the famous -1/12.
"""

from fractions import Fraction

from finiverse.regularization import (
    bernoulli,
    oscillator_count_energy,
    partial_sum_linear,
    point_bound_from_cutoff,
    vacuum_energy_partial,
    vacuum_energy_regularized,
    zeta_negative,
)

# the Bernoulli numbers are the engine; all exact rationals
print("first Bernoulli numbers:")
for n in range(9):
    print(f"  B_{n} = {bernoulli(n)}")

# the divergent sums 1+1+1+... and 1+2+3+... get finite stand-ins
print("\nzeta-regularized values:")
print("  sum of 1 over all n :", zeta_negative(0))
print("  sum of n over all n :", zeta_negative(1))
print("  sum of n^3 over all n:", zeta_negative(3))
assert zeta_negative(1) == Fraction(-1, 12)

# watch the partial sums diverge while the regularized value sits still
L = 1.0e-15  # a box the size of a proton, in meters
print("\npartial vacuum energy in a 1 fm box (joules):")
for cutoff in (1, 10, 100, 1000):
    print(f"  N = {cutoff:4d}: {vacuum_energy_partial(L, cutoff):.6e}")
print("regularized value:      ", f"{vacuum_energy_regularized(L):.6e}")
print("note the sign flip: the full regularized energy is negative")

# same box, counted as ground-state oscillators instead
print("\noscillator picture, energy of P oscillators in the box:")
for count in (1, 12, 144):
    print(f"  P = {count:3d}: {oscillator_count_energy(L, count):.6e} J")

# a mode cutoff K supports only so many oscillators
print("\nhow many oscillators can a cutoff K support?")
for K in (1, 2, 5, 10):
    print(f"  K = {K:2d}: P < {point_bound_from_cutoff(K):.4f}")

# consistency: the partial sum is exactly N(N+1)/2 modes' worth
assert partial_sum_linear(1000) == 500500
print("\npartial_sum_linear(1000) =", partial_sum_linear(1000), "(exact integer)")
