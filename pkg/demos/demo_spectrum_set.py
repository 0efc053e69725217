"""
The spectrum set and its lattice translates
===========================================

The sampling series reproduces data whose Fourier coefficients live on
``K = {|k| < rb/theta, max|k +- m| < rb}``. A sampling lattice works when
the translates of ``K`` by its reciprocal lattice do not overlap.
"""

from fractions import Fraction

import numpy as np

from vline_sampling import Geometry, build_K, build_lattice, interlaced_scheme, reciprocal, standard_scheme
from vline_sampling.lattice import coset_arrays, find_overlap

geo = Geometry(Fraction(3, 2), 1, 5, Fraction(5, 6))
K = build_K(geo.r, geo.b, geo.theta)
print(f"|K| = {len(K)}, |k| <= {K.kmax}, |m| <= {K.mmax}")

# K is the diamond |k| + |m| < rb; draw it.
S = K.as_set()
for m in range(K.mmax + 1, -K.mmax - 2, -1):
    print("".join("#" if (k, m) in S else "." for k in range(-K.kmax - 1, K.kmax + 2)))

for sch in (standard_scheme(geo), interlaced_scheme(geo)):
    R = reciprocal(sch.lattice)
    print(f"{sch.kind:<10} N_phi={sch.n_phi} N_psi={sch.n_psi} shift={sch.lattice.shift}"
          f"  reciprocal={R.astype(int).tolist()}  overlap={find_overlap(K, R)}")

# Halving both node counts makes K collide with a neighbour.
half = build_lattice(11, 20, 0)
print("halved lattice overlap at l =", find_overlap(K, reciprocal(half)))

# Interlaced nodes: psi offsets alternate between adjacent phi columns.
_, _, s, t = coset_arrays(interlaced_scheme(geo).lattice)
cols = np.rint(s * 22 / (2 * np.pi)).astype(int)
print("first psi node per column:", np.round([t[cols == j].min() for j in range(4)], 4))
