# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#       format_version: '1.5'
#   kernelspec:
#     display_name: Python 3
#     name: python3
# ---

# # Certified spectra of intersection arrays
#
# An intersection array fixes the eigenvalues and multiplicities of any
# distance-regular graph that realises it. `drgfeas` computes them without
# trusting floating point: integral eigenvalues come out exact, the rest as
# rational intervals of guaranteed width.

# +
from fractions import Fraction

from drgfeas import derive_parameters, eigenvalues, parse_array
from drgfeas.spectral import char_poly, krein, standard_sequence, theta_min_at_most, trace_square
# -

# ## Parameters
#
# The Petersen graph has array `{3,2;1,1}`. From it we get the sizes of the
# distance layers and the number of vertices.

petersen = parse_array("3,2;1,1")
p = derive_parameters(petersen)
p.k_i, p.a_i, p.n

# ## Characteristic polynomial and eigenvalues
#
# Coefficients are listed from the constant term up.

char_poly(petersen)

spec = eigenvalues(petersen)
[(t.approx(), m) for t, m in zip(spec.eigenvalues, spec.multiplicities)]

# The pentagon `{2,1;1,1}` has irrational eigenvalues. Each one is an
# isolating interval, and the multiplicities are intervals around 2.

pent = eigenvalues(parse_array("2,1;1,1"))
for t, m in zip(pent.eigenvalues, pent.multiplicities):
    print(f"{t.approx():>16}  exact={t.is_exact}  width={float(t.hi - t.lo):.1e}  m in {m}")

# A finer enclosure only costs more bisection steps.

fine = eigenvalues(parse_array("2,1;1,1"), precision=Fraction(1, 10**40))
float(fine.theta_min.hi - fine.theta_min.lo)

# ## Standard sequences and multiplicities
#
# For H(3,3) and `theta = -3` the standard sequence halves and flips sign at
# every step, and the multiplicity comes out as 8.

h33 = parse_array("6,4,2;1,2,3")
standard_sequence(h33, -3)

spec = eigenvalues(h33)
[(t.exact, m) for t, m in zip(spec.eigenvalues, spec.multiplicities)]

# ## Krein parameters
#
# `q[i, j, h]` uses the eigenvalue order above (descending). The first row is
# the identity.

kr = krein(spec)
[[str(kr[1, 1, h]) for h in range(kr.size)], [str(kr[0, 2, h]) for h in range(kr.size)]]

# For `{10,8,3;1,2,10}` one Krein parameter is negative, so no graph has
# this array.

bad = eigenvalues(parse_array("10,8,3;1,2,10"))
kb = krein(bad)
min(((i, j, h, kb[i, j, h]) for i in range(4) for j in range(4) for h in range(4)), key=lambda x: x[3].lo)

# ## Trace identity and the smallest eigenvalue
#
# The sum of the squared distinct eigenvalues is an integer read straight off
# the array.

trace_square(petersen), sum(t.exact ** 2 for t in eigenvalues(petersen).eigenvalues)

# `theta_min_at_most(arr, r)` decides `theta_min <= -r k` exactly, with no
# eigenvalue approximation. The 3x3 grid has `theta_min = -2`.

grid = parse_array("4,2;1,2")
theta_min_at_most(grid, Fraction(1, 2)), theta_min_at_most(grid, Fraction(2, 3))
