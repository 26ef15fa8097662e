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

# # Closed-form bounds

# +
from fractions import Fraction

from drgfeas import eigenvalues, parse_array
from drgfeas.bounds import (
    a1_valency_cap,
    delsarte_clique_cap,
    hoffman_for,
    three_chromatic_necessary,
    valency_bound,
)
# -

# ## The valency bound
#
# `f(D, alpha)` is a maximum over `q = 1..D`, and `kappa = (f-1)(f+2)/2` caps
# the valency. The numbers grow fast.

for D in (2, 3, 4):
    vb = valency_bound(D, Fraction(1, 2))
    print(D, vb.f_value, vb.kappa, vb.maximizers)

# ## Caps when a1 = 1 and theta_min = -k/2

[(D, a1_valency_cap(D, True), a1_valency_cap(D, False)) for D in (2, 3, 4)]

# ## Hoffman and Delsarte
#
# The Petersen graph meets the Hoffman bound: it has independent sets of size 4.
# The lines of H(3,3) are cliques of size 3, matching Delsarte.

pet = parse_array("3,2;1,1")
hoffman_for(pet, eigenvalues(pet))

h33 = parse_array("6,4,2;1,2,3")
delsarte_clique_cap(h33.k, eigenvalues(h33).theta_min)

# Irrational `theta_min` gives an enclosure.

pent = parse_array("2,1;1,1")
delsarte_clique_cap(pent.k, eigenvalues(pent).theta_min)

# ## A necessary condition for three colours
#
# A 3-colourable k-regular graph has an independent set of size `n/3`, and
# Hoffman then forces `theta_min <= -k/2`.

[(t, three_chromatic_necessary(parse_array(t))) for t in ("3,2;1,1", "6,3;1,2", "6,4,4;1,1,3")]
