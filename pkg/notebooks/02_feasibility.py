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

# # Feasibility checks
#
# Each check has a stable id and returns pass, fail, skip or borderline. A
# check fails only when interval arithmetic rules out the feasible side.

# +
from drgfeas import Profile, default_catalog, eigenvalues, parse_array, run_pipeline
from drgfeas.feasibility import (
    CHECK_IDS,
    check_c2_bound,
    check_krs_condition,
    check_multiplicity_integrality,
)
from drgfeas.render import report_text
# -

CHECK_IDS

# ## A full report
#
# Cheap combinatorial checks run first, then spectral ones, then the Krein
# parameters.

print(report_text(run_pipeline(parse_array("6,4,2;1,2,3"), Profile(catalog=default_catalog()))))

# ## Ruled out by the absolute bound
#
# This array has eigenvalue `-5` with multiplicity 7 on 63 vertices. Its
# Krein parameters do not vanish where the absolute bound needs them to.

rep = run_pipeline(parse_array("10,8,3;1,2,10"))
[(c.id, c.status, c.detail) for c in rep.failed]

# ## Multiplicities must be integers
#
# `{5,4,3;1,1,2}` passes every check; a graph with this array is known not to
# exist, and only the catalog says so. The nearby `{5,4,2;1,1,2}` already fails
# on multiplicities.

for text in ("5,4,3;1,1,2", "5,4,2;1,1,2"):
    res = check_multiplicity_integrality(eigenvalues(parse_array(text)))
    print(text, res.status, res.detail)

run_pipeline(parse_array("5,4,3;1,1,2"), Profile(catalog=default_catalog())).verdict

# ## c2 against the K_{2,c2} inequalities
#
# With `theta_min = -k/2` and `a1 = 0`, `c2 = 6` is too large. Both the
# closed-form bound and the Gram-matrix inequalities at `theta_min` see it.

arr = parse_array("16,15,2;1,6,8")
spec = eigenvalues(arr)
spec.theta_min.exact, check_c2_bound(arr).status, check_krs_condition(arr, spec.theta_min, 2, 6).status

# ## Fast mode
#
# `fast=True` stops at the first failure.

[c.id for c in run_pipeline(parse_array("10,8,3;1,2,10"), Profile(fast=True)).checks]
