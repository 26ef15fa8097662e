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

# # Catalog and command line
#
# Feasibility is computed; existence is looked up. The catalog keeps what is
# known about real graphs apart from what the checks can decide.

# +
import json

from drgfeas import default_catalog, parse_array
from drgfeas.cli import main
# -

cat = default_catalog()
len(cat), [r.render() for r in cat.list(status="nonexistent")]

# Families are stored once and instantiated on lookup.

cat.lookup(parse_array("10,4;1,10"))

# The text format round-trips byte for byte.

type(cat).loads(cat.dumps()).dumps() == cat.dumps()

# ## The `drgfeas` command
#
# The same entry point runs as `drgfeas ...` or `python -m drgfeas ...`.

main(["check", "7,6,6;1,1,2"])

main(["--json", "bound", "valency", "--diameter", "2", "--alpha", "1/2"])

main(["catalog", "lookup", "15,14,12;1,1,9"])

# Exit code 1 means infeasible or known not to exist.

main(["check", "12,10,3;1,3,12", "--fast"])
