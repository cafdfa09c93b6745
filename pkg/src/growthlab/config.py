"""Size caps for exact desk-scale computations.

All caps guard against accidentally feeding a huge group into an
algorithm that enumerates elements; they are generous for the intended
scale (orders up to a few thousand for lattice work, a few hundred
thousand for character tables).  ``GROWTHLAB_ELEMENT_CAP`` in the
environment overrides the element cap.
"""

import os

# Largest group whose elements may be listed / fingerprinted.
ELEMENT_CAP = int(os.environ.get("GROWTHLAB_ELEMENT_CAP", 50_000))

# Largest group for subgroup-lattice enumeration and character tables.
ORDER_CAP = 20_000

# Largest group for which a dense multiplication table is materialised;
# between this and ELEMENT_CAP products fall back to per-row computation.
MULT_TABLE_MAX = 6_000

# Largest group for conjugacy-class / character work when a caller
# explicitly raises the cap (the zeta data for Alt(9) needs 181440).
CLASS_ITER_CAP = 250_000
