"""Selects the compiled kernel when available, numpy fallback otherwise.

``GROWTHLAB_PURE=1`` forces the fallback (used by tests and the kernel
benchmark to compare both implementations).
"""

import os

if os.environ.get("GROWTHLAB_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

KERNEL = _impl.kernel_name()
build_mult_table = _impl.build_mult_table
close_ids = _impl.close_ids
