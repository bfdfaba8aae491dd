"""Backend selection: compiled extension if importable, else pure NumPy.

Set MEMFRIC_PURE=1 to force the fallback (used by the benchmark and the
backend-equivalence tests).
"""

import os

if os.environ.get("MEMFRIC_PURE", "") == "1":
    from . import _pykern as impl
else:
    try:
        from . import _ckern as impl
    except ImportError:
        from . import _pykern as impl

HAVE_COMPILED = bool(getattr(impl, "COMPILED", False))

kahan_ordered = impl.kahan_ordered
kahan_ordered_2d = impl.kahan_ordered_2d
conv_tail = impl.conv_tail
