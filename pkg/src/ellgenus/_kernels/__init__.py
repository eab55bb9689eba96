"""Kernel backend selection.

The compiled extension (``_speed``, built from ``_speed.pyx``) and the
pure-Python module (``pure``) export identical functions; whichever is
available is re-exported here.  Set ``ELLGENUS_KERNELS=pure`` to force
the fallback (e.g. for benchmarking one against the other).
"""

import os

_forced = os.environ.get("ELLGENUS_KERNELS", "").strip().lower()

if _forced == "pure":
    from ellgenus._kernels.pure import (  # noqa: F401
        big_mul, vdivexact, vmaxbits, vmul, vpack, vplace, vscale, vunpack)
    BACKEND = "pure"
else:
    try:
        from ellgenus._kernels._speed import (  # noqa: F401
            big_mul, vdivexact, vmaxbits, vmul, vpack, vplace, vscale,
            vunpack)
        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        from ellgenus._kernels.pure import (  # noqa: F401
            big_mul, vdivexact, vmaxbits, vmul, vpack, vplace, vscale,
            vunpack)
        BACKEND = "pure"

try:
    from gmpy2 import gcd as _g2gcd

    def big_gcd(a, b):
        return int(_g2gcd(a, b))

except ImportError:  # pragma: no cover
    from math import gcd as big_gcd  # noqa: F401
