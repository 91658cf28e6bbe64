"""Selects the polynomial kernel backend at import time.

Prefers the compiled extension, falls back to the pure-Python mirror.
Set SCRIMKIT_PURE=1 to force the fallback (used by the benchmark and
parity tests).
"""

import os

if os.environ.get("SCRIMKIT_PURE") == "1":
    from scrimkit import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from scrimkit import _ckernels as _impl

        BACKEND = "c"
    except ImportError:
        from scrimkit import _pykernels as _impl

        BACKEND = "python"

mul_mod = _impl.mul_mod
rem_mod = _impl.rem_mod
mulrem_mod = _impl.mulrem_mod
add_mod = _impl.add_mod
sub_mod = _impl.sub_mod
