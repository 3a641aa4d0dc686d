"""Backend selection for the double-description inner loops.

The compiled module is used when it was built; set ``POLYEXT_PURE_PYTHON=1``
to force the fallback.
"""

import os

if os.environ.get("POLYEXT_PURE_PYTHON") == "1":
    from ._ddkernel_py import adjacent_pairs, combine

    BACKEND = "python"
else:
    try:
        from ._ddkernel import adjacent_pairs, combine

        BACKEND = "cython"
    except ImportError:
        from ._ddkernel_py import adjacent_pairs, combine

        BACKEND = "python"

__all__ = ["BACKEND", "adjacent_pairs", "combine"]
