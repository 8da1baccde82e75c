"""Select the compiled reduction kernel when it is importable.

Set ``CHARCLASS_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

if os.environ.get("CHARCLASS_PURE_PYTHON"):
    from ._kernel_py import IMPLEMENTATION, StepLimit, divides, reduce, spoly
else:
    try:
        from ._kernel import IMPLEMENTATION, StepLimit, divides, reduce, spoly
    except ImportError:
        from ._kernel_py import IMPLEMENTATION, StepLimit, divides, reduce, spoly

__all__ = ["IMPLEMENTATION", "StepLimit", "divides", "reduce", "spoly"]
