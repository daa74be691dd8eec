"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``AUDIOACTIVE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

python_kernels = _pykernels

try:
    from . import _kernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("AUDIOACTIVE_PURE_PYTHON"):
    kernels = compiled_kernels
else:
    kernels = _pykernels

BACKEND = kernels.BACKEND
