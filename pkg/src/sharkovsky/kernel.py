"""Kernel selection.

The compiled GMP kernel is used when it imports; set
``SHARKOVSKY_PURE_PYTHON=1`` to force the pure-Python kernel.
"""

import os

from . import _pykernel

if os.environ.get("SHARKOVSKY_PURE_PYTHON"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

Nodes = _impl.Nodes
BACKEND = _impl.BACKEND
PyNodes = _pykernel.Nodes
