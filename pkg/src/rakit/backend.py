"""Kernel backend selection.

Imports the compiled extension when it has been built, otherwise the NumPy
fallback. Set ``RAKIT_FORCE_PYTHON=1`` to force the fallback (used by the
benchmark and by tests that exercise both code paths).
"""

import os

if os.environ.get("RAKIT_FORCE_PYTHON"):
    from . import _kernels_py as kernels

    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        COMPILED = False


def backend_name():
    """Either "compiled" or "python"."""
    return "compiled" if COMPILED else "python"
