"""Backend selection for the trace/scan kernels.

The compiled extension is used when it imports; set
``RECTANGLE_FORGE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("RECTANGLE_FORGE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "cython" if compiled_backend is not None else "python"

OK = python_backend.OK
UNMATCHED = python_backend.UNMATCHED
STARVED = python_backend.STARVED

trace = backend.trace
scan = backend.scan
canonical_edge = backend.canonical_edge
accept = backend.accept
proper_subrectangle = backend.proper_subrectangle
spanning_seed = backend.spanning_seed
conflict_seed = backend.conflict_seed
embed_search = backend.embed_search
periodic_cycle = backend.periodic_cycle
mismatched_parallel = backend.mismatched_parallel
