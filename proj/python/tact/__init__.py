"""Time-domain analog weighted-sum computation (TACT).

Thin Python surface over the C++ core: spike-timing encoding, the exact
firing-time solver, dual-rail signed sums, multi-layer timing inference, the
floating-point oracle, and the RC-crossbar circuit/energy models.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree builds put _core on sys.path
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
