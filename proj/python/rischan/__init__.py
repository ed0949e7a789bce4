"""Physics-compliant RIS channel computation with fast realization updates."""

try:
    from rischan._core import *  # noqa: F401,F403
    from rischan import _core as core  # noqa: F401
except ImportError:  # in-tree builds place _core next to the build directory
    from _core import *  # noqa: F401,F403
    import _core as core  # noqa: F401

__all__ = [name for name in dir(core) if not name.startswith("_")]
