"""Effective spin-1 synchronization models from a (3+3)-level master equation.

Thin wrapper around the compiled ``_spinsync`` extension. When installed as a
wheel the extension lives inside this package; in a plain CMake build tree it
sits next to the package on ``PYTHONPATH``.
"""

try:
    from ._spinsync import *  # noqa: F401,F403
    from ._spinsync import __doc__ as _core_doc
except ImportError:  # build-tree layout
    from _spinsync import *  # noqa: F401,F403
    from _spinsync import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
