"""Expansion factors and type invariants of free product algebras."""

try:
    from ._freefactor import *  # noqa: F401,F403
    from ._freefactor import __doc__  # noqa: F401
except ImportError:  # in-build-tree smoke tests import the bare extension
    from _freefactor import *  # noqa: F401,F403
