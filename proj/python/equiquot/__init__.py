"""Exact finite-group computations.

Everything lives in the compiled extension; this package re-exports it.
"""

try:
    from equiquot._core import *  # noqa: F401,F403
    from equiquot._core import __doc__  # noqa: F401
except ImportError:
    # in-tree builds leave the extension at the build root, next to nothing
    from _core import *  # noqa: F401,F403
    from _core import __doc__  # noqa: F401
