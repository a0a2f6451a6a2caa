"""Exact-rational engine for affine Laumon partition functions.

The heavy lifting lives in the compiled extension; this package just
re-exports it. When running against a plain CMake build tree the extension
sits next to the build products rather than inside the package.
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__ as _doc
except ImportError:  # build-tree layout
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _doc

__doc__ = _doc
