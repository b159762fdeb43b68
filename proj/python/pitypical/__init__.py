"""Exact Lubin-Tate / Witt / prism arithmetic over p-adic integer rings."""

try:
    from ._pitypical import *  # noqa: F401,F403
    from ._pitypical import __doc__  # noqa: F401
except ImportError:  # running against an in-tree build directory
    from _pitypical import *  # type: ignore # noqa: F401,F403
