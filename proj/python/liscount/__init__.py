"""Exact and asymptotic counting of r-uniform words with bounded increasing subsequences."""

try:
    from ._liscount import *  # noqa: F401,F403
except ImportError:  # development builds keep the module next to the build tree
    from _liscount import *  # noqa: F401,F403
