"""Exact free-group computation and the shortening-quotient verification
harness, backed by the C++ core."""

from ._mrq import *  # noqa: F401,F403
