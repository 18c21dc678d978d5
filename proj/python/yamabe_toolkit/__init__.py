"""Reduced-energy toolkit for sign-changing Yamabe blow-up analysis."""

from ._core import *  # noqa: F401,F403
