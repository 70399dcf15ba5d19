"""Noun-noun multiword expression extraction toolkit.

Thin wrapper around the compiled extension; everything public lives in
``mwetk._core``.
"""

from mwetk._core import *  # noqa: F401,F403
from mwetk._core import __version__  # noqa: F401
