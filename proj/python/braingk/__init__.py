"""Similarity graphs, graph kernels and LOO severity classification for
multivariate time-series recordings."""

from braingk._core import *  # noqa: F401,F403
from braingk._core import __version__  # noqa: F401
