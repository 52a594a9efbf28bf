"""Monoid-side combinatorics: permutations, indexed forests and words."""

from .forests import *  # noqa: F401,F403
from .permutations import *  # noqa: F401,F403
from .words import *  # noqa: F401,F403
from . import forests, permutations, words

__all__ = forests.__all__ + permutations.__all__ + words.__all__
