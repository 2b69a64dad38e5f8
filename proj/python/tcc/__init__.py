"""Classification of ternary linear codes up to monomial equivalence."""

from tcc._tcc import *  # noqa: F401,F403
from tcc._tcc import __version__  # noqa: F401
