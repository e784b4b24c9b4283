"""Duality of abstract regular polytopes through string C-groups."""

from .cpr import CprGraph
from .duality import EXTERNAL, INTERNAL, NONE, DualityClass, classify, dual
from .errors import CapExceeded, PolydualError
from .fpgroup import Presentation, coxeter, todd_coxeter
from .lattice import FaceLattice, build_lattice, dual_flag_search
from .permcore import Perm, PermGroup
from .sggi import Sggi, is_string_c_group

__all__ = [
    "CapExceeded", "CprGraph", "DualityClass", "EXTERNAL", "FaceLattice", "INTERNAL",
    "NONE", "Perm", "PermGroup", "PolydualError", "Presentation", "Sggi",
    "build_lattice", "classify", "coxeter", "dual", "dual_flag_search",
    "is_string_c_group", "todd_coxeter",
]

__version__ = "0.1.0"
