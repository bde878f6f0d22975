"""Pop-stack operators on Cambrian lattices of finite Coxeter groups."""
from .cambrian import Cambrian, is_sortable, sorting_word
from .coxeter import CoxeterElement, CoxeterGroup, group
from .heaps import HeapData
from .lattice import FiniteLattice
from .weak import build_weak_lattice, pop_weak, pop_weak_up

__all__ = [
    "Cambrian",
    "CoxeterElement",
    "CoxeterGroup",
    "FiniteLattice",
    "HeapData",
    "build_weak_lattice",
    "group",
    "is_sortable",
    "pop_weak",
    "pop_weak_up",
    "sorting_word",
]
__version__ = "0.1.0"
