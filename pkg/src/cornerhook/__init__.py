"""Exact enumeration and identity checks for boxed plane partitions.

Modules: :mod:`polyring` (integer polynomials, determinants), :mod:`combcore`
(partitions, plane partitions, the area/cohook-area bijection),
:mod:`symfunc` (Schur and dual stable Grothendieck polynomials), :mod:`lgv`
(lattice paths), :mod:`genfun` (generating functions) and :mod:`verify`.
"""

from .combcore import Partition, PlanePartition, enumerate_pp, phi, phi_inverse, pp_stats
from .polyring import MPoly, det

__version__ = "0.1.0"

__all__ = [
    "MPoly",
    "Partition",
    "PlanePartition",
    "det",
    "enumerate_pp",
    "phi",
    "phi_inverse",
    "pp_stats",
]
