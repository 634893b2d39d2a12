"""Workbench for binary self-dual codes with dihedral symmetry.

Bit-packed GF(2) linear algebra, arithmetic in the even-weight subring of
F2[x]/(x^p - 1), generator-matrix construction of self-dual codes invariant
under a dihedral group of order 2p, minimum-distance and weight enumeration
by information-set enumeration, and exact-rational shadow/weight-enumerator
certification.
"""

from sdcodes.gf2 import BitMatrix, BitVector

__all__ = ["BitMatrix", "BitVector"]

__version__ = "0.1.0"
