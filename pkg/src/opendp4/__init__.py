"""Brauer groups of open degree-4 del Pezzo surfaces.

Computes the algebraic Brauer group of the complement of a hyperplane
section in a smooth quadric-pencil surface as Galois cohomology of its
Picard lattice, classifies the 2- and 4-torsion over every conjugacy
class of subgroups of the relevant Weyl group, and evaluates the
resulting classes at p-adic and real points of sample surfaces.
"""

__version__ = "0.1.0"
