"""Curves with real multiplication by subfields of cyclotomic fields.

Exact arithmetic toolkit: finite fields, polynomial algebra, Gaussian
periods, genus-2 Jacobians, Kummer covers with metacyclic Galois groups,
and zeta-function verification of real multiplication over finite fields.
"""

__version__ = "0.1.0"
