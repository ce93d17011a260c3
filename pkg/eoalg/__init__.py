"""
eoalg - exact algebra for connective higher real K-theories.

Koszul-filtration combinatorics for cyclic 2-groups, Groebner bases over F2,
Poincare series and Gaussian binomials, formal K0 relations, and the
Euler-characteristic gate for generalized Moore spectra.
"""

__version__ = "0.1.0"
