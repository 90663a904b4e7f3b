"""factorlab: a computational laboratory for noncommutative factorization.

The package centers on the two-relator monoid ``<a, b | baab = aa,
aaaab = baaaa>`` (atomic, trivial units, no ascending chain condition on
principal ideals) with two independent equality oracles, its monoid algebra
over an exact field, a verification harness for length-function axioms,
skew and Laurent polynomial rings carrying such functions, frame growth
tables, and a 2x2 matrix ring whose non-atomicity is witnessed by an
unbounded peeling chain.
"""

from .groups import NormalForm

__version__ = "0.1.0"

__all__ = ["NormalForm", "__version__"]
