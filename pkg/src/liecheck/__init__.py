"""Classification data for simple Lie algebras and exact verification of the
fixed-point dimension inequalities behind the vcd = gd rigidity argument.

Subpackages:
  algebras      dimension/rank catalog of simple and reductive algebras
  involutions   involution fixed-point (isotropy) tables and triality data
  centralizers  eigenvalue-signature centralizer oracle and closed-form bounds
  matrixoracle  independent exact matrix-kernel centralizer oracle
  verify        the case sweep, vcd/gd calculators and report types
  cli           command-line front end
"""

__version__ = "0.1.0"
