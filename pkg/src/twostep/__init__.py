"""Equivariant Schubert calculus on two-step flag varieties via puzzles.

Subpackages/modules:

- ``algebra``: exact arithmetic in ``Z[zeta_12]``, sparse integer
  polynomials in y-variables, the delta-linear tower ring, exact division
  by linear forms, and the difference-basis (positivity) decomposition.
- ``labels``: the eight edge labels, the canonical triangle/rhombus piece
  tables, rotation/dualization, two-side completion, table validation.
- ``strings``: 012-strings, Bruhat covers, the recursion oracle for
  structure constants, the Chevalley rule, and the quantum layer.
- ``board``: triangular-lattice geometry, puzzles, boundaries, weights,
  serialization and rendering.
- ``search``: backtracking enumeration of equivariant puzzles, structure
  constants and product expansions.
- ``mutation``: directed gashes, propagation, gash classes, flaws and
  resolutions, the mutation involution, mutation graphs, and the
  left-to-right sliding bijection.
- ``aura``: auras of semi-labeled edges/gashes/flawed puzzles and the
  executable summation identities tying auras to structure constants.
- ``cli``: the ``twostep`` command-line interface.
"""

__version__ = "0.1.0"
