"""Exact combinatorics and cluster algebra of BCFW tiles of the m=4 amplituhedron.

All arithmetic is exact (ints and fractions.Fraction). The submodules follow the
pipeline: chord diagrams and recipes (chords), plabic graphs and cells (plabic),
matrices and twistors (linalg), product promotion (promote), cluster variables and
tile seeds (cluster), facets and condensations (facets), canonical forms and the
spurion tile (geometry), and the command line front end (cli).
"""

__version__ = "0.1.0"
