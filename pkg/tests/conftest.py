"""Shared parameter grids for the test suite."""

B_GRID = [(2.0, 1.0), (2.0, 2.0), (4.0, 1.0), (1.0, 3.0)]
BBAR_GRID = [(1.0, 0.0), (2.0, 1.0), (1.0, 2.0)]
H_GRID = [(1.0, 0.5, -0.25), (1.0, 2.0, 0.0), (0.5, 1.0, 0.25)]
Q_GRID = [0.7, 1.3]

BQ_GRID = [(a, b, q) for (a, b) in B_GRID for q in Q_GRID]
BBARQ_GRID = [(s, t, q) for (s, t) in BBAR_GRID for q in Q_GRID]

# graded R-matrix checks need an integer grade shift beta/alpha
BQ_INTEGER_GRID = [(a, b, q) for (a, b, q) in BQ_GRID
                   if (b / a) == int(b / a)]

FULL_GRID = ([("B", p) for p in B_GRID] + [("Bbar", p) for p in BBAR_GRID]
             + [("Bq", p) for p in BQ_GRID]
             + [("Bbarq", p) for p in BBARQ_GRID]
             + [("H", p) for p in H_GRID])
