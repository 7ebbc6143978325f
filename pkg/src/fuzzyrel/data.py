"""Built-in pea/strawberry/banana/melon instance.

Rows are the properties long, heavy, voluminous; columns the objects pea (P),
strawberry (S), banana (B) and melon (M).  ``X_DOT`` and ``X_DDOT`` are two
measured objects that a person would call a pea.
"""
from .composition import FuzzyRelation, FuzzyVector

TABLE1 = FuzzyRelation(
    [[0.0, 0.3, 0.98, 0.7],
     [0.001, 0.01, 0.1, 0.99],
     [0.004, 0.042, 0.3, 1.0]],
    row_labels=("Long", "Heavy", "Voluminous"),
    col_labels=("P", "S", "B", "M"),
)

X_DOT = FuzzyVector([0.004, 0.002, 0.003], labels=("L", "W", "V"))
X_DDOT = FuzzyVector([0.0, 0.001, 0.004], labels=("L", "W", "V"))

# A previously published similarity vector for X_DDOT lists 0.974 for
# column B; direct evaluation gives max(0.02, 0.901, 0.704) = 0.901.
X_DDOT_PUBLISHED_B = 0.974
