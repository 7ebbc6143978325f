# %% [markdown]
# # Pea or melon?
#
# Three properties (long, heavy, voluminous) describe four objects.  A
# measured object that is small in every respect should look most like a
# pea.  We compose its membership vector with the table under several
# operators and compare against the similarity reference.

# %%
import numpy as np

from fuzzyrel import (TNORMS, compare_to_oracle, compose_adaptive, compose_max_t,
                      compose_similarity, lambda_profile, rank_alternatives)
from fuzzyrel.data import TABLE1, X_DDOT, X_DOT

print(TABLE1.col_labels)
print(TABLE1.values)

# %% [markdown]
# Max-t compositions give the pea the *lowest* score: every small entry of
# the pea column is dominated by the melon column.

# %%
ref = compose_similarity(X_DOT, TABLE1)
for t in TNORMS:
    b = compose_max_t(X_DOT, TABLE1, t)
    cmp = compare_to_oracle(b, ref)
    print(f"{t.name:16s} {np.round(b.values, 6)}  argmax agrees: {cmp.argmax_agrees}")

print("similarity      ", ref.values, rank_alternatives(ref).ordered_labels)

# %% [markdown]
# The adaptive composition mixes max and drastic sum of the pairwise minima
# per column.  Each column here has at least two nonzero minima, so it lands
# on the reference exactly (up to round-off).

# %%
b, prof = compose_adaptive(X_DOT, TABLE1, return_profile=True)
print(b.values)
print("weight on drastic sum:", np.round(prof.lam, 6))
print("column P weight == 0.996/0.997:", abs(prof.lam[0] - 0.996 / 0.997) < 1e-12)

# %% [markdown]
# A second object.  Its banana score is 0.901: the best row is heavy,
# 1 - |0.001 - 0.1|.  A value of 0.974 circulates for this entry, but it
# does not follow from the table.

# %%
print(compose_similarity(X_DDOT, TABLE1).values)
print(compose_adaptive(X_DDOT, TABLE1).values)
print(lambda_profile(X_DDOT, TABLE1).degenerate)
