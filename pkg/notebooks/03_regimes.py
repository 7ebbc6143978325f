# %% [markdown]
# # Which composition can be trusted?
#
# The diagnostics look only at the pairs ``(x_i, a_ij)`` column by column
# and say whether max-min is exact, whether the adaptive mix is exact, or
# whether every max-t or every S-t composition must undershoot.

# %%
from fuzzyrel import classify_regime, compose_max_t, compose_similarity, MIN
from fuzzyrel.data import TABLE1, X_DOT
from fuzzyrel.io import emit_report

print(emit_report(classify_regime(X_DOT, TABLE1), "text"))

# %% [markdown]
# Saturation everywhere: max-min reproduces the reference.

# %%
x = [1.0, 1.0]
A = [[0.3, 0.0], [0.9, 1.0]]
print(classify_regime(x, A).regime)
print(compose_max_t(x, A, MIN).values, compose_similarity(x, A).values)

# %% [markdown]
# The zero vector against the table.  Pea and strawberry only hold values
# below 1/2, so every max-t composition falls short there.  Banana and melon
# have all-zero minima with an unsaturated row, so every S-t composition
# falls short.  Columns disagree, hence MIXED.

# %%
rep = classify_regime([0.0, 0.0, 0.0], TABLE1)
print([c.value for c in rep.column_regimes], rep.regime.value)
