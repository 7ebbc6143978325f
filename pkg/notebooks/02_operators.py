# %% [markdown]
# # t-norms, t-conorms and a non-associative mix

# %%
import numpy as np

from fuzzyrel import (DRASTIC_PRODUCT, DRASTIC_SUM, LUKASIEWICZ, MAX, PRODUCT, TNORMS,
                      aggregate_tconorm, check_axioms, convex, tconorm_eval, tnorm_eval)

grid = np.linspace(0, 1, 5)
for t in TNORMS:
    print(t.name)
    print(tnorm_eval(t, grid[:, None], grid[None, :]).round(3))

# %% [markdown]
# Drastic operators only care about the identity element: the product is
# zero unless one argument is 1, the sum is one unless one argument is 0.

# %%
print(tnorm_eval(DRASTIC_PRODUCT, 0.9, 0.9), tnorm_eval(DRASTIC_PRODUCT, 1.0, 0.3))
print(tconorm_eval(DRASTIC_SUM, 0.001, 0.003), tconorm_eval(DRASTIC_SUM, 0.0, 0.4))
print(tnorm_eval(LUKASIEWICZ, 0.003, 1.0), tnorm_eval(PRODUCT, 0.004, 0.98))

# %% [markdown]
# n-ary aggregation.  The drastic sum of a list is 1 as soon as two entries
# are nonzero.  The convex mix ``lam * max + (1 - lam) * drastic`` is
# evaluated directly on the whole list, because folding it pairwise depends
# on the order.

# %%
v = [0.3, 0.4, 0.5]
half = convex(0.5)
print(aggregate_tconorm(DRASTIC_SUM, v), aggregate_tconorm(MAX, v))
print("direct:", aggregate_tconorm(half, v))
print("folded:", tconorm_eval(half, tconorm_eval(half, 0.3, 0.4), 0.5))

# %%
for spec in list(TNORMS) + [MAX, DRASTIC_SUM, half]:
    rep = check_axioms(spec, n_samples=500)
    print(f"{spec.name:16s} all ok: {rep.all_ok}")

cx = check_axioms(half).find("associativity", (0.3, 0.4, 0.5))
print(cx.to_dict())
