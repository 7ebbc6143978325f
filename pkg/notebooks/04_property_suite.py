# %% [markdown]
# # Randomized verification
#
# Every property is checked on instances drawn from a profile built to meet
# its precondition.  Degrees sit on the grid k / 2**30, so the inequalities
# are compared exactly.

# %%
import json
import time

from fuzzyrel.harness import GeneratorProfile, Profile, SuiteConfig, run_suite, sample_instance

x, A = sample_instance(GeneratorProfile(Profile.DENSE, n=4, m=3, seed=7))
print(x.values)
print(A.values)

# %%
start = time.perf_counter()
report = run_suite(SuiteConfig(trials=2000))
print(f"{time.perf_counter() - start:.2f}s")
print(report.to_text())

# %% [markdown]
# Reports exclude wall-clock time, so the same configuration always gives
# the same bytes.

# %%
again = run_suite(SuiteConfig(trials=2000))
a = json.dumps(report.to_dict(), sort_keys=True)
b = json.dumps(again.to_dict(), sort_keys=True)
print("identical:", a == b)

# %% [markdown]
# A failure keeps its seed and instance.  A negative tolerance forces one.

# %%
from fuzzyrel.harness import replay_failure

cfg = SuiteConfig(trials=3, tol=-1.0)
rec = run_suite(cfg).property("theorem2_exact").first_counterexample
print(rec["seed"], rec["column"], rec["lhs"], rec["rhs"])
print(replay_failure(rec, cfg))
