# %% [markdown]
# # Files and the command line

# %%
import tempfile
from pathlib import Path

from fuzzyrel.cli import main
from fuzzyrel.io import load_instance

tmp = Path(tempfile.mkdtemp())
(tmp / "table1.csv").write_text(
    ",P,S,B,M\n"
    "Long,0,0.3,0.98,0.7\n"
    "Heavy,0.001,0.01,0.1,0.99\n"
    "Voluminous,0.004,0.042,0.3,1\n"
)
(tmp / "x.txt").write_text("L,0.004\nW,0.002\nV,0.003\n")

inst = load_instance(tmp / "table1.csv", vector_path=tmp / "x.txt")
print(inst.A.col_labels, inst.x.values)

# %%
main(["compose", "--matrix", str(tmp / "table1.csv"), "--input", str(tmp / "x.txt"),
      "--tnorm", "min", "--sconorm", "convex", "--lambda", "auto", "--oracle"])

# %%
main(["diagnose", "--matrix", str(tmp / "table1.csv"), "--input", str(tmp / "x.txt")])

# %% [markdown]
# Exit codes: 0 ok, 1 usage or parse error, 2 out-of-range or shape error,
# 3 verification failure.

# %%
(tmp / "bad.csv").write_text("0.5,1.5\n")
print(main(["compose", "--matrix", str(tmp / "bad.csv"), "--input", str(tmp / "x.txt"),
            "--tnorm", "min"]))
print(main(["verify", "--trials", "200"]))
