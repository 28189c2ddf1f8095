# %% [markdown]
# # Memory and time factors on generated problems
#
# For each generated instance and each session setting we compare the peak
# node count of HS-Tree with that of RBF-HS (memory factor) and their
# runtimes (time factor).

# %%
import statistics

from hsdiag.harness import rows_to_csv, run_bench, scenario_factors, summarize

rows = run_bench(seeds=range(4), sizes=(12, 30), lds=(2, 6), selectors=("spl",))
print(rows_to_csv(rows[:6]))

# %%
cells = summarize(rows)
mem = [c["memory_factor"] for c in cells]
tim = [c["time_factor"] for c in cells if c["time_factor"]]
print(f"memory factor  median {statistics.median(mem):.2f}  max {max(mem):.2f}")
print(f"time factor    median {statistics.median(tim):.2f}  max {max(tim):.2f}")

# %%
for scenario, (factor, conflicts) in sorted(scenario_factors(rows).items()):
    print(f"{scenario:8s} conflicts={conflicts}  memory factor {factor:.2f}")
