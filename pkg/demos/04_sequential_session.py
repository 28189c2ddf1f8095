# %% [markdown]
# # Sequential diagnosis with component probes
#
# We hide a fault set, then let the session ask "is this component faulty?"
# until only one minimal diagnosis is left.

# %%
from hsdiag import Mode, run_session
from hsdiag.harness import GeneratorParams, brute_force_min_diagnoses, generate_random_dpi

dpi = generate_random_dpi(GeneratorParams(seed=5, size=12, conflict_count=5,
                                          conflict_size=(2, 4)))
candidates = brute_force_min_diagnoses(dpi)
print(len(candidates), "minimal diagnoses")
hidden = dpi.names(candidates[len(candidates) // 2])
print("hidden fault set:", hidden)

# %%
# split-in-half versus information gain
for selector in ("spl", "ent"):
    print(f"--- {selector} ---")
    res = run_session(dpi, hidden, ld=6, selector=selector, algorithm="rbfhs",
                      mode=Mode.MAX_PROB, log=print)
    print(res.iterations, "probes")

# %%
# a scripted oracle instead of a hidden answer
res = run_session(dpi, None, ld=6, oracle=lambda name: name in hidden)
print(res.final_diagnosis)
