# %% [markdown]
# # Diagnosing a small faulty knowledge base
#
# Five axioms over the atoms A, B, C.  Together they imply "not A", and we
# know that conclusion must *not* follow.  Which axioms should we give up?

# %%
from hsdiag import CostModel, Dpi, find_min_conflict, hbf_hs, hs_tree, rbf_hs
from hsdiag.harness import brute_force_min_conflicts

kb = Dpi.from_cnf(
    ["A", "B", "C"],
    {
        "ax1": [["-A", "-B"]],      # A -> not B
        "ax2": [["-A", "B"]],       # A -> B
        "ax3": [["-A", "-C"]],      # A -> not C
        "ax4": [["-B", "C"]],       # B -> C
        "ax5": [["-A", "B", "C"]],  # A -> B or C
    },
    negative=[[["-A"]]],            # "not A" must not be entailed
)

# %%
# one minimal conflict, found by QuickXplain over the DPLL reasoner
print("a minimal conflict:", kb.names(find_min_conflict(kb)))

# all of them, by exhaustive enumeration (fine for five axioms)
for c in brute_force_min_conflicts(kb):
    print("  conflict", kb.names(c))

# %%
# every search returns the same minimal diagnoses; MinCard prefers small ones
for search in (hs_tree, rbf_hs, hbf_hs):
    D, metrics = search(kb, CostModel.min_card())
    print(f"{search.__name__:8s}", [kb.names(d) for d in D],
          "conflict calls:", metrics.conflicts_computed)

# %%
# with fault probabilities the order changes to most probable first
kb_pr = Dpi.from_cnf(kb.variables, list(zip(kb.components, [
    [["-A", "-B"]], [["-A", "B"]], [["-A", "-C"]], [["-B", "C"]], [["-A", "B", "C"]]])),
    negative=[[["-A"]]], probabilities=[0.1, 0.05, 0.1, 0.05, 0.15])
D, _ = rbf_hs(kb_pr)
print([kb_pr.names(d) for d in D])
