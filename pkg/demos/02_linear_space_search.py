# %% [markdown]
# # Linear-space best-first search
#
# Seven components, four known minimal conflicts.  We ask for the four most
# probable diagnoses and watch how the recursive search revisits subtrees it
# had to forget.

# %%
from hsdiag import Dpi, hs_tree, rbf_hs

names = [f"ax{i}" for i in range(1, 8)]
dpi = Dpi.from_conflicts(
    names,
    [["ax1", "ax2", "ax5"], ["ax2", "ax4", "ax6"], ["ax1", "ax3", "ax4"],
     ["ax1", "ax5", "ax6", "ax7"]],
    probabilities=[0.26, 0.18, 0.21, 0.41, 0.18, 0.40, 0.18],
)

# %%
D, m = rbf_hs(dpi, "maxprob", ld=4, record_trace=True, check_invariants=True)
print("best four:", [dpi.names(d) for d in D])

# labelling order; note {ax2, ax4} comes up twice
for step, node in enumerate(m.trace, 1):
    print(f"{step:2d}", dpi.names(node) or "{}")

# %%
# memory: HS-Tree keeps its whole open queue, RBF-HS only the current path
_, m_hs = hs_tree(dpi, "maxprob", ld=None)
_, m_rb = rbf_hs(dpi, "maxprob", ld=None)
print("peak tree nodes  HS-Tree:", m_hs.peak_tree_nodes, " RBF-HS:", m_rb.peak_tree_nodes)
print("labelled nodes   HS-Tree:", m_hs.nodes_explored, " RBF-HS:", m_rb.nodes_explored)
