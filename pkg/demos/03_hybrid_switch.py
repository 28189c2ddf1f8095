# %% [markdown]
# # Switching from HS-Tree to RBF-HS
#
# HBF-HS runs HS-Tree until a criterion fires, then hands its open nodes to
# RBF-HS.  Small switch points behave like RBF-HS, large ones like HS-Tree.

# %%
from hsdiag import Dpi, MemoryFraction, NodeCount, hbf_hs

names = [f"ax{i}" for i in range(1, 8)]
dpi = Dpi.from_conflicts(
    names,
    [["ax1", "ax2", "ax5"], ["ax2", "ax4", "ax6"], ["ax1", "ax3", "ax4"],
     ["ax1", "ax5", "ax6", "ax7"]],
    probabilities=[0.26, 0.18, 0.21, 0.41, 0.18, 0.40, 0.18],
)

# %%
D, m = hbf_hs(dpi, "maxprob", 4, NodeCount(10))
snap = m.switch_snapshot
print("switched after", m.switch_point, "generated nodes")
print("diagnoses so far:", [dpi.names(d) for d in snap["D"]])
print("conflicts so far:", [dpi.names(c) for c in snap["C"]])
print("handed over:", [dpi.names(c) for c in snap["children"]])
print("explored first:", dpi.names(snap["first"]))
print("result:", [dpi.names(d) for d in D])

# %%
for crit in (NodeCount(1), NodeCount(5), NodeCount(20), MemoryFraction(0.5, 16)):
    D, m = hbf_hs(dpi, "maxprob", None, crit)
    print(f"{crit!r:36s} switch={m.switch_point}  peak={m.peak_tree_nodes}  "
          f"after switch={m.post_switch_peak}")
