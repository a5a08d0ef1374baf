# %% [markdown]
# # Why "one or two" cannot be improved
#
# Consecutive-layer joins give graphs that meet every hypothesis yet skip cycle
# lengths. The oracle here is plain backtracking, independent of the extension
# code.

# %%
from l1cycles import cycle_spectrum, nonpancyclic_a, nonpancyclic_b, path_vertex_counts, to_graph6

for m in (2, 3, 4):
    g = nonpancyclic_a(m)
    lengths = sorted(cycle_spectrum(g).lengths)
    missing = sorted(set(range(3, g.n + 1)) - set(lengths))
    print(f"nonpancyclic_a({m}) {to_graph6(g):>14}  n={g.n:2d}  missing lengths {missing}")

# %%
g = nonpancyclic_b(2)
print("nonpancyclic_b(2) spectrum:", sorted(cycle_spectrum(g).lengths))

# %% [markdown]
# Paths tell the same story. Vertex 0 is an end vertex and 1 one of its
# neighbours; they are adjacent with no common neighbour, yet no 0-1 path has
# 9 vertices. The two end vertices themselves are not a witness: 0 and 9 are
# joined by paths of every length from 6 to 10 vertices.

# %%
layered10 = nonpancyclic_a(2)
print("0-1 path sizes:", sorted(path_vertex_counts(layered10, 0, 1)))
print("0-9 path sizes:", sorted(path_vertex_counts(layered10, 0, 9)))
print("nonpancyclic_b(2), 0-1 path sizes:", sorted(path_vertex_counts(nonpancyclic_b(2), 0, 1)))
