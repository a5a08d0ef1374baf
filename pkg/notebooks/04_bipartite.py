# %% [markdown]
# # Bipartite L_1-graphs
#
# Beyond paths and even cycles, a connected bipartite L_1-graph is K_{n,n}
# or K_{n,n} minus a vertex, an edge or a perfect matching. The classifier
# returns a witness that can be checked independently of the tag.

# %%
from collections import Counter

from l1cycles import classify_bipartite_l1, is_l_graph, knn_variant, validate_bipartite_class
from l1cycles.generators import iter_connected_bipartite

for variant in ("full", "minus_vertex", "minus_edge", "minus_perfect_matching"):
    g = knn_variant(4, variant)
    cls = classify_bipartite_l1(g)
    print(f"{variant:24} -> {cls.tag} (param {cls.param})  valid={not validate_bipartite_class(g, cls)}")

# %%
tags = Counter()
for g in iter_connected_bipartite(7):
    if is_l_graph(g, 1):
        tags[classify_bipartite_l1(g).tag] += 1
print(dict(tags))
