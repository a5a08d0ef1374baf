# %% [markdown]
# # Checking the hypotheses
#
# A graph qualifies for the extension results when it is connected, has at
# least three vertices, is an L_1-graph and every pair of vertices at distance
# two shares at least two neighbours. `satisfies_hypotheses` reports each
# ingredient separately.

# %%
from l1cycles import (
    complete_bipartite,
    cycle_graph,
    is_l_graph,
    l_deficit,
    nonpancyclic_a,
    satisfies_hypotheses,
)

# %% [markdown]
# The deficit of an induced path u-w-v is |N(u) | N(v) | N(w)| - d(u) - d(v).
# On C_5 every such path has deficit 1, so C_5 is L_1 but not L_0, and its
# distance-2 pairs share only one neighbour.

# %%
c5 = cycle_graph(5)
print("deficit of 0-1-2 in C5:", l_deficit(c5, 0, 2, 1))
print("C5 is L_1:", is_l_graph(c5, 1), " L_0:", is_l_graph(c5, 0))
print(satisfies_hypotheses(c5).to_dict())

# %% [markdown]
# K_{2,3} passes but sits in the exception family: it is sandwiched between
# K_{2,3} and K_2 v co-K_3. The report carries the witness.

# %%
rep = satisfies_hypotheses(complete_bipartite(2, 3))
print("ok:", rep.ok, " 1-tough:", rep.one_tough)
print("witness:", rep.family_k.to_dict())

# %%
layered10 = nonpancyclic_a(2)
rep = satisfies_hypotheses(layered10)
print(f"n={rep.n} ok={rep.ok} claw_free={rep.claw_free} family_k={rep.family_k}")
