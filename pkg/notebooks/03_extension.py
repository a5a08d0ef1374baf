# %% [markdown]
# # Extending cycles and paths
#
# `extend_cycle` returns a certified longer cycle containing the old one,
# together with a trace of the anchor vertex and the pattern that fired.

# %%
from l1cycles import (
    VertexSequence,
    build_hamiltonian,
    build_spanning_path,
    complete_bipartite,
    cycle_through_set,
    extend_cycle,
    find_cycle,
    nonpancyclic_a,
    nonpancyclic_b,
    to_dot,
)

layered10 = nonpancyclic_a(2)
c8 = find_cycle(layered10, 8)
res = extend_cycle(layered10, c8)
print("old:", list(c8.vertices))
print("new:", list(res.new_sequence.vertices), "ell =", res.ell, "inserted", sorted(res.inserted))
print("trace:", res.trace.to_dict())
assert not res.problems(layered10)

# %% [markdown]
# Iterating from a short seed cycle gives a Hamilton cycle, with every
# intermediate cycle kept in the history.

# %%
ham = build_hamiltonian(layered10, x=0)
for step in ham.history:
    print(len(step), list(step.vertices))

# %% [markdown]
# In the exception family the chain stops one vertex short.

# %%
k23 = complete_bipartite(2, 3)
stuck = build_hamiltonian(k23)
print(stuck.outcome, list(stuck.new_sequence.vertices), stuck.witness.to_dict())

# %%
path = build_spanning_path(layered10, 0, 9)
print("spanning 0-9 path:", list(path.new_sequence.vertices))

# %%
g = nonpancyclic_b(2)
c = cycle_through_set(g, {0, 7, 13})
print("cycle through {0, 7, 13}:", list(c.vertices))
print(to_dot(g, c))
