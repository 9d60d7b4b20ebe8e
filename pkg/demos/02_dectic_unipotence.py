# ## Relations in the dectic X(10) and maximal unipotence

from toricphases import catalog
from toricphases.ktheory import ideal_member, quotient_rank, relation_ideal, relation_to_ktheory
from toricphases.laurent import LaurentElement
from toricphases.relations import phase_relations, refined_geometric_relations, render_relation
from toricphases.secondary import enumerate_phases

m = catalog.model("X(10)")
geo, lg = enumerate_phases(m)

# ### The relation coming from the primitive collection

for r in phase_relations(m, geo):
    print(render_relation(r))

# ### Shorter relations on the threefold
# Four generic sections already have no common zero, so every 4-subset gives a relation.

refined = refined_geometric_relations(m, geo)
for r in refined:
    print(render_relation(r), "->", relation_to_ktheory(r))

# ### K-theory

I = relation_ideal(m, geo)
t = LaurentElement.t((1,))
for b in (3, 4):
    member, cert = ideal_member((t - 1) ** b, I)
    print(f"(t-1)^{b} in I:", member)

cert.cofactors

quotient_rank(I)

# ### Every catalog model

for model in catalog.all_models():
    g = enumerate_phases(model)[0]
    I = relation_ideal(model, g)
    print(model.label, ideal_member((t - 1) ** 4, I)[0], ideal_member((t - 1) ** 3, I)[0])
