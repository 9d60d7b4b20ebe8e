# ## The Landau-Ginzburg phase of the bicubic X(3,3)

from toricphases import catalog
from toricphases.ktheory import normal_form, relation_ideal
from toricphases.laurent import LaurentElement
from toricphases.relations import phase_relations, render_relation
from toricphases.secondary import enumerate_phases, landau_ginzburg_phases

m = catalog.model("bicubic")
phases = enumerate_phases(m)
lg = phases[landau_ginzburg_phases(phases)[0]]

for r in phase_relations(m, lg):
    print(render_relation(r))

I = relation_ideal(m, lg)
I.generators

# t^6 reduces to 2 t^3 - 1, the class of two copies of the t^3 twist against one unshifted copy

normal_form(LaurentElement.t((6,)), I)

# ### Quintic: the singleton relation

q = catalog.model("X(5)")
(r,) = phase_relations(q, enumerate_phases(q)[1])
print(render_relation(r))
