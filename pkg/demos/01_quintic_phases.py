# ## The quintic threefold and its two phases

import toricphases as tp
from toricphases.secondary import enumerate_phases, wall_data

quintic = tp.catalog.model("quintic")
quintic.charges, quintic.dimX

# ### Phases
# Each phase is a chamber of the charge arrangement, kept with an interior point.

phases = enumerate_phases(quintic)
for p in phases:
    print(p.id, p.eta, [[quintic.names[i] for i in sorted(s)] for s in p.minimal_exceptional_sets])

# The large-volume phase removes {x1 = ... = x5 = 0}; the other one removes {p = 0}.

geo, lg = phases
print(geo.stanley_reisner.render(quintic.names))
print(lg.stanley_reisner.render(quintic.names))

# ### The wall between them

wall = wall_data(quintic, geo, lg)
wall.T, wall.sigma, wall.window(0)

# ### A two-parameter example
# O(2,2) over P1 x P1 has three phases.

toy = tp.build_from_charges([(1, 0), (1, 0), (0, 1), (0, 1)], [(2, 2)])
for p in enumerate_phases(toy):
    print(p.id, p.eta, sorted(sorted(s) for s in p.minimal_exceptional_sets), p.is_geometric)
