# ## Koszul factorizations and higher homotopies

from toricphases import catalog
from toricphases.mf import (
    FreeChain,
    assemble_mf,
    assembled_potential,
    higher_homotopies,
    k_class,
    koszul_mf,
    superpotential,
    tensor_mf,
    verify_mf,
)
from toricphases.poly import PolyMatrix, PolyRing

# ### Fermat sections

m = catalog.model("X(3,3)")
ring, pairs, W = superpotential(m, catalog.fermat_sections(m))
print(W)

mf = koszul_mf(pairs)
print(mf.f.tolist())
print(mf.g.tolist())
verify_mf(mf, W).to_dict()

# The tensor product of the two rank-one factors is the same factorization

A, B = koszul_mf(pairs[:1]), koszul_mf(pairs[1:])
T = tensor_mf(A, B)
verify_mf(T, W).ok, k_class(T) == k_class(A) * k_class(B), k_class(T).normalized()

# ### A perturbed entry is located by the report

bad = mf.with_entry("g", 0, 0, mf.g[0, 0] + 1)
for failure in verify_mf(bad, W).failures[:3]:
    print(failure)

# ### Higher homotopies on the Koszul resolution of Q[x,y]/(x,y)

R = PolyRing.make(["x", "y"], [[1], [1]])
x, y = R.gens()
chain = FreeChain(R, (((0,),), ((1,), (1,)), ((2,),)),
                  (PolyMatrix(R, [[x, y]], 2), PolyMatrix(R, [[-y], [x]], 1)))
family = higher_homotopies(chain, [x**2 + y**2], degree_bound=1)
family.residuals_zero(), family.nonzero()

folded = assemble_mf(family)
print(folded.f.tolist(), folded.g.tolist())
verify_mf(folded, assembled_potential(family, folded)).ok
