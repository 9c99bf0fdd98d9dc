# %% [markdown]
# # Multivariate Padé approximation
#
# Find (q, p) with q f = p modulo <X^d, Y^d>.  The quotient by <X^d, Y^d> has
# dimension d^2 and the multiplication maps are block shift matrices.

# %%
from syzkit import MonomialOrder, divide, gen_multivar_pade, syzygy_basis
from syzkit.modpoly import ModulePoly
from syzkit.monomials import Monomial

p, n, d = 97, 2, 3
f = {(0, 0): 1, (1, 0): 4, (0, 1): 9, (2, 1): 13, (1, 2): 5}
inst = gen_multivar_pade(p, n, d, [f])
print("M_X =\n", inst.mats[0])
print("M_Y =\n", inst.mats[1])

# %% [markdown]
# The obvious generators f c1 + c2, X^d c_i and Y^d c_i all reduce to zero
# against the computed basis.

# %%
order = MonomialOrder.parse("top:degrevlex")
gb = syzygy_basis(order, inst)
for g in gb:
    print("  ", g.format(order))

gens = [ModulePoly({**{Monomial(e, 0): c for e, c in f.items()}, Monomial.unit(n, 1): 1}, n, 2, p)]
gens += [ModulePoly.from_monomial(Monomial.unit(n, i).mul_var(k, d), 2, p) for i in range(2) for k in range(n)]
print("all generators reduce to zero:", all(not divide(order, g, gb) for g in gens))
