# %% [markdown]
# # Vanishing ideal of points, then a change of order
#
# Three points in GF(7)^2.  The multiplication-by-X and multiplication-by-Y
# maps on functions over the points are diagonal, and the constant function 1
# is the all-ones vector.  Polynomials that vanish on the points are exactly
# the syzygies of that data.

# %%
from syzkit import MonomialOrder, change_order, gen_points_ideal, monomial_basis, multiplication_matrices, syzygy_basis

points = [(0, 0), (1, 0), (0, 1)]
inst = gen_points_ideal(7, points)
print("M_X =\n", inst.mats[0])
print("M_Y =\n", inst.mats[1])

# %% [markdown]
# ## Gröbner basis for degree reverse lexicographic order

# %%
drl = MonomialOrder.parse("top:degrevlex")
print("staircase:", [str(b) for b in monomial_basis(drl, inst).monbas])
gb = syzygy_basis(drl, inst)
for g in gb:
    print("  ", g.format(drl))

# %% [markdown]
# ## Back to matrices
#
# The reduced basis determines the quotient, so the multiplication matrices
# can be rebuilt from it alone.  They act on the staircase (1, Y, X).

# %%
res = multiplication_matrices(drl, gb)
for k, M in enumerate(res.mats, start=1):
    print(f"M{k} on the staircase:\n{M}")

# %% [markdown]
# ## Lexicographic basis through the matrices

# %%
lex = MonomialOrder.parse("top:lex")
for g in change_order(drl, gb, lex):
    print("  ", g.format(lex))
