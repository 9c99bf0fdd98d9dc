# %% [markdown]
# # Polynomials that annihilate commuting matrices
#
# Given commuting N_1, ..., N_n, the polynomials q with q(N_1, ..., N_n) = 0
# form an ideal.  For a single matrix its generator is the minimal polynomial.

# %%
import numpy as np

from syzkit import MonomialOrder, PrimeField, gen_matrix_annihilator, syzygy_basis

K = PrimeField(101)
lex = MonomialOrder.parse("top:lex")

J = np.array([[2, 1, 0], [0, 2, 0], [0, 0, 5]])
gb = syzygy_basis(lex, gen_matrix_annihilator(101, [J]))
print("minimal polynomial of J:", gb.elements[0].format(lex))

# %% [markdown]
# Two commuting matrices: N_2 is a polynomial in N_1, so the ideal contains
# an element expressing X2 in terms of X1.

# %%
rng = np.random.default_rng(0)
N1 = K.random(4, 4, rng)
N2 = (K.matmul(N1, N1) + 3 * np.eye(4, dtype=np.int64)) % 101
gb = syzygy_basis(lex, gen_matrix_annihilator(101, [N1, N2]))
for g in gb:
    print("  ", g.format(lex))
