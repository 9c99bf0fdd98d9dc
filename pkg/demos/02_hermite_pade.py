# %% [markdown]
# # Simultaneous approximants of power series
#
# For series f_1, ..., f_m truncated at x^D, the vectors (p_1, ..., p_m) with
# sum p_i f_i = 0 mod x^D form a free module of rank m.  With n = 1 the input
# matrix is the upper shift and F holds the coefficient rows.

# %%
import numpy as np

from syzkit import MonomialOrder, gen_hermite_pade, syzygy_basis

p, D = 97, 8
rng = np.random.default_rng(5)
series = [[1], [int(c) for c in rng.integers(0, p, D)], [int(c) for c in rng.integers(0, p, D)]]
inst = gen_hermite_pade(p, D, series)

# %% [markdown]
# A term-over-position order with all shifts zero picks the basis with the
# smallest degrees; position-over-term gives a Hermite-like form.

# %%
for spec in ("top:lex", "pot:lex"):
    order = MonomialOrder.parse(spec)
    gb = syzygy_basis(order, inst)
    print(spec)
    for g in gb:
        lead = g.leading_monomial(order)
        print(f"  lead {lead}, degrees per component {[max((t.exps[0] for t in g.terms if t.comp == i), default=-1) for i in range(3)]}")

# %% [markdown]
# Check one approximant by multiplying out the truncated products.

# %%
g = syzygy_basis(MonomialOrder.parse("top:lex"), inst).elements[0]
total = np.zeros(D, dtype=np.int64)
for t, c in g.terms.items():
    shifted = np.zeros(D, dtype=np.int64)
    coeffs = np.array(series[t.comp] + [0] * D)[: D - t.exps[0]]
    shifted[t.exps[0]:] = coeffs
    total = (total + c * shifted) % p
print("sum p_i f_i mod x^D =", total.tolist())
