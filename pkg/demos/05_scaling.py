# %% [markdown]
# # Timing on growing random instances
#
# Random commuting pairs over GF(65521) with one vector; the dimension D
# doubles each step.  The work is dominated by dense matrix products.

# %%
import time

from syzkit import MonomialOrder, gen_random_commuting, syzygy_basis

for spec in ("top:lex", "top:degrevlex"):
    order = MonomialOrder.parse(spec)
    for D in (16, 32, 64, 128, 256):
        inst = gen_random_commuting(65521, 2, D, seed=D, kind="dense")
        start = time.perf_counter()
        gb = syzygy_basis(order, inst)
        print(f"{spec:15s} D={D:4d}  {len(gb):3d} elements  {time.perf_counter() - start:6.2f}s")
