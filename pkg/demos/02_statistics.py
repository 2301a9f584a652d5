"""
Statistics, the catalog and equidistribution
=============================================

A statistic is a base function such as ``des`` composed with a word in
reverse, complement and inverse, optionally shifted to ``n - s`` or
``n + 1 - s``.  The catalog groups names that agree as functions.
"""

# %%
import numpy as np

from permbij import build_catalog, evaluate, parse_perm

p = parse_perm("536142")
for name in ["des", "peak", "peak.r", "valley.c", "lmin", "head.ir", "m-ldr.i"]:
    print(f"{name:10} {evaluate(name, p)}")

# %%
catalog = build_catalog(7)
print(len(catalog), "classes of statistics on lengths up to 7")
sizes = np.array([len(m) for m in catalog.partition()])
print("class sizes:", np.bincount(sizes).tolist())
print([m for m in catalog.partition() if "peak" in m][0])

# %%
# The four left/right minima/maxima of a 132-avoider are linearly dependent.
from permbij.analysis import rank_over_class

rank, cert = rank_over_class(["lmin", "lmax", "n-des", "head"], "132", 7)
print(rank, cert)

# %%
# A bijection carries a statistic to another when stat1(p) = stat2(B(p)) for every p.
from permbij.analysis import preserved_pairs

pairs = preserved_pairs("simion-schmidt", catalog, max_len=6)
print(len(pairs), "preserved pairs of catalog classes")
print(sorted(f"{x.left.name}->{x.right.name}" for x in pairs)[:12])

# %%
# A listed set of pairs is checked for pointwise preservation, full rank on each
# side, and maximality: no further preserved pair is independent of the list
# together with n and the constant 1.  Maximality needs length 7 here, since
# Knuth's bijection happens to preserve the cycle count up to length 6.
from permbij.analysis import verify_result_set
from permbij.tables import EQUIDISTRIBUTION_ROWS

row = EQUIDISTRIBUTION_ROWS["knuth"]
for n in (6, 7):
    r = verify_result_set("knuth", row.pairs, max_len=n, preserve_len=n, catalog=catalog)
    print(n, r.passed, r.witnesses[:1])
