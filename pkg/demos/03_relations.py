"""
Relations between the bijections
================================

Composing a bijection with reverse, complement and inverse on either
side gives many maps between pattern classes.  Some coincide.
"""

# %%
from permbij.analysis import Composite, check_identities, symmetries, verify_relations
from permbij.perm import parse_perm

c = Composite("i", "simion-schmidt", 1, "r")
print(c.name, c.domain, "->", c.codomain, c(parse_perm("2513476")))

# %%
for left, right, ok in check_identities(max_len=7):
    print(ok, left, "=", right)

# %%
# Self-symmetries: u∘B∘v = B for trivial words u, v.
for key in ["knuth", "phi", "reifegerste", "simion-schmidt"]:
    print(key, symmetries(key, max_len=7))

# %%
# The full scan of composites, grouped by extensional equality.
report = verify_relations(max_len=7)
print(report.classes, "classes;", report.predicted, "predicted from the identities alone")
print("merges across families:", report.cross_family_merges)
print("merges inside a family:", len(report.self_symmetry_merges))
