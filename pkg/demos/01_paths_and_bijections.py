"""
Dyck paths and bijections between pattern classes
==================================================

Each class of permutations avoiding one pattern of length 3 has Catalan
many members.  The bijections below either walk through a Dyck path or
act on the permutation directly.
"""

# %%
from permbij import apply, class_members, invert, parse_perm
from permbij import paths
from permbij.perm import PATTERNS, catalan

for t in PATTERNS:
    print(t, [len(class_members(n, t)) for n in range(9)])
print("catalan", [catalan(n) for n in range(9)])

# %%
# The standard coding of a 132-avoider: split at the largest letter and recurse.
p = parse_perm("7564213")
path = paths.standard_f(p)
print(path)
print(paths.ascii_path(path))
assert paths.standard_f_inv(path) == p

# %%
# Two-row insertion turns a 321-avoider into a pair of tableaux, then into a path.
t = paths.rsk_two_row(parse_perm("3156247"))
print(t)
print(paths.tableaux_to_path(t))

# %%
# Matching the two codings gives a map from 321- to 132-avoiders.
print(apply("knuth", parse_perm("3156247")))
print(invert("knuth", parse_perm("7564213")))

# %%
# Every registered bijection, with its domain and codomain pattern.
from permbij import BIJECTIONS

sample = {"123": "536142", "132": "6743125", "231": "5213476", "321": "2513476"}
for key, b in BIJECTIONS.items():
    q = parse_perm(sample[b.domain])
    print(f"{key:18} {b.domain}->{b.codomain}  {q} -> {apply(key, q)}")
