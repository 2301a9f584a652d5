import itertools

import pytest
from hypothesis import given

from conftest import P, perms
from permbij.perm import components, inverse
from permbij.stats import (
    BASE_STATS,
    StatDescriptor,
    UnknownStatistic,
    all_descriptors,
    build_catalog,
    catalog_lookup,
    eval_base,
    eval_derived,
    evaluate,
    parse_name,
    value_matrix,
)


# brute-force oracles written straight from the definitions


def zeil_oracle(p):
    n = len(p)
    best = 0
    for d in range(1, n + 1):
        target = list(range(n, n - d, -1))
        it = iter(p)
        if all(any(x == t for x in it) for t in target):
            best = d
    return best


def rank_oracle(p):
    return max(k for k in range(len(p) + 1) if all(p[i] > k for i in range(k)))


def longest_oracle(p, increasing):
    for size in range(len(p), 0, -1):
        for sub in itertools.combinations(p, size):
            pairs = zip(sub, sub[1:])
            if all((a < b) if increasing else (a > b) for a, b in pairs):
                return size
    return 0


def cycles_oracle(p):
    left = set(range(1, len(p) + 1))
    count = 0
    while left:
        x = left.pop()
        count += 1
        y = p[x - 1]
        while y != x:
            left.remove(y)
            y = p[y - 1]
    return count


SMALL = [tuple(q) for n in range(7) for q in itertools.permutations(range(1, n + 1))]


def test_zeil_matches_subsequence_search():
    assert all(eval_base("zeil", p) == zeil_oracle(p) for p in SMALL)


def test_rank_matches_maximisation():
    assert all(eval_base("rank", p) == rank_oracle(p) for p in SMALL)


def test_lis_lds_match_subsequence_search():
    for p in SMALL:
        assert eval_base("lis", p) == longest_oracle(p, True)
        assert eval_base("lds", p) == longest_oracle(p, False)


def test_cyc_counts_cycles():
    assert all(eval_base("cyc", p) == cycles_oracle(p) for p in SMALL)


@pytest.mark.parametrize(
    "stat, p, value",
    [
        ("comp", "213645", 3),
        ("lmin", "67324158", 4),
        ("exc", "415263", 3),
        ("head", "536142", 5),
        ("slmax", "3142", 2),
        ("slmax", "4123", 4),
        ("slmax", "2143", 2),
        ("rank", "3412", 2),
    ],
)
def test_base_examples(stat, p, value):
    assert eval_base(stat, P(p)) == value


@pytest.mark.parametrize(
    "descriptor, p, value",
    [
        (StatDescriptor("asc", "r"), "21", 1),
        (StatDescriptor("des", "", "n"), "132", 2),
        (StatDescriptor("ldr", "", "m"), "7564213", 6),
    ],
)
def test_derived_examples(descriptor, p, value):
    assert eval_derived(descriptor, P(p)) == value


def test_empty_permutation_conventions():
    for d in all_descriptors():
        expected = {"": 0, "n": 0, "m": 1}[d.modifier]
        assert d(()) == expected, d.name


@given(perms(max_size=8))
def test_derived_statistics_from_the_definitions_table(p):
    n = len(p)
    assert evaluate("des", p) == evaluate("asc.r", p)
    assert evaluate("rdr", p) == evaluate("lir.r", p)
    assert evaluate("rir", p) == evaluate("ldr.r", p)
    assert evaluate("zeil", p) == evaluate("rdr.i", p)
    assert evaluate("lir.i", p) == evaluate("zeil.c", p)
    if n:
        assert evaluate("head.i", p) == p.index(1) + 1
        assert evaluate("last.i", p) == p.index(n) + 1
    pos = {a: i for i, a in enumerate(p)}
    assert evaluate("peak.i", p) == sum(pos[a] > pos[a - 1] and pos[a] > pos[a + 1] for a in range(2, n))
    assert evaluate("valley.i", p) == sum(pos[a] < pos[a - 1] and pos[a] < pos[a + 1] for a in range(2, n))
    assert evaluate("comp", p) == len(components(p))


@given(perms(max_size=8))
def test_peak_equals_reversed_peak_and_complemented_valley(p):
    assert evaluate("peak", p) == evaluate("peak.r", p) == evaluate("valley.c", p)


def test_word_applies_before_the_base_statistic():
    p = P("2431")
    assert evaluate("head.i", p) == eval_base("head", inverse(p))


def test_descriptor_count():
    assert len(all_descriptors()) == 23 * 8 * 3 == 552
    assert len(set(all_descriptors())) == 552


@pytest.mark.parametrize(
    "name, expected",
    [
        ("lmin", StatDescriptor("lmin")),
        ("slmax.rci", StatDescriptor("slmax", "rci")),
        ("m-ldr", StatDescriptor("ldr", "", "m")),
        ("head.ir", StatDescriptor("head", "ci")),
    ],
)
def test_parse_name(name, expected):
    assert parse_name(name) == expected


def test_unknown_statistic_suggests_names():
    with pytest.raises(UnknownStatistic, match="did you mean"):
        parse_name("lmn")
    with pytest.raises(UnknownStatistic):
        parse_name("head.x")


def test_catalog_aliases(catalog):
    assert catalog.lookup("asc.r") == catalog.lookup("des")
    assert catalog.lookup("peak.r") == catalog.lookup("peak") == catalog.lookup("valley.c")
    assert catalog_lookup("asc.r").name == "des"


def test_catalog_partitions_the_descriptors(catalog):
    members = [m for group in catalog.partition() for m in group]
    assert len(members) == 552 == len(set(members))


def test_catalog_representatives_are_distinct(catalog):
    from permbij.stats import dedup_domain

    matrix = value_matrix(list(catalog.representatives), dedup_domain(7))
    assert len({row.tobytes() for row in matrix}) == len(catalog)


def test_catalog_class_count(catalog):
    # frozen from the deduplication over all 5914 permutations of length <= 7
    assert len(catalog) == 156


def test_catalog_json_fields(catalog):
    import json

    rows = json.loads(catalog.to_json())
    assert [r["name"] for r in rows] == sorted(r["name"] for r in rows)
    assert set(rows[0]) == {"name", "base", "word", "modifier", "class_aliases"}


def test_value_matrix_matches_direct_evaluation():
    ds = all_descriptors()[:60]
    ps = SMALL[:200]
    m = value_matrix(ds, ps)
    assert all(m[i, j] == d(p) for i, d in enumerate(ds) for j, p in enumerate(ps))


def test_base_stats_in_catalog_order():
    assert list(BASE_STATS) == (
        "asc des exc ldr rdr lir rir zeil comp lmax lmin rmax rmin head last peak valley lds lis rank cyc fp slmax"
    ).split()
