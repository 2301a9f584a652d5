import pytest

from permbij import analysis as an
from permbij.stats import parse_name
from permbij.tables import CANONICAL_ROWS, EQUIDISTRIBUTION_ROWS, EXPECTED_ROW_SIZES, RELATIONS


def names(pairs):
    return {(q.left.name, q.right.name) for q in pairs}


def test_preserved_pairs_examples(catalog):
    assert ("lmin", "lmin") in names(an.preserved_pairs("simion-schmidt", catalog, 7))
    assert ("fp", "fp") in names(an.preserved_pairs("elizalde-deutsch", catalog, 7))
    knuth = names(an.preserved_pairs("knuth", catalog, 7))
    assert {("exc", "exc"), ("fp", "fp"), ("lis", "n-rank")} <= knuth


def test_preserved_pairs_are_preserved(catalog):
    b = an.as_map("west")
    perms = an.domain_perms(b.domain, 6)
    for q in an.preserved_pairs(b, catalog, 6):
        assert all(q.left(p) == q.right(b(p)) for p in perms)


def test_dependency_certificate_over_132_avoiders():
    stats = [parse_name(s) for s in ("lmin", "lmax", "n-des", "head")]
    rank, cert = an.rank_over_class(stats, "132", 7)
    assert rank == 3
    assert cert.coefficients == (1, -1, 1, -1)
    assert str(cert) == "lmin - lmax + n-des - head = 0"
    for p in an.domain_perms("132", 7):
        assert sum(c * s(p) for c, s in zip(cert.coefficients, stats)) == 0


def test_single_statistic_has_full_rank():
    assert an.rank_over_class(["lmin"], "132", 7) == (1, None)


def test_simion_schmidt_left_side_is_independent():
    rank, cert = an.rank_over_class(EQUIDISTRIBUTION_ROWS["simion-schmidt"].left, "123", 7)
    assert (rank, cert) == (11, None)


def test_rank_does_not_depend_on_row_order():
    stats = [parse_name(s) for s in ("lmin", "lmax", "n-des", "head", "des")]
    rows = an.class_matrix(stats, "132", 6)
    from permbij.linalg import integer_rank

    assert integer_rank(rows) == integer_rank(rows[::-1]) == an.rank_over_class(stats, "132", 6)[0]


def test_row_sizes():
    for key, row in EQUIDISTRIBUTION_ROWS.items():
        assert len(row.pairs) == EXPECTED_ROW_SIZES[key]


@pytest.mark.parametrize("key", ["simion-schmidt", "elizalde-deutsch"])
def test_listed_rows_verify(key, catalog):
    report = an.verify_result_set(key, EQUIDISTRIBUTION_ROWS[key].pairs, 7, 7, catalog)
    assert (report.all_preserved, report.left_rank_full, report.right_rank_full, report.maximal) == (True,) * 4
    assert report.witnesses == []


def test_dropping_a_pair_breaks_maximality(catalog):
    pairs = [pair for pair in EQUIDISTRIBUTION_ROWS["knuth"].pairs if pair != ("exc", "exc")]
    report = an.verify_result_set("knuth", pairs, 7, 7, catalog)
    assert report.all_preserved and not report.maximal
    assert {"kind": "extends", "pair": ["exc", "exc"]} in report.witnesses


def test_homogeneous_reading_counts_shifted_copies_as_extensions(catalog):
    # without n and 1 in the span, m-fp looks independent of fp
    report = an.verify_result_set("elizalde-deutsch", [("fp", "fp")], 7, 7, catalog, affine=False)
    assert not report.maximal
    assert {"kind": "extends", "pair": ["m-fp", "m-fp"]} in report.witnesses


def test_wrong_pair_is_reported(catalog):
    report = an.verify_result_set("knuth", [("exc", "fp")], 5, 5, catalog)
    assert not report.all_preserved
    witness = report.witnesses[0]
    assert witness["kind"] == "not preserved"


def test_composite_domains():
    c = an.Composite("i", "knuth-richards", -1, "r")
    assert (c.domain, c.codomain) == ("321", "132")
    assert c.name == "i∘Knuth-Richards^-1∘r"


def test_canonical_forms_are_321_to_132_maps():
    for row in CANONICAL_ROWS.values():
        for key in row.bijections:
            c = an.canonical_321_132(key)
            assert (c.domain, c.codomain) == ("321", "132")
    assert an.canonical_321_132("knuth") == an.Composite("", "knuth", 1, "")


@pytest.mark.parametrize("key, size", [("simion-schmidt", 11), ("west", 7)])
def test_canonical_rows_hold(key, size, catalog):
    row = next(r for r in CANONICAL_ROWS.values() if key in r.bijections)
    assert len(row.pairs) == size
    report = an.verify_result_set(an.canonical_321_132(key), row.pairs, 6, 6, catalog)
    assert report.passed


def test_listed_identities_hold():
    assert all(ok for *_, ok in an.check_identities(8))


def test_relation_classes_contain_the_listed_chains():
    classes = an.trivial_relation_classes(max_len=6)
    of = {c: rc for rc in classes for c in rc.composites}
    for terms in RELATIONS:
        first = an.Composite(*terms[0])
        assert {an.Composite(*t) for t in terms} <= set(of[first].composites)


def test_normal_forms_solve_the_relations():
    forms = an.relation_normal_forms()
    for terms in RELATIONS:
        assert len({an.predicted_form(an.Composite(*t)) for t in terms}) == 1
    assert forms["knuth"] == ("knuth", "", 1, "")


def test_symmetries_of_single_bijections():
    assert ("i", "i") in an.symmetries("knuth", 6)
    assert ("i", "i") in an.symmetries("simion-schmidt", 6)
    assert an.symmetries("elizalde-deutsch", 6) == [("", "")]


def test_relation_report_is_stable_between_lengths():
    small, large = an.verify_relations(6), an.verify_relations(7)
    assert small.classes == large.classes
    assert small.no_other_relations and large.no_other_relations
    assert small.cross_family_merges == [] and small.unexpected_splits == []
