import pytest
from hypothesis import given, strategies as st

from conftest import P, class_perms
from permbij import bijections
from permbij.perm import catalan, class_members, landmarks
from permbij.paths import (
    PathError,
    TableauPair,
    apply_reduced_word,
    ballot_to_path,
    canonical_decomposition,
    check_ballot,
    check_path,
    check_reduced_word,
    check_tableau_pair,
    dyck_paths,
    ed_phi,
    ed_phi_inv,
    ed_psi,
    ed_Psi,
    ed_Psi_inv,
    essential_cells,
    format_reduced_word,
    heights,
    krattenthaler_132,
    krattenthaler_encode,
    mdd_trapezoid_decode,
    mdd_zigzag_decode,
    parse_path,
    path_to_tableaux,
    peaks,
    reflect,
    richards_decode,
    rotem_encode,
    rsk_two_row,
    standard_f,
    standard_f_inv,
    tableaux_to_path,
    trapezoid_decomposition,
    zigzag_decomposition,
)

STRIP_PATH = "uuduuududddudduduuddud"


def dyck(max_n=7):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(dyck_paths(n)))


def test_dyck_path_counts():
    assert [len(dyck_paths(n)) for n in range(10)] == [catalan(n) for n in range(10)]


@pytest.mark.parametrize("word, index", [("du", 0), ("udd", 2), ("uud", 3), ("uxd", 1)])
def test_path_errors_point_at_the_first_bad_step(word, index):
    with pytest.raises(PathError) as err:
        check_path(word)
    assert err.value.index == index


def test_parse_path_accepts_capitals():
    assert parse_path("UUDD") == "uudd"


# -- standard coding ---------------------------------------------------------


@pytest.mark.parametrize("p, path", [("7564213", "uduudduduududd"), ("1", "ud"), ("12", "uudd"), ("21", "udud")])
def test_standard_f(p, path):
    assert standard_f(P(p)) == path
    assert standard_f_inv(path) == P(p)


@given(class_perms("132"))
def test_height_description_agrees_with_recursion(p):
    assert krattenthaler_132(p) == standard_f(p)


@given(class_perms("132"))
def test_standard_coding_sends_left_minima_to_peaks(p):
    n = len(p)
    assert landmarks(p, "LMIN") == {(i, n + 1 - a) for a, i in peaks(standard_f(p))}


def test_peaks_example():
    assert peaks("uuudduuddudd") == {(3, 1), (5, 3), (6, 5)}


# -- ballots and tableaux ----------------------------------------------------


@pytest.mark.parametrize("p, ballot", [("2513476", (0, 0, 1, 3, 4, 4, 6)), ("123", (0, 0, 0)), ("21", (0, 1))])
def test_rotem_encode(p, ballot):
    assert rotem_encode(P(p)) == ballot


@pytest.mark.parametrize(
    "ballot, path",
    [((0, 0, 1, 3, 4, 4, 6), "uduudduduududd"), ((0, 0, 0), "uuuddd"), ((0, 1), "udud")],
)
def test_ballot_to_path(ballot, path):
    assert ballot_to_path(ballot) == path


def test_identity_ballot_gives_the_identity_through_the_standard_coding():
    # the all-zero ballot belongs to the identity, which the standard coding sends to u^n d^n
    assert standard_f_inv(ballot_to_path((0, 0, 0))) == (1, 2, 3)


@given(class_perms("321"))
def test_ballot_sequences_are_ballots(p):
    b = rotem_encode(p)
    check_ballot(b)
    assert all(x <= y for x, y in zip(b, b[1:]))
    assert all(0 <= x <= i for i, x in enumerate(b))


def test_rsk_example():
    t = rsk_two_row(P("3156247"))
    assert t == TableauPair(((1, 2, 4, 7), (3, 5, 6)), ((1, 3, 4, 7), (2, 5, 6)))
    assert rsk_two_row(P("123")) == TableauPair(((1, 2, 3), ()), ((1, 2, 3), ()))
    assert rsk_two_row(P("21")) == TableauPair(((1,), (2,)), ((1,), (2,)))


def test_tableau_path_of_the_worked_example():
    # the tableau path of 3156247 is the reflection of f(7564213)
    assert tableaux_to_path(rsk_two_row(P("3156247"))) == "uududduduuddud"
    assert tableaux_to_path(rsk_two_row(P("123"))) == "uuuddd"
    assert tableaux_to_path(rsk_two_row(P("21"))) == "udud"


@given(class_perms("321"))
def test_tableaux_are_standard(p):
    t = rsk_two_row(p)
    assert check_tableau_pair(t) == len(p)
    assert len(t.P[0]) == len(t.Q[0]) and len(t.P[1]) == len(t.Q[1])
    assert path_to_tableaux(tableaux_to_path(t)) == t


def test_third_row_is_rejected():
    with pytest.raises(ValueError):
        rsk_two_row(P("321"))


# -- reflection, Richards, Krattenthaler -------------------------------------


def test_reflect():
    assert reflect("uuddud") == "uduudd"
    assert reflect("ududud") == "ududud"
    assert reflect("uduudduduududd") == "uududduduuddud"


@given(dyck())
def test_reflect_is_an_involution(path):
    assert reflect(reflect(path)) == path
    check_path(reflect(path))


@pytest.mark.parametrize(
    "path, p", [("uudduududuuddd", "5743612"), ("ududud", "321"), ("uuuddd", "132"), ("uuuudddd", "1432")]
)
def test_richards_decode(path, p):
    assert richards_decode(path) == P(p)


@given(dyck())
def test_richards_sends_peaks_to_left_minima(path):
    n = len(path) // 2
    assert landmarks(richards_decode(path), "LMIN") == {(n + 1 - i, a) for i, a in peaks(path)}


@pytest.mark.parametrize("p, path", [("536142", "uuudduuddudd"), ("321", "ududud"), ("1", "ud")])
def test_krattenthaler_encode(p, path):
    assert krattenthaler_encode(P(p)) == path


@given(class_perms("123"))
def test_krattenthaler_path_peaks_mark_right_maxima(p):
    # on the path 536142 -> uuudduuddudd the right-to-left maximum at
    # position i with value n+1-a sits at the peak u_i d_a
    n = len(p)
    assert landmarks(p, "RMAX") == {(i, n + 1 - a) for i, a in peaks(krattenthaler_encode(p))}


# -- Elizalde-Deutsch --------------------------------------------------------


def test_ed_walk_examples():
    assert ed_psi(P("2314657")) == "uuuddduduuddud"
    assert ed_psi(P("123")) == "ududud"
    assert ed_psi(P("21")) == "uudd"


def test_ed_reflected_coding_examples():
    assert ed_phi(P("7432516")) == "uuduudududddud"
    assert ed_phi(P("1")) == "ud"
    assert ed_phi(P("12")) == "uudd"


def test_ed_Psi_examples():
    assert ed_Psi("uuduudududddud") == "uuuddduduuddud"
    assert ed_Psi("ud") == "ud"
    assert ed_Psi("udud") == "uudd"
    assert ed_Psi("uudd") == "udud"


@pytest.mark.parametrize("n", range(9))
def test_ed_Psi_is_a_bijection(n):
    images = [ed_Psi(path) for path in dyck_paths(n)]
    assert sorted(images) == sorted(dyck_paths(n))
    assert all(ed_Psi_inv(ed_Psi(path)) == path for path in dyck_paths(n))


def test_ed_walk_stays_on_paths():
    for n in range(8):
        assert sorted(ed_psi(p) for p in class_members(n, "321")) == sorted(dyck_paths(n))


@given(class_perms("132"))
def test_ed_reflected_coding_round_trip(p):
    assert ed_phi_inv(ed_phi(p)) == p


# -- reduced words and strip decompositions ----------------------------------


def test_canonical_decomposition_example():
    w = canonical_decomposition(P("415263"))
    assert format_reduced_word(w) == "(s3s2s1)(s4s3)(s5)"
    assert apply_reduced_word(w, 6) == P("415263")
    assert canonical_decomposition(P("123")) == ()
    assert apply_reduced_word([(1, 1)], 3) == P("213")


@given(st.integers(0, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple)))
def test_canonical_decomposition_round_trip(p):
    w = canonical_decomposition(p)
    check_reduced_word(w, len(p))
    assert apply_reduced_word(w, len(p)) == p


def test_strip_decodings_of_an_eleven_step_path():
    assert mdd_zigzag_decode(STRIP_PATH) == P("4 1 5 7 2 3 6 8 10 9 11")
    assert mdd_trapezoid_decode(STRIP_PATH) == P("7 1 5 4 2 3 6 8 10 9 11")


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_strip_decodings_of_the_zigzag_path_are_trivial(n):
    assert mdd_zigzag_decode("ud" * n) == tuple(range(1, n + 1))
    assert mdd_trapezoid_decode("ud" * n) == tuple(range(1, n + 1))


def test_single_cell():
    assert mdd_zigzag_decode("uudd") == mdd_trapezoid_decode("uudd") == (2, 1)
    assert zigzag_decomposition("uudd") == trapezoid_decomposition("uudd") == ((1, 1),)


@given(dyck(8))
def test_strip_decompositions_have_equal_length_and_first_letters(path):
    z, t = zigzag_decomposition(path), trapezoid_decomposition(path)
    assert len(z) == len(t)
    assert [run[0] for run in z] == [run[0] for run in t]


@given(dyck(8))
def test_one_zigzag_run_per_essential_cell(path):
    assert len(zigzag_decomposition(path)) == len(essential_cells(path))


@pytest.mark.parametrize("key", sorted(bijections.CODECS))
def test_codec_round_trips_up_to_length_eight(key):
    problems = [msg for n in range(9) for msg in bijections.codec_roundtrip(key, n)]
    assert problems == []


@given(dyck())
def test_heights_stay_nonnegative(path):
    h = heights(path)
    assert h[0] == 0 == h[-1] and min(h) >= 0
