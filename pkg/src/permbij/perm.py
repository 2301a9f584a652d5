"""Permutations as tuples, the trivial symmetry group, and avoidance classes.

A permutation of length n is a tuple holding each of 1..n exactly once; the
empty tuple is the empty permutation.

>>> reverse((1, 2, 3))
(3, 2, 1)
>>> apply_trivial("i", (4, 1, 5, 2, 6, 3))
(2, 4, 6, 1, 3, 5)
>>> direct_sum((5, 2, 1, 3, 4), (2, 1))
(5, 2, 1, 3, 4, 7, 6)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

Perm = tuple[int, ...]

PATTERNS: tuple[str, ...] = ("123", "132", "213", "231", "312", "321")
LANDMARK_KINDS: tuple[str, ...] = ("LMIN", "RMIN", "LMAX", "RMAX")


class DomainError(ValueError):
    """Raised when a permutation lies outside the class an operation expects."""

    def __init__(self, message: str, pattern: str | None = None):
        super().__init__(message)
        self.pattern = pattern


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def is_perm(letters: Sequence[int]) -> bool:
    return sorted(letters) == list(range(1, len(letters) + 1))


def make_perm(letters: Sequence[int]) -> Perm:
    p = tuple(int(a) for a in letters)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Read "5 2 1 3 4" or the compact "52134" (only when every letter is a digit 1-9).

    >>> parse_perm("5213476")
    (5, 2, 1, 3, 4, 7, 6)
    >>> parse_perm("4 1 5 7 2 3 6 8 10 9 11")[-3:]
    (10, 9, 11)
    >>> parse_perm("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch in text for ch in " ,"):
        letters = [int(tok) for tok in text.replace(",", " ").split()]
    else:
        letters = [int(ch) for ch in text]
        if len(letters) > 9:
            raise ValueError("compact digit form is only accepted for length at most 9")
    return make_perm(letters)


def format_perm(p: Perm, compact: bool = False) -> str:
    if compact and len(p) <= 9:
        return "".join(map(str, p))
    return " ".join(map(str, p))


def perm_repr(p: Perm) -> str:
    """Digits when unambiguous, otherwise space separated; used in messages and test ids."""
    return format_perm(p, compact=True)


# -- trivial bijections ------------------------------------------------------


def reverse(p: Perm) -> Perm:
    return p[::-1]


def complement(p: Perm) -> Perm:
    m = len(p) + 1
    return tuple(m - a for a in p)


def inverse(p: Perm) -> Perm:
    q = [0] * len(p)
    for i, a in enumerate(p, 1):
        q[a - 1] = i
    return tuple(q)


_LETTERS = {"r": reverse, "c": complement, "i": inverse}
# tie-break order among equally short words
_LETTER_ORDER = "rci"


def apply_word(word: str, p: Perm) -> Perm:
    """Apply a raw word over r, c, i; the rightmost letter acts first."""
    for letter in reversed(word):
        p = _LETTERS[letter](p)
    return p


_PROBES = tuple(itertools.permutations(range(1, 5)))


def _signature(word: str) -> tuple[Perm, ...]:
    # the action on all of S_4 determines the group element
    return tuple(apply_word(word, p) for p in _PROBES)


@lru_cache(maxsize=None)
def _group_table() -> dict[tuple[Perm, ...], str]:
    # first spelling met in (length, r < c < i) order is canonical
    table: dict[tuple[Perm, ...], str] = {}
    for length in range(5):
        for letters in itertools.product(_LETTER_ORDER, repeat=length):
            table.setdefault(_signature("".join(letters)), "".join(letters))
    assert len(table) == 8
    return table


def normalize_word(word: str) -> str:
    """Return the canonical shortest spelling of a word over r, c, i.

    >>> normalize_word("ii")
    ''
    >>> normalize_word("cr")
    'rc'
    """
    word = word.lower()
    bad = set(word) - set(_LETTER_ORDER)
    if bad:
        raise ValueError(f"trivial words use only the letters r, c, i: {word!r}")
    return _group_table()[_signature(word)]


def trivial_group() -> list[str]:
    """The eight elements of the group generated by r, c, i as canonical words."""
    words = list(_group_table().values())
    return sorted(words, key=lambda w: (len(w), [_LETTER_ORDER.index(ch) for ch in w]))


def compose_words(outer: str, inner: str) -> str:
    """Canonical word of the map outer∘inner."""
    return normalize_word(outer + inner)


def inverse_word(word: str) -> str:
    # r, c, i are involutions, so the inverse is the reversed spelling
    return normalize_word(word[::-1])


def apply_trivial(word: str, p: Perm) -> Perm:
    return apply_word(word, p)


# -- sums and components -----------------------------------------------------


def direct_sum(s: Perm, t: Perm) -> Perm:
    k = len(s)
    return tuple(s) + tuple(a + k for a in t)


def components(p: Perm) -> list[Perm]:
    """Split p into its indecomposable blocks.

    >>> components((2, 1, 3, 6, 4, 5))
    [(2, 1), (3,), (6, 4, 5)]
    """
    blocks = []
    start = 0
    high = 0
    for i, a in enumerate(p, 1):
        high = max(high, a)
        if high == i:
            blocks.append(tuple(p[start:i]))
            start = i
    return blocks


def standardize(letters: Sequence[int]) -> Perm:
    """Replace distinct integers by 1..k keeping their relative order."""
    ranks = {a: r for r, a in enumerate(sorted(letters), 1)}
    return tuple(ranks[a] for a in letters)


# -- pattern avoidance -------------------------------------------------------


def _check_pattern(t: str) -> Perm:
    if t not in PATTERNS:
        raise ValueError(f"unknown pattern {t!r}; expected one of {', '.join(PATTERNS)}")
    return tuple(int(ch) for ch in t)


def find_occurrence(p: Perm, t: str) -> tuple[int, int, int] | None:
    """First index triple (1-based) of p order-isomorphic to t, or None."""
    pat = _check_pattern(t)
    for triple in itertools.combinations(range(len(p)), 3):
        if standardize([p[k] for k in triple]) == pat:
            return tuple(k + 1 for k in triple)
    return None


def _middle_test(t: str, mid: int, left: Sequence[int], right: Sequence[int]) -> bool:
    # is there a, b with a left of mid and b right of it forming t around mid?
    if t == "123":
        return any(a < mid for a in left) and any(b > mid for b in right)
    if t == "321":
        return any(a > mid for a in left) and any(b < mid for b in right)
    if t == "132":
        low = [b for b in right if b < mid]
        return bool(low) and bool(left) and min(left) < max(low)
    if t == "231":
        low = [a for a in left if a < mid]
        return bool(low) and bool(right) and min(right) < max(low)
    if t == "213":
        high = [a for a in left if a > mid]
        return bool(high) and bool(right) and max(right) > min(high)
    high = [b for b in right if b > mid]  # 312
    return bool(high) and bool(left) and max(left) > min(high)


def avoids(p: Perm, t: str) -> bool:
    """True when no three letters of p form the pattern t.

    Scans each letter as the middle of a would-be occurrence, which is
    quadratic; find_occurrence is the cubic reference.
    """
    _check_pattern(t)
    return not any(_middle_test(t, p[j], p[:j], p[j + 1 :]) for j in range(1, len(p) - 1))


def require_avoids(p: Perm, t: str, who: str) -> None:
    if not is_perm(p):
        raise DomainError(f"{p!r} is not a permutation")
    if not avoids(p, t):
        raise DomainError(f"input contains {t}; {who} expects a {t}-avoider", pattern=t)


def _blocks_new_max(t: str, left: Perm, right: Perm) -> bool:
    # does inserting a new largest letter between left and right create t?
    # the new letter can only play the role of 3 in the pattern
    if t == "123":
        return any(a < b for a, b in itertools.combinations(left, 2))
    if t == "213":
        return any(a > b for a, b in itertools.combinations(left, 2))
    if t == "312":
        return any(a < b for a, b in itertools.combinations(right, 2))
    if t == "321":
        return any(a > b for a, b in itertools.combinations(right, 2))
    if t == "132":
        return bool(left) and bool(right) and min(left) < max(right)
    return bool(left) and bool(right) and max(left) > min(right)


def active_sites(p: Perm, t: str) -> list[int]:
    """Gaps 0..n of p where inserting n+1 keeps p avoiding t."""
    return [k for k in range(len(p) + 1) if not _blocks_new_max(t, p[:k], p[k:])]


@lru_cache(maxsize=None)
def class_members(n: int, t: str) -> tuple[Perm, ...]:
    """All t-avoiders of length n in lexicographic order.

    Built by inserting the largest letter into the active sites of the
    t-avoiders of length n-1; removing the largest letter never creates an
    occurrence, so every avoider arises exactly once.
    """
    _check_pattern(t)
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    for p in class_members(n - 1, t):
        for k in active_sites(p, t):
            out.append(p[:k] + (n,) + p[k:])
    out.sort()
    return tuple(out)


def enumerate_class(n: int, t: str) -> Iterator[Perm]:
    yield from class_members(n, t)


def class_up_to(max_len: int, t: str, start: int = 1) -> list[Perm]:
    return [p for n in range(start, max_len + 1) for p in class_members(n, t)]


# -- landmarks ---------------------------------------------------------------


def landmarks(p: Perm, kind: str) -> frozenset[tuple[int, int]]:
    """Positions and values of left-to-right / right-to-left minima or maxima.

    >>> sorted(landmarks((6, 7, 3, 2, 4, 1, 5, 8), "LMIN"))
    [(1, 6), (3, 3), (4, 2), (6, 1)]
    """
    if kind not in LANDMARK_KINDS:
        raise ValueError(f"unknown landmark kind {kind!r}")
    smaller = kind.endswith("MIN")
    indexed = list(enumerate(p, 1))
    if kind.startswith("R"):
        indexed.reverse()
    found = []
    best = None
    for i, a in indexed:
        if best is None or (a < best if smaller else a > best):
            best = a
            found.append((i, a))
    return frozenset(found)
