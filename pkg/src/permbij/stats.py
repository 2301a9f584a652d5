"""Permutation statistics, their symmetry-derived variants, and the deduplicated catalog.

Every base statistic vanishes on the empty permutation.  A derived statistic
pairs a base with a trivial word and a modifier; its name is written
``<mod-><base>[.<word>]`` where the word composes like functions, so
``head.ir`` is ``head(i(r(p)))``.

>>> evaluate("comp", (2, 1, 3, 6, 4, 5))
3
>>> evaluate("m-ldr", (7, 5, 6, 4, 2, 1, 3))
6
"""

from __future__ import annotations

import bisect
import difflib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .perm import Perm, apply_word, normalize_word, trivial_group

MODIFIERS = ("", "n", "m")


def asc(p: Perm) -> int:
    return sum(a < b for a, b in zip(p, p[1:]))


def des(p: Perm) -> int:
    return sum(a > b for a, b in zip(p, p[1:]))


def exc(p: Perm) -> int:
    return sum(a > i for i, a in enumerate(p, 1))


def fp(p: Perm) -> int:
    return sum(a == i for i, a in enumerate(p, 1))


def _run(p: Perm, longer: Callable[[int, int], bool]) -> int:
    if not p:
        return 0
    k = 1
    while k < len(p) and longer(p[k - 1], p[k]):
        k += 1
    return k


def ldr(p: Perm) -> int:
    return _run(p, lambda a, b: a > b)


def lir(p: Perm) -> int:
    return _run(p, lambda a, b: a < b)


def rdr(p: Perm) -> int:
    return lir(p[::-1])


def rir(p: Perm) -> int:
    return ldr(p[::-1])


def zeil(p: Perm) -> int:
    """Longest d such that n, n-1, ..., n-d+1 occur left to right."""
    n = len(p)
    if not n:
        return 0
    where = {a: i for i, a in enumerate(p)}
    d = 1
    while d < n and where[n - d] > where[n - d + 1]:
        d += 1
    return d


def comp(p: Perm) -> int:
    count = high = 0
    for i, a in enumerate(p, 1):
        high = max(high, a)
        count += high == i
    return count


def _records(p: Iterable[int], better: Callable[[int, int], bool]) -> int:
    count = 0
    best = None
    for a in p:
        if best is None or better(a, best):
            best = a
            count += 1
    return count


def lmax(p: Perm) -> int:
    return _records(p, lambda a, b: a > b)


def lmin(p: Perm) -> int:
    return _records(p, lambda a, b: a < b)


def rmax(p: Perm) -> int:
    return _records(reversed(p), lambda a, b: a > b)


def rmin(p: Perm) -> int:
    return _records(reversed(p), lambda a, b: a < b)


def head(p: Perm) -> int:
    return p[0] if p else 0


def last(p: Perm) -> int:
    return p[-1] if p else 0


def peak(p: Perm) -> int:
    return sum(a < b > c for a, b, c in zip(p, p[1:], p[2:]))


def valley(p: Perm) -> int:
    return sum(a > b < c for a, b, c in zip(p, p[1:], p[2:]))


def lis(p: Perm) -> int:
    tails: list[int] = []
    for a in p:
        k = bisect.bisect_left(tails, a)
        if k == len(tails):
            tails.append(a)
        else:
            tails[k] = a
    return len(tails)


def lds(p: Perm) -> int:
    return lis(tuple(-a for a in p))


def rank(p: Perm) -> int:
    """Largest k with a_i > k for every i <= k."""
    k = 0
    low = len(p) + 1
    while k < len(p):
        low = min(low, p[k])
        if low <= k + 1:
            break
        k += 1
    return k


def cyc(p: Perm) -> int:
    seen = [False] * (len(p) + 1)
    count = 0
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x - 1]
    return count


def slmax(p: Perm) -> int:
    """Number of letters before the first one exceeding the head; n if none does."""
    if not p:
        return 0
    for k, a in enumerate(p):
        if a > p[0]:
            return k
    return len(p)


BASE_STATS: dict[str, Callable[[Perm], int]] = {
    "asc": asc,
    "des": des,
    "exc": exc,
    "ldr": ldr,
    "rdr": rdr,
    "lir": lir,
    "rir": rir,
    "zeil": zeil,
    "comp": comp,
    "lmax": lmax,
    "lmin": lmin,
    "rmax": rmax,
    "rmin": rmin,
    "head": head,
    "last": last,
    "peak": peak,
    "valley": valley,
    "lds": lds,
    "lis": lis,
    "rank": rank,
    "cyc": cyc,
    "fp": fp,
    "slmax": slmax,
}


def eval_base(name: str, p: Perm) -> int:
    try:
        return BASE_STATS[name](p)
    except KeyError:
        raise UnknownStatistic(name, sorted(BASE_STATS)) from None


class UnknownStatistic(KeyError):
    def __init__(self, name: str, known: Iterable[str]):
        close = difflib.get_close_matches(name, list(known), n=3)
        hint = f"; did you mean {', '.join(close)}?" if close else ""
        self.name = name
        self.suggestions = close
        super().__init__(f"unknown statistic {name!r}{hint}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True, order=True)
class StatDescriptor:
    base: str
    word: str = ""
    modifier: str = ""

    def __post_init__(self):
        if self.base not in BASE_STATS:
            raise UnknownStatistic(self.base, BASE_STATS)
        if self.modifier not in MODIFIERS:
            raise ValueError(f"modifier must be one of '', 'n', 'm': {self.modifier!r}")
        object.__setattr__(self, "word", normalize_word(self.word))

    @property
    def name(self) -> str:
        prefix = f"{self.modifier}-" if self.modifier else ""
        suffix = f".{self.word}" if self.word else ""
        return f"{prefix}{self.base}{suffix}"

    def __call__(self, p: Perm) -> int:
        value = BASE_STATS[self.base](apply_word(self.word, p))
        if self.modifier == "n":
            return len(p) - value
        if self.modifier == "m":
            return len(p) + 1 - value
        return value

    def __str__(self) -> str:
        return self.name


def eval_derived(d: StatDescriptor, p: Perm) -> int:
    return d(p)


def parse_name(name: str) -> StatDescriptor:
    """Parse the naming grammar without consulting the catalog.

    >>> parse_name("m-ldr.i")
    StatDescriptor(base='ldr', word='i', modifier='m')
    """
    text = name.strip()
    modifier = ""
    if len(text) > 2 and text[1] == "-" and text[0] in "nmNM":
        modifier, text = text[0].lower(), text[2:]
    base, _, word = text.partition(".")
    if base not in BASE_STATS:
        raise UnknownStatistic(name, _all_names())
    try:
        return StatDescriptor(base, word, modifier)
    except ValueError:
        raise UnknownStatistic(name, _all_names()) from None


def evaluate(name: str, p: Perm) -> int:
    return parse_name(name)(p)


def all_descriptors() -> list[StatDescriptor]:
    return [
        StatDescriptor(base, word, mod)
        for base in BASE_STATS
        for word in trivial_group()
        for mod in MODIFIERS
    ]


@lru_cache(maxsize=1)
def _all_names() -> tuple[str, ...]:
    return tuple(d.name for d in all_descriptors())


# -- catalog -----------------------------------------------------------------


def dedup_domain(max_len: int = 7) -> list[Perm]:
    """Every permutation of length 0..max_len, shortest first."""
    from itertools import permutations

    return [tuple(q) for n in range(max_len + 1) for q in permutations(range(1, n + 1))]


def value_matrix(descriptors: list[StatDescriptor], perms: list[Perm]) -> np.ndarray:
    """Rows are descriptors, columns are permutations.

    Each (base, word) pair is evaluated once; the modifiers are affine in n.
    """
    lengths = np.array([len(p) for p in perms], dtype=np.int64)
    plain: dict[tuple[str, str], np.ndarray] = {}
    out = np.empty((len(descriptors), len(perms)), dtype=np.int64)
    for row, d in enumerate(descriptors):
        key = (d.base, d.word)
        if key not in plain:
            f = BASE_STATS[d.base]
            plain[key] = np.fromiter(
                (f(apply_word(d.word, p)) for p in perms), dtype=np.int64, count=len(perms)
            )
        values = plain[key]
        if d.modifier == "n":
            values = lengths - values
        elif d.modifier == "m":
            values = lengths + 1 - values
        out[row] = values
    return out


def _preference(d: StatDescriptor) -> tuple:
    return (MODIFIERS.index(d.modifier), len(d.word), d.base, d.word)


@dataclass(frozen=True)
class StatCatalog:
    representatives: tuple[StatDescriptor, ...]
    class_members: dict[StatDescriptor, tuple[StatDescriptor, ...]] = field(repr=False)
    max_len: int = 7

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def representative(self, d: StatDescriptor) -> StatDescriptor:
        return self._alias_map()[d]

    def _alias_map(self) -> dict[StatDescriptor, StatDescriptor]:
        cached = self.__dict__.get("_aliases")
        if cached is None:
            cached = {m: rep for rep, ms in self.class_members.items() for m in ms}
            object.__setattr__(self, "_aliases", cached)
        return cached

    def lookup(self, name: str) -> StatDescriptor:
        return self.representative(parse_name(name))

    def partition(self) -> list[list[str]]:
        return [[m.name for m in self.class_members[rep]] for rep in self.representatives]

    def to_json(self) -> str:
        rows = [
            {
                "name": rep.name,
                "base": rep.base,
                "word": rep.word,
                "modifier": rep.modifier or "plain",
                "class_aliases": [m.name for m in self.class_members[rep] if m != rep],
            }
            for rep in sorted(self.representatives, key=lambda d: d.name)
        ]
        return json.dumps(rows, indent=2)


def build_catalog(max_len: int = 7) -> StatCatalog:
    return _build_catalog(max_len)


@lru_cache(maxsize=None)
def _build_catalog(max_len: int) -> StatCatalog:
    descriptors = all_descriptors()
    matrix = value_matrix(descriptors, dedup_domain(max_len))
    _, labels = np.unique(matrix, axis=0, return_inverse=True)
    groups: dict[int, list[StatDescriptor]] = {}
    for d, label in zip(descriptors, labels.ravel()):
        groups.setdefault(int(label), []).append(d)
    members = {}
    for group in groups.values():
        group.sort(key=_preference)
        members[group[0]] = tuple(group)
    reps = tuple(sorted(members, key=_preference))
    return StatCatalog(reps, members, max_len)


def catalog_lookup(name: str, catalog: StatCatalog | None = None) -> StatDescriptor:
    """Resolve a statistic name to its catalog representative.

    >>> catalog_lookup("asc.r").name
    'des'
    """
    return (catalog or build_catalog()).lookup(name)
