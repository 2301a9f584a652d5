"""Known equidistribution lists and relations, written in this package's statistic names.

Statistic names follow the grammar of :mod:`permbij.stats`: ``head.ir`` is
head∘i∘r, ``m-ldr.i`` is n+1-ldr(i(p)).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ResultRow:
    bijections: tuple[str, ...]
    left: tuple[str, ...]
    right: tuple[str, ...]

    @property
    def pairs(self) -> list[tuple[str, str]]:
        return list(zip(self.left, self.right))


def _row(bijections, left, right) -> ResultRow:
    left, right = tuple(left.split()), tuple(right.split())
    assert len(left) == len(right)
    return ResultRow(tuple(bijections.split()), left, right)


EQUIDISTRIBUTION_ROWS: dict[str, ResultRow] = {
    "knuth-richards": _row(
        "knuth-richards",
        "valley.i valley lmin ldr.i head.i comp.r rank ldr lir.i lir rmax",
        "valley valley.i lmin ldr head comp.r rank ldr.i slmax.c slmax.ir head.ir",
    ),
    "simion-schmidt": _row(
        "simion-schmidt",
        "valley valley.i lmin ldr head comp.r rank ldr.i slmax.c slmax.ir head.ir",
        "valley valley.i lmin ldr head comp.r rank ldr.i lir lir.i rmin",
    ),
    "krattenthaler": _row(
        "krattenthaler",
        "peak.i peak rmax zeil last.ir comp.r rank.rc rdr slmax.ri slmax.r last",
        "valley valley.i lmin ldr head comp.r rank ldr.i lir lir.i rmin",
    ),
    "mansour-deng-du": _row(
        "mansour-deng-du",
        "valley peak.i rmin rir last comp rank.r lir.i slmax.cr slmax.i head.i",
        "valley peak.i rmin rir last comp rank.r lir.i rdr ldr.i lmin",
    ),
    "knuth-rotem": _row(
        "knuth-rotem",
        "valley.i peak exc slmax head slmax.rci rir.i lir last.i",
        "valley.i valley des rdr ldr.i zeil lmax rmin m-ldr",
    ),
    "reifegerste": _row(
        "reifegerste",
        "valley peak.i exc slmax.i head.i slmax.rc rir lir.i last",
        "valley valley.i des zeil ldr rdr rmin lmax m-ldr.i",
    ),
    "west": _row(
        "west",
        "valley.i exc.r slmax.ir slmax.c ldr ldr.i head",
        "valley.i asc lir.i comp rmax ldr.i head",
    ),
    "knuth": _row("knuth", "exc fp lir.i lir lis", "exc fp rmin lmax n-rank"),
    "elizalde-deutsch": _row("elizalde-deutsch", "fp", "fp"),
}

# expected number of pairs in each row
EXPECTED_ROW_SIZES = {
    "knuth-richards": 11,
    "simion-schmidt": 11,
    "krattenthaler": 11,
    "mansour-deng-du": 11,
    "knuth-rotem": 9,
    "reifegerste": 9,
    "west": 7,
    "knuth": 5,
    "elizalde-deutsch": 1,
}

# the same lists after every bijection is conjugated into a map from 321- to 132-avoiders
CANONICAL_ROWS: dict[str, ResultRow] = {
    "11": _row(
        "phi knuth-richards krattenthaler mansour-deng-du simion-schmidt",
        "valley peak.i rmin rir last comp rank.r lir.i slmax.cr slmax.i head.i",
        "valley valley.i lmin ldr head comp.r rank ldr.i lir lir.i rmin",
    ),
    "9": _row(
        "knuth-rotem reifegerste",
        "valley peak.i exc slmax.i head.i slmax.rc rir lir.i last",
        "valley valley.i des zeil ldr rdr rmin lmax m-ldr.i",
    ),
    "7": _row(
        "west",
        "peak.i exc slmax.i slmax.rc rir lir.i last",
        "valley.i asc lir.i comp rmax ldr.i head",
    ),
    "5": _row("knuth", "exc fp lir.i lir lis", "exc fp rmin lmax n-rank"),
    "1": _row("elizalde-deutsch", "fp", "fp"),
}


# A term (outer, bijection, exponent, inner) stands for outer∘B^exponent∘inner.
Term = tuple[str, str, int, str]

# each tuple lists terms that are equal as maps
RELATIONS: tuple[tuple[Term, ...], ...] = (
    (
        ("r", "phi", -1, ""),
        ("i", "simion-schmidt", 1, "r"),
        ("i", "krattenthaler", 1, "ri"),
        ("ir", "mansour-deng-du", 1, ""),
        ("", "knuth-richards", -1, "r"),
    ),
    (
        ("", "reifegerste", 1, ""),
        ("i", "knuth-rotem", 1, "i"),
    ),
)

# every bijection conjugated into a map from 321- to 132-avoiders
CANONICAL_FORMS: dict[str, Term] = {
    "knuth": ("", "knuth", 1, ""),
    "knuth-rotem": ("i", "knuth-rotem", 1, "i"),
    "simion-schmidt": ("", "simion-schmidt", 1, "r"),
    "knuth-richards": ("i", "knuth-richards", -1, "r"),
    "west": ("", "west", 1, "r"),
    "krattenthaler": ("", "krattenthaler", 1, "ri"),
    "reifegerste": ("", "reifegerste", 1, ""),
    "elizalde-deutsch": ("", "elizalde-deutsch", 1, ""),
    "mansour-deng-du": ("r", "mansour-deng-du", 1, ""),
    "phi": ("ir", "phi", -1, ""),
}


def canonical_row_for(key: str) -> ResultRow:
    for row in CANONICAL_ROWS.values():
        if key in row.bijections:
            return row
    raise KeyError(key)
