"""The ten bijections between Catalan classes of permutations, with inverses.

Each bijection is registered under a short key with its domain and codomain
patterns.  ``apply`` checks the domain; ``invert`` uses an explicit inverse
where one is at hand and otherwise a per-length lookup table.

>>> apply("simion-schmidt", (6, 7, 4, 3, 1, 5, 2))
(6, 7, 4, 3, 1, 2, 5)
>>> invert("phi", (2, 1, 6, 3, 4, 7, 5))
(5, 2, 1, 3, 4, 7, 6)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from . import paths
from .perm import (
    DomainError,
    Perm,
    active_sites,
    avoids,
    class_members,
    components,
    direct_sum,
    format_perm,
    is_perm,
    landmarks,
)

DEFAULT_TABLE_CAP = 10


class LengthCapError(ValueError):
    """An inversion table was requested beyond the configured length cap."""


# -- direct constructions ----------------------------------------------------


def simion_schmidt(p: Perm) -> Perm:
    """Keep the left-to-right minima; fill every other place with the least unused letter above the current minimum."""
    _require(p, "123", "simion-schmidt")
    return _simion_schmidt(p)


def _simion_schmidt(p: Perm) -> Perm:
    if not p:
        return ()
    out = [p[0]]
    used = {p[0]}
    low = p[0]
    for a in p[1:]:
        if a < low:
            c = low = a
        else:
            c = low + 1
            while c in used:
                c += 1
        out.append(c)
        used.add(c)
    return tuple(out)


def simion_schmidt_inverse(q: Perm) -> Perm:
    """Keep the left-to-right minima; fill the other places with the unused letters in decreasing order."""
    _require(q, "132", "simion-schmidt inverse")
    minima = dict(landmarks(q, "LMIN"))
    rest = sorted(set(q) - set(minima.values()), reverse=True)
    it = iter(rest)
    return tuple(minima[i] if i in minima else next(it) for i in range(1, len(q) + 1))


def west_signature(p: Perm, t: str) -> tuple[int, ...]:
    """Active-site counts of p, of p without its largest letter, and so on down to a single letter.

    A site is active when inserting a new largest letter there leaves the
    permutation t-avoiding, tested literally by insertion.

    >>> west_signature((5, 3, 6, 1, 4, 2), "123")
    (3, 4, 3, 3, 2, 2)
    """
    if t not in ("123", "132"):
        raise ValueError("signatures are defined for 123- and 132-avoiders")
    _require(p, t, f"west_signature({t})")
    return _signature(p, t)


@lru_cache(maxsize=None)
def _signature(p: Perm, t: str) -> tuple[int, ...]:
    if not p:
        return ()
    n = len(p)
    count = sum(avoids(p[:k] + (n + 1,) + p[k:], t) for k in range(n + 1))
    return (count,) + _signature(tuple(a for a in p if a != n), t)


@lru_cache(maxsize=None)
def _west_table(n: int) -> dict[tuple[int, ...], Perm]:
    table: dict[tuple[int, ...], Perm] = {}
    for q in class_members(n, "132"):
        sig = _signature(q, "132")
        if sig in table:
            raise AssertionError(f"signature {sig} is shared by {table[sig]} and {q}")
        table[sig] = q
    return table


def west(p: Perm) -> Perm:
    """The 132-avoider with the same signature as the 123-avoider p.

    >>> west((5, 3, 6, 1, 4, 2))
    (5, 3, 4, 6, 1, 2)
    """
    _require(p, "123", "west")
    sig = _signature(p, "123")
    try:
        return _west_table(len(p))[sig]
    except KeyError:
        raise AssertionError(f"no 132-avoider has signature {sig}") from None


def west_positional_sites(p: Perm, t: str) -> int:
    """Active sites counted from positions alone (no trial insertion); a cross-check."""
    return len(active_sites(p, t))


def reifegerste_diagram(p: Perm) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    """E-squares and the shaded Ferrers region of a 321-avoider."""
    n = len(p)
    e_squares = {(i, n + 1 - a) for i, a in enumerate(p, 1) if a > i}
    shaded = {
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if not any(i >= a and j >= b for i, j in e_squares)
    }
    return e_squares, shaded


def reifegerste(p: Perm) -> Perm:
    """Place dots row by row in the leftmost free shaded square.

    >>> reifegerste((1, 3, 2, 5, 6, 8, 4, 7))
    (7, 8, 5, 6, 4, 2, 1, 3)
    """
    _require(p, "321", "reifegerste")
    n = len(p)
    _, shaded = reifegerste_diagram(p)
    used: set[int] = set()
    out = []
    for row in range(1, n + 1):
        col = next((b for b in range(1, n + 1) if (row, b) in shaded and b not in used), None)
        if col is None:
            raise AssertionError(f"row {row} has no free shaded square for {p}")
        used.add(col)
        out.append(col)
    return tuple(out)


def alpha(p: Perm) -> Perm:
    """Prefix a new largest letter."""
    return (len(p) + 1,) + tuple(p)


def beta(p: Perm) -> Perm:
    """Insert a new largest letter before 1 and rotate it through the boxed maxima.

    Boxed letters are the left-to-right maxima to the right of 1 that are not
    right-to-left minima.

    >>> beta((2, 4, 1, 3, 5, 7, 6, 9, 8))
    (2, 4, 7, 1, 3, 5, 9, 6, 10, 8)
    """
    n = len(p)
    if not n:
        return (1,)
    where_one = p.index(1)
    lmax_vals = {a for _, a in landmarks(p, "LMAX")}
    rmin_vals = {a for _, a in landmarks(p, "RMIN")}
    out = list(p[:where_one]) + [n + 1] + list(p[where_one:])
    boxed = [where_one] + [
        k + 1
        for k in range(where_one + 1, n)
        if p[k] in lmax_vals and p[k] not in rmin_vals
    ]
    values = [out[k] for k in boxed]
    for k, v in zip(boxed, values[1:] + values[:1]):
        out[k] = v
    return tuple(out)


def _phi(p: Perm) -> Perm:
    if not p:
        return ()
    blocks = components(p)
    if len(blocks) > 1:
        out: Perm = ()
        offset = 0
        images = []
        for block in blocks:
            images.append(_phi(tuple(a - offset for a in block)))
            offset += len(block)
        for image in reversed(images):
            out = direct_sum(out, image)
        return out
    if p[0] != len(p):
        raise AssertionError(f"indecomposable 231-avoider {p} does not start with its largest letter")
    return beta(_phi(p[1:]))


def phi(p: Perm) -> Perm:
    """The recursive map from 231-avoiders to 321-avoiders.

    >>> phi((5, 2, 1, 3, 4, 7, 6))
    (2, 1, 6, 3, 4, 7, 5)
    """
    _require(p, "231", "phi")
    return _phi(p)


# -- path-matched constructions ----------------------------------------------


def rsk_two_row_inverse(t: paths.TableauPair) -> Perm:
    """Undo two-row row insertion by reverse bumping."""
    n = paths.check_tableau_pair(t)
    P = [list(t.P[0]), list(t.P[1])]
    Q = [list(t.Q[0]), list(t.Q[1])]
    out = [0] * n
    for step in range(n, 0, -1):
        row = 0 if Q[0] and Q[0][-1] == step else 1
        Q[row].pop()
        x = P[row].pop()
        if row == 1:
            k = max(j for j, y in enumerate(P[0]) if y < x)
            P[0][k], x = x, P[0][k]
        out[step - 1] = x
    return tuple(out)


def knuth(p: Perm) -> Perm:
    """The 132-avoider whose reflected standard path is the tableau path of p."""
    _require(p, "321", "knuth")
    return paths.standard_f_inv(paths.reflect(paths.tableaux_to_path(paths.rsk_two_row(p))))


def knuth_inverse(q: Perm) -> Perm:
    _require(q, "132", "knuth inverse")
    return rsk_two_row_inverse(paths.path_to_tableaux(paths.reflect(paths.standard_f(q))))


def knuth_rotem(p: Perm) -> Perm:
    _require(p, "321", "knuth-rotem")
    return paths.standard_f_inv(paths.ballot_to_path(paths.rotem_encode(p)))


def knuth_richards(p: Perm) -> Perm:
    _require(p, "132", "knuth-richards")
    return paths.richards_decode(paths.standard_f(p))


def krattenthaler(p: Perm) -> Perm:
    _require(p, "123", "krattenthaler")
    return paths.standard_f_inv(paths.krattenthaler_encode(p))


def elizalde_deutsch(p: Perm) -> Perm:
    _require(p, "321", "elizalde-deutsch")
    return paths.ed_phi_inv(paths.ed_Psi_inv(paths.ed_psi(p)))


@lru_cache(maxsize=None)
def _zigzag_table(n: int) -> dict[Perm, str]:
    return {paths.mdd_zigzag_decode(P): P for P in paths.dyck_paths(n)}


def mansour_deng_du(p: Perm) -> Perm:
    """Trapezoidal decoding of the path whose zigzag decoding is p."""
    _require(p, "321", "mansour-deng-du")
    return paths.mdd_trapezoid_decode(_zigzag_table(len(p))[p])


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class Bijection:
    key: str
    name: str
    domain: str
    codomain: str
    forward: Callable[[Perm], Perm]
    inverse: Optional[Callable[[Perm], Perm]] = None

    def __call__(self, p: Perm) -> Perm:
        return self.forward(p)


BIJECTIONS: dict[str, Bijection] = {
    b.key: b
    for b in (
        Bijection("knuth", "Knuth", "321", "132", knuth, knuth_inverse),
        Bijection("knuth-rotem", "Knuth-Rotem", "321", "132", knuth_rotem),
        Bijection("simion-schmidt", "Simion-Schmidt", "123", "132", simion_schmidt, simion_schmidt_inverse),
        Bijection("knuth-richards", "Knuth-Richards", "132", "123", knuth_richards),
        Bijection("west", "West", "123", "132", west),
        Bijection("krattenthaler", "Krattenthaler", "123", "132", krattenthaler),
        Bijection("reifegerste", "Reifegerste", "321", "132", reifegerste),
        Bijection("elizalde-deutsch", "Elizalde-Deutsch", "321", "132", elizalde_deutsch),
        Bijection("mansour-deng-du", "Mansour-Deng-Du", "321", "231", mansour_deng_du),
        Bijection("phi", "Phi", "231", "321", phi),
    )
}

_ALIASES = {b.name.lower().replace("-", ""): b.key for b in BIJECTIONS.values()}
_ALIASES.update({"sis": "simion-schmidt", "kri": "knuth-richards", "kro": "knuth-rotem",
                 "kr": "krattenthaler", "ed": "elizalde-deutsch", "mdd": "mansour-deng-du"})


def get(key: str) -> Bijection:
    k = key.strip().lower()
    if k in BIJECTIONS:
        return BIJECTIONS[k]
    k = k.replace("-", "").replace("_", "")
    if k in _ALIASES:
        return BIJECTIONS[_ALIASES[k]]
    raise KeyError(f"unknown bijection {key!r}; expected one of {', '.join(BIJECTIONS)}")


def _require(p: Perm, t: str, who: str) -> None:
    if not is_perm(p):
        raise DomainError(f"{p!r} is not a permutation")
    if not avoids(p, t):
        raise DomainError(
            f"input {format_perm(p, compact=True)} contains {t}; {who} expects a {t}-avoider",
            pattern=t,
        )


def apply(key: str, p: Perm) -> Perm:
    return get(key).forward(tuple(p))


class _Tables:
    """Lazily built inverse tables, one per (bijection, length)."""

    def __init__(self, cap: int = DEFAULT_TABLE_CAP):
        self.cap = cap
        self._tables: dict[tuple[str, int], dict[Perm, Perm]] = {}
        self._lock = threading.Lock()

    def get(self, b: Bijection, n: int) -> dict[Perm, Perm]:
        key = (b.key, n)
        table = self._tables.get(key)
        if table is not None:
            return table
        if n > self.cap:
            raise LengthCapError(
                f"no inversion table for {b.name} at length {n}; the cap is {self.cap}"
            )
        with self._lock:
            table = self._tables.get(key)
            if table is None:
                table = {b.forward(p): p for p in class_members(n, b.domain)}
                self._tables[key] = table
        return table


TABLES = _Tables()


def set_table_cap(cap: int) -> None:
    TABLES.cap = cap


def invert(key: str, q: Perm, use_table: bool = False) -> Perm:
    b = get(key)
    q = tuple(q)
    _require(q, b.codomain, f"inverse of {b.key}")
    if b.inverse is not None and not use_table:
        return b.inverse(q)
    return TABLES.get(b, len(q))[q]


def image_table(key: str, n: int) -> dict[Perm, Perm]:
    """Forward images of the whole domain class at length n."""
    b = get(key)
    return {q: p for p, q in TABLES.get(b, n).items()}


# -- codecs ------------------------------------------------------------------


@dataclass(frozen=True)
class Codec:
    """A map between a pattern class and Dyck paths; either direction may be missing."""

    key: str
    pattern: str
    encode: Optional[Callable[[Perm], str]] = None
    decode: Optional[Callable[[str], Perm]] = None


def _tableau_path(p: Perm) -> str:
    return paths.tableaux_to_path(paths.rsk_two_row(p))


def _tableau_perm(steps: str) -> Perm:
    return rsk_two_row_inverse(paths.path_to_tableaux(steps))


CODECS: dict[str, Codec] = {
    c.key: c
    for c in (
        Codec("standard", "132", paths.standard_f, paths.standard_f_inv),
        Codec("heights", "132", paths.krattenthaler_132, paths.standard_f_inv),
        Codec("reflected", "132", paths.ed_phi, paths.ed_phi_inv),
        Codec("ballot", "321", lambda p: paths.ballot_to_path(paths.rotem_encode(p))),
        Codec("tableaux", "321", _tableau_path, _tableau_perm),
        Codec("richards", "123", decode=paths.richards_decode),
        Codec("rmax", "123", encode=paths.krattenthaler_encode),
        Codec("walk", "321", encode=paths.ed_psi),
        Codec("zigzag", "321", decode=paths.mdd_zigzag_decode),
        Codec("trapezoid", "231", decode=paths.mdd_trapezoid_decode),
    )
}


def codec_roundtrip(key: str, n: int) -> list[str]:
    """Problems found checking the codec at length n; empty when it is a bijection onto the paths."""
    c = CODECS[key]
    members = class_members(n, c.pattern)
    all_paths = paths.dyck_paths(n)
    problems = []
    if c.encode is not None:
        images = [c.encode(p) for p in members]
        if sorted(images) != sorted(all_paths):
            problems.append(f"{key}: encoding at length {n} is not onto the Dyck paths")
        if c.decode is not None:
            problems += [
                f"{key}: {format_perm(p, compact=True)} -> {P} -> {format_perm(c.decode(P), compact=True)}"
                for p, P in zip(members, images)
                if c.decode(P) != p
            ]
    if c.decode is not None:
        decoded = [c.decode(P) for P in all_paths]
        if sorted(decoded) != sorted(members):
            problems.append(f"{key}: decoding at length {n} is not onto the {c.pattern}-avoiders")
        if c.encode is not None:
            problems += [
                f"{key}: {P} -> {format_perm(q, compact=True)} -> {c.encode(q)}"
                for P, q in zip(all_paths, decoded)
                if c.encode(q) != P
            ]
    return problems
