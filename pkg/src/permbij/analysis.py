"""Preserved statistic pairs, exact dependency checks, and relations between bijections.

Everything here is a bounded exhaustive computation: a claim "for all n" is
checked on every permutation of the relevant class up to ``max_len`` and the
bound is carried in each result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import bijections as bij
from .linalg import annihilates, integer_rank, kernel_vector
from .perm import Perm, apply_word, class_members, compose_words, inverse_word, trivial_group
from .stats import StatCatalog, StatDescriptor, build_catalog, parse_name, value_matrix
from .tables import CANONICAL_FORMS, CANONICAL_ROWS, EQUIDISTRIBUTION_ROWS, RELATIONS


def _pattern_image(word: str, pattern: str) -> str:
    return "".join(map(str, apply_word(word, tuple(int(ch) for ch in pattern))))


@dataclass(frozen=True)
class Composite:
    """The map outer∘B^exponent∘inner for a registered bijection B."""

    outer: str
    key: str
    exponent: int
    inner: str

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError("exponent must be 1 or -1")
        object.__setattr__(self, "outer", compose_words(self.outer, ""))
        object.__setattr__(self, "inner", compose_words(self.inner, ""))
        object.__setattr__(self, "key", bij.get(self.key).key)

    @property
    def bijection(self) -> bij.Bijection:
        return bij.get(self.key)

    @property
    def domain(self) -> str:
        b = self.bijection
        source = b.domain if self.exponent == 1 else b.codomain
        return _pattern_image(inverse_word(self.inner), source)

    @property
    def codomain(self) -> str:
        b = self.bijection
        target = b.codomain if self.exponent == 1 else b.domain
        return _pattern_image(self.outer, target)

    @property
    def name(self) -> str:
        parts = [*self.outer]
        parts.append(self.bijection.name + ("^-1" if self.exponent == -1 else ""))
        parts.extend(self.inner)
        return "∘".join(parts)

    def __call__(self, p: Perm) -> Perm:
        q = apply_word(self.inner, p)
        q = bij.apply(self.key, q) if self.exponent == 1 else bij.invert(self.key, q)
        return apply_word(self.outer, q)

    def __str__(self) -> str:
        return self.name


def as_map(b: "str | bij.Bijection | Composite") -> "bij.Bijection | Composite":
    if isinstance(b, str):
        return bij.get(b)
    return b


def _map_name(b) -> str:
    return b.name


def domain_perms(pattern: str, max_len: int, min_len: int = 1) -> list[Perm]:
    return [p for n in range(min_len, max_len + 1) for p in class_members(n, pattern)]


# -- preserved pairs ---------------------------------------------------------


@dataclass(frozen=True)
class PreservedPair:
    left: StatDescriptor
    right: StatDescriptor
    bijection: str
    verified_to: int

    def __str__(self) -> str:
        return f"{self.left.name} -> {self.right.name}"


def _rows_by_value(matrix: np.ndarray) -> dict[bytes, list[int]]:
    index: dict[bytes, list[int]] = {}
    for k, row in enumerate(matrix):
        index.setdefault(row.tobytes(), []).append(k)
    return index


def preserved_pairs(b, catalog: StatCatalog | None = None, max_len: int = 7) -> set[PreservedPair]:
    """All catalog pairs (s, t) with s(p) == t(b(p)) on the domain class, lengths 1..max_len."""
    b = as_map(b)
    catalog = catalog or build_catalog()
    reps = list(catalog.representatives)
    perms = domain_perms(b.domain, max_len)
    images = [b(p) for p in perms]
    left = value_matrix(reps, perms)
    right = _rows_by_value(value_matrix(reps, images))
    out = set()
    for k, row in enumerate(left):
        for j in right.get(row.tobytes(), ()):
            out.add(PreservedPair(reps[k], reps[j], _map_name(b), max_len))
    return out


def pair_holds(b, left: StatDescriptor, right: StatDescriptor, max_len: int) -> Perm | None:
    """None when the pair is preserved up to max_len, else the first counterexample."""
    b = as_map(b)
    for p in domain_perms(b.domain, max_len):
        if left(p) != right(b(p)):
            return p
    return None


# -- exact rank --------------------------------------------------------------


@dataclass(frozen=True)
class DependencyCertificate:
    stats: tuple[StatDescriptor, ...]
    coefficients: tuple[Fraction, ...]
    pattern: str
    lengths: range

    def __str__(self) -> str:
        terms = []
        for c, s in zip(self.coefficients, self.stats):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            terms.append(f"{sign} {coef}{s.name}")
        text = " ".join(terms)
        return (text[2:] if text.startswith("+ ") else text) + " = 0"


def class_matrix(stats: Sequence[StatDescriptor], pattern: str, max_len: int) -> list[list[int]]:
    perms = domain_perms(pattern, max_len)
    return value_matrix(list(stats), perms).T.tolist()


def rank_over_class(
    stats: Sequence[StatDescriptor | str], pattern: str, max_len: int = 7
) -> tuple[int, DependencyCertificate | None]:
    """Rank over the rationals of the statistics as functions on the class.

    Rows are the permutations of lengths 1..max_len (the empty permutation
    would add a zero row).  A certificate is a kernel vector re-checked
    against every row.
    """
    stats = tuple(parse_name(s) if isinstance(s, str) else s for s in stats)
    if not stats:
        raise ValueError("need at least one statistic")
    rows = class_matrix(stats, pattern, max_len)
    r = integer_rank(rows)
    if r == len(stats):
        return r, None
    vector = kernel_vector(rows, len(stats))
    if vector is None or not annihilates(rows, vector):
        raise AssertionError("kernel vector failed to annihilate the value matrix")
    cert = DependencyCertificate(stats, tuple(Fraction(v) for v in vector), pattern, range(1, max_len + 1))
    return r, cert


# -- result sets -------------------------------------------------------------


@dataclass
class ResultReport:
    bijection: str
    pairs: list[tuple[str, str]]
    all_preserved: bool
    left_rank_full: bool
    right_rank_full: bool
    maximal: bool
    rank_left: int
    rank_right: int
    preserve_len: int
    max_len: int
    witnesses: list[dict] = field(default_factory=list)
    dependent_side: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.all_preserved and self.left_rank_full and self.right_rank_full and self.maximal

    def to_dict(self) -> dict:
        return {
            "bijection": self.bijection,
            "pairs": [{"left": a, "right": b} for a, b in self.pairs],
            "all_preserved": self.all_preserved,
            "maximal": self.maximal,
            "rank_left": self.rank_left,
            "rank_right": self.rank_right,
            "left_rank_full": self.left_rank_full,
            "right_rank_full": self.right_rank_full,
            "preserved_to_length": self.preserve_len,
            "rank_and_maximality_to_length": self.max_len,
            "extra_pairs_dependent_on": self.dependent_side,
            "witnesses": self.witnesses,
        }


def _column_in_span(base_rows: list[list[int]], column: list[int], base_rank: int) -> bool:
    rows = [r + [c] for r, c in zip(base_rows, column)]
    return integer_rank(rows) == base_rank


def _with_trivial(rows: list[list[int]], perms: Sequence[Perm]) -> list[list[int]]:
    # every bijection preserves the length and the constant function
    return [r + [len(p), 1] for r, p in zip(rows, perms)]


def verify_result_set(
    b,
    listed: Iterable[tuple[str | StatDescriptor, str | StatDescriptor]],
    max_len: int = 7,
    preserve_len: int | None = None,
    catalog: StatCatalog | None = None,
    affine: bool = True,
) -> ResultReport:
    """Check a listed set of preserved pairs for a bijection.

    Pairs must hold up to ``preserve_len`` (default ``max_len``) and the two
    sides must be linearly independent over lengths 1..max_len.  The list is
    maximal when every further preserved catalog pair makes the left side
    dependent over the domain class or the right side dependent over the
    codomain class.  With ``affine`` the length n and the constant 1 join the
    span for that test, so pairs such as (m-s, m-t) next to a listed (s, t)
    count as trivial extensions.
    """
    b = as_map(b)
    catalog = catalog or build_catalog()
    preserve_len = preserve_len or max_len
    listed = [
        tuple(parse_name(x) if isinstance(x, str) else x for x in pair) for pair in listed
    ]
    witnesses: list[dict] = []

    all_preserved = True
    perms = domain_perms(b.domain, preserve_len)
    images = [b(p) for p in perms]
    for left, right in listed:
        bad = next((p for p, q in zip(perms, images) if left(p) != right(q)), None)
        if bad is not None:
            all_preserved = False
            witnesses.append(
                {
                    "kind": "not preserved",
                    "pair": [left.name, right.name],
                    "permutation": list(bad),
                    "image": list(b(bad)),
                }
            )

    lefts = [l for l, _ in listed]
    rights = [r for _, r in listed]
    left_perms = domain_perms(b.domain, max_len)
    right_perms = domain_perms(b.codomain, max_len)
    left_rows = class_matrix(lefts, b.domain, max_len)
    right_rows = class_matrix(rights, b.codomain, max_len)
    rank_left = integer_rank(left_rows)
    rank_right = integer_rank(right_rows)
    for side, stats, rank, pattern in (
        ("left", lefts, rank_left, b.domain),
        ("right", rights, rank_right, b.codomain),
    ):
        if rank < len(stats):
            _, cert = rank_over_class(stats, pattern, max_len)
            witnesses.append({"kind": f"{side} side dependent", "relation": str(cert)})

    if affine:
        left_rows = _with_trivial(left_rows, left_perms)
        right_rows = _with_trivial(right_rows, right_perms)
    span_left = integer_rank(left_rows)
    span_right = integer_rank(right_rows)

    listed_reps = {(catalog.representative(l), catalog.representative(r)) for l, r in listed}
    maximal = True
    fired = {"left": 0, "right": 0, "both": 0}
    for pair in sorted(preserved_pairs(b, catalog, max_len), key=lambda q: (q.left.name, q.right.name)):
        if (pair.left, pair.right) in listed_reps:
            continue
        left_dep = _column_in_span(left_rows, [pair.left(p) for p in left_perms], span_left)
        right_dep = _column_in_span(right_rows, [pair.right(q) for q in right_perms], span_right)
        if left_dep and right_dep:
            fired["both"] += 1
        elif left_dep:
            fired["left"] += 1
        elif right_dep:
            fired["right"] += 1
        else:
            maximal = False
            witnesses.append({"kind": "extends", "pair": [pair.left.name, pair.right.name]})

    return ResultReport(
        bijection=_map_name(b),
        pairs=[(l.name, r.name) for l, r in listed],
        all_preserved=all_preserved,
        left_rank_full=rank_left == len(lefts),
        right_rank_full=rank_right == len(rights),
        maximal=maximal,
        rank_left=rank_left,
        rank_right=rank_right,
        preserve_len=preserve_len,
        max_len=max_len,
        witnesses=witnesses,
        dependent_side=fired,
    )


def verify_lists(
    max_len: int = 7, preserve_len: int = 8, catalog: StatCatalog | None = None
) -> dict[str, ResultReport]:
    return {
        key: verify_result_set(key, row.pairs, max_len, preserve_len, catalog)
        for key, row in EQUIDISTRIBUTION_ROWS.items()
    }


def verify_canonical_lists(
    max_len: int = 7, preserve_len: int = 8, catalog: StatCatalog | None = None
) -> dict[str, list[ResultReport]]:
    """Each condensed row checked for every bijection it lists, in its 321-to-132 form."""
    return {
        label: [
            verify_result_set(canonical_321_132(key), row.pairs, max_len, preserve_len, catalog)
            for key in row.bijections
        ]
        for label, row in CANONICAL_ROWS.items()
    }


# -- relations between bijections --------------------------------------------


def canonical_321_132(key: str) -> Composite:
    """The bijection conjugated by trivial maps into a map from 321- to 132-avoiders."""
    b = bij.get(key)
    composite = Composite(*CANONICAL_FORMS[b.key])
    assert (composite.domain, composite.codomain) == ("321", "132"), composite
    return composite


# A normal form is (base bijection, outer word, exponent, inner word).
NormalForm = tuple[str, str, int, str]


def _invert_form(form: NormalForm) -> NormalForm:
    base, outer, e, inner = form
    return base, inverse_word(inner), -e, inverse_word(outer)


def _compose_form(outer: str, form: NormalForm, inner: str) -> NormalForm:
    base, u, e, v = form
    return base, compose_words(outer, u), e, compose_words(v, inner)


@lru_cache(maxsize=None)
def relation_normal_forms() -> dict[str, NormalForm]:
    """Each bijection written through a base bijection using only the listed relations.

    A relation equates terms u∘B^e∘v; solving the k-th term for B expresses it
    through the first term's bijection.
    """
    forms: dict[str, NormalForm] = {k: (k, "", 1, "") for k in bij.BIJECTIONS}
    for terms in RELATIONS:
        u0, base_key, e0, v0 = terms[0]
        base_form = forms[base_key]
        if e0 == -1:
            base_form = _invert_form(base_form)
        first = _compose_form(u0, base_form, v0)  # the common value of every term
        for u, key, e, v in terms[1:]:
            # u∘B^e∘v = first  =>  B^e = u^-1∘first∘v^-1
            solved = _compose_form(inverse_word(u), first, inverse_word(v))
            forms[key] = solved if e == 1 else _invert_form(solved)
    return forms


def predicted_form(c: Composite) -> NormalForm:
    form = relation_normal_forms()[c.key]
    if c.exponent == -1:
        form = _invert_form(form)
    return _compose_form(c.outer, form, c.inner)


def all_composites(keys: Iterable[str] | None = None) -> list[Composite]:
    keys = list(keys or bij.BIJECTIONS)
    group = trivial_group()
    return [
        Composite(outer, key, e, inner)
        for key in keys
        for e in (1, -1)
        for outer in group
        for inner in group
    ]


@dataclass(frozen=True)
class RelationClass:
    composites: tuple[Composite, ...]
    domain: str
    codomain: str
    verified_to: int

    def names(self) -> list[str]:
        return [c.name for c in self.composites]


def _extensional_key(c: Composite, max_len: int, cache: dict) -> tuple:
    inner_key = (c.key, c.exponent, c.inner)
    if inner_key not in cache:
        core = Composite("", c.key, c.exponent, c.inner)
        cache[inner_key] = [core(p) for p in domain_perms(c.domain, max_len)]
    images = tuple(apply_word(c.outer, q) for q in cache[inner_key])
    return c.domain, images


def trivial_relation_classes(keys: Iterable[str] | None = None, max_len: int = 8) -> list[RelationClass]:
    """Partition all composites t1∘B^e∘t2 into classes of extensionally equal maps."""
    groups: dict[tuple, list[Composite]] = {}
    cache: dict = {}
    for c in all_composites(keys):
        groups.setdefault(_extensional_key(c, max_len, cache), []).append(c)
    out = []
    for members in groups.values():
        out.append(RelationClass(tuple(members), members[0].domain, members[0].codomain, max_len))
    out.sort(key=lambda rc: rc.names())
    return out


def predicted_classes(keys: Iterable[str] | None = None) -> list[tuple[Composite, ...]]:
    groups: dict[NormalForm, list[Composite]] = {}
    for c in all_composites(keys):
        groups.setdefault(predicted_form(c), []).append(c)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: [c.name for c in g])


@dataclass
class RelationReport:
    """Extensional classes of composites against the classes the listed relations predict.

    A merge inside one family (two composites whose normal forms share a base
    bijection) is a self-symmetry u∘B∘v = B of that base; a merge across
    families would be a relation between different bijections.
    """

    identities: list[tuple[str, str, bool]]
    classes: int
    predicted: int
    cross_family_merges: list[list[str]]
    self_symmetry_merges: list[list[str]]
    unexpected_splits: list[list[str]]
    symmetries: dict[str, list[str]]
    max_len: int

    @property
    def identities_hold(self) -> bool:
        return all(ok for *_, ok in self.identities)

    @property
    def no_other_relations(self) -> bool:
        """No coincidence between different bijections beyond the listed ones."""
        return self.identities_hold and not self.cross_family_merges and not self.unexpected_splits

    @property
    def exact_match(self) -> bool:
        return self.no_other_relations and not self.self_symmetry_merges

    def to_dict(self) -> dict:
        return {
            "identities": [{"left": a, "right": b, "holds": ok} for a, b, ok in self.identities],
            "classes": self.classes,
            "predicted_classes": self.predicted,
            "exact_match": self.exact_match,
            "no_other_relations": self.no_other_relations,
            "cross_family_merges": self.cross_family_merges,
            "self_symmetry_merges": len(self.self_symmetry_merges),
            "unexpected_splits": self.unexpected_splits,
            "symmetries": self.symmetries,
            "verified_to_length": self.max_len,
        }


def check_identities(max_len: int = 8) -> list[tuple[str, str, bool]]:
    out = []
    for terms in RELATIONS:
        first = Composite(*terms[0])
        perms = domain_perms(first.domain, max_len)
        reference = [first(p) for p in perms]
        for term in terms[1:]:
            c = Composite(*term)
            ok = c.domain == first.domain and [c(p) for p in perms] == reference
            out.append((first.name, c.name, ok))
    return out


def symmetries(key: str, max_len: int = 7) -> list[tuple[str, str]]:
    """Pairs (u, v) of trivial words with u∘B∘v = B on lengths 1..max_len."""
    b = bij.get(key)
    perms = domain_perms(b.domain, max_len)
    reference = [bij.apply(b.key, p) for p in perms]
    out = []
    for outer in trivial_group():
        for inner in trivial_group():
            c = Composite(outer, b.key, 1, inner)
            if c.domain == b.domain and c.codomain == b.codomain and [c(p) for p in perms] == reference:
                out.append((outer, inner))
    return out


def verify_relations(max_len: int = 8) -> RelationReport:
    actual = trivial_relation_classes(max_len=max_len)
    predicted = predicted_classes()
    label = {c: predicted_form(c) for cls in predicted for c in cls}
    cross, inside = [], []
    for rc in actual:
        forms = {label[c] for c in rc.composites}
        if len(forms) > 1:
            (cross if len({f[0] for f in forms}) > 1 else inside).append(rc.names())
    actual_of = {c: k for k, rc in enumerate(actual) for c in rc.composites}
    splits = [[c.name for c in cls] for cls in predicted if len({actual_of[c] for c in cls}) > 1]
    bases = sorted({form[0] for form in relation_normal_forms().values()})
    syms = {}
    for key in bases:
        found = [Composite(u, key, 1, v).name for u, v in symmetries(key, min(max_len, 7)) if u or v]
        if found:
            syms[bij.get(key).name] = found
    return RelationReport(
        identities=check_identities(max_len),
        classes=len(actual),
        predicted=len(predicted),
        cross_family_merges=cross,
        self_symmetry_merges=inside,
        unexpected_splits=splits,
        symmetries=syms,
        max_len=max_len,
    )
