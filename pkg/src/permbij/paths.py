"""Dyck paths and the permutation codings that pass through them.

Paths are strings over ``u`` (north-east) and ``d`` (south-east).  The
module holds the standard recursive coding of 132-avoiders, Rotem's ballot
sequences, two-row Robinson-Schensted, Richards' decoder, Krattenthaler's
encoder, the Elizalde-Deutsch maps, and the two strip decompositions of
Mansour, Deng and Du.

>>> standard_f((7, 5, 6, 4, 2, 1, 3))
'uduudduduududd'
>>> reflect('uuddud')
'uduudd'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import DomainError, Perm, require_avoids

Path = str
Ballot = tuple[int, ...]
Run = tuple[int, int]
ReducedWord = tuple[Run, ...]


class PathError(ValueError):
    """A word that is not a Dyck path; ``index`` is the first offending step (0-based)."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def parse_path(text: str) -> Path:
    steps = text.strip().lower()
    check_path(steps)
    return steps


def check_path(steps: str) -> None:
    height = 0
    for k, step in enumerate(steps):
        if step == "u":
            height += 1
        elif step == "d":
            height -= 1
            if height < 0:
                raise PathError(f"prefix of length {k + 1} goes below the axis", k)
        else:
            raise PathError(f"step {k + 1} is {step!r}, expected 'u' or 'd'", k)
    if height:
        raise PathError(f"path ends at height {height}, not on the axis", len(steps))


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[Path, ...]:
    """All Dyck paths of semilength n in lexicographic order (d < u)."""
    if n == 0:
        return ("",)
    out = []
    for k in range(n):
        for a in dyck_paths(k):
            for b in dyck_paths(n - 1 - k):
                out.append("u" + a + "d" + b)
    return tuple(sorted(out))


def heights(steps: Path) -> list[int]:
    h = [0]
    for step in steps:
        h.append(h[-1] + (1 if step == "u" else -1))
    return h


def reflect(steps: Path) -> Path:
    """Mirror in the vertical line through the middle of the path."""
    return "".join("d" if s == "u" else "u" for s in reversed(steps))


def matching(steps: Path) -> list[int]:
    """Index of the partner of every step."""
    partner = [0] * len(steps)
    stack = []
    for k, s in enumerate(steps):
        if s == "u":
            stack.append(k)
        else:
            j = stack.pop()
            partner[j], partner[k] = k, j
    return partner


def peaks(steps: Path) -> frozenset[tuple[int, int]]:
    """Pairs (a, b) such that the a-th up-step is directly followed by the b-th down-step."""
    out = set()
    ups = downs = 0
    for k, s in enumerate(steps):
        if s == "u":
            ups += 1
            if k + 1 < len(steps) and steps[k + 1] == "d":
                out.add((ups, downs + 1))
        else:
            downs += 1
    return frozenset(out)


# -- the standard bijection --------------------------------------------------


def _f(letters: Sequence[int]) -> str:
    if not letters:
        return ""
    k = letters.index(max(letters))
    return "u" + _f(letters[:k]) + "d" + _f(letters[k + 1 :])


def standard_f(p: Perm) -> Path:
    """f(L n R) = u f(L) d f(R) on 132-avoiders."""
    require_avoids(p, "132", "standard_f")
    return _f(p)


def _first_return(steps: Path) -> int:
    height = 0
    for k, s in enumerate(steps):
        height += 1 if s == "u" else -1
        if height == 0:
            return k
    raise PathError("path never returns to the axis", len(steps))


def _f_inv(steps: Path) -> list[int]:
    if not steps:
        return []
    k = _first_return(steps)
    left, right = _f_inv(steps[1:k]), _f_inv(steps[k + 1 :])
    n = len(steps) // 2
    shift = len(right)
    return [a + shift for a in left] + [n] + right


def standard_f_inv(steps: Path) -> Perm:
    check_path(steps)
    return tuple(_f_inv(steps))


def krattenthaler_132(p: Perm) -> Path:
    """The left-to-right description of the standard coding via heights h_j.

    Each letter raises the path to one more than the number of larger letters
    to its right, then steps down once.
    """
    require_avoids(p, "132", "krattenthaler_132")
    out = []
    height = 0
    for j, a in enumerate(p):
        target = sum(b > a for b in p[j + 1 :])
        out.append("u" * (target + 1 - height) + "d")
        height = target
    return "".join(out)


# -- Rotem's ballot sequences ------------------------------------------------


def rotem_encode(p: Perm) -> Ballot:
    """Ballot sequence of a 321-avoider.

    >>> rotem_encode((2, 5, 1, 3, 4, 7, 6))
    (0, 0, 1, 3, 4, 4, 6)
    """
    require_avoids(p, "321", "rotem_encode")
    out = []
    high = 0
    for i, a in enumerate(p):
        if i == 0:
            out.append(0)
        elif a > high:
            out.append(out[-1])
        else:
            out.append(a)
        high = max(high, a)
    return tuple(out)


def check_ballot(b: Sequence[int]) -> None:
    for i, v in enumerate(b, 1):
        if not 0 <= v <= i - 1:
            raise ValueError(f"ballot entry {i} is {v}, outside 0..{i - 1}")
        if i > 1 and v < b[i - 2]:
            raise ValueError(f"ballot sequence decreases at entry {i}")


def parse_ballot(text: str) -> Ballot:
    text = text.strip()
    values = [int(t) for t in text.split()] if " " in text else [int(ch) for ch in text]
    check_ballot(values)
    return tuple(values)


def ballot_to_path(b: Sequence[int]) -> Path:
    """Dyck path of the bar diagram of a ballot sequence.

    The bar diagram is walked with north steps up to each bar height and one
    east step per bar, then north to the top; turning that walk by three
    eighths of a revolution reads it backwards with north as u, east as d.

    >>> ballot_to_path((0, 0, 1, 3, 4, 4, 6))
    'uduudduduududd'
    """
    check_ballot(b)
    walk = []
    level = 0
    for v in b:
        walk.append("N" * (v - level) + "E")
        level = v
    walk.append("N" * (len(b) - level))
    return "".join("u" if s == "N" else "d" for s in reversed("".join(walk)))


# -- two-row Robinson-Schensted ----------------------------------------------


@dataclass(frozen=True)
class TableauPair:
    P: tuple[tuple[int, ...], tuple[int, ...]]
    Q: tuple[tuple[int, ...], tuple[int, ...]]

    def __str__(self) -> str:
        def show(t):
            return " | ".join(" ".join(map(str, row)) or "-" for row in t)

        return f"P = ({show(self.P)}), Q = ({show(self.Q)})"


def rsk_two_row(p: Perm) -> TableauPair:
    """Row insertion for permutations whose tableaux have at most two rows."""
    rows: list[list[int]] = [[], []]
    rec: list[list[int]] = [[], []]
    for step, a in enumerate(p, 1):
        x = a
        for r in range(3):
            if r == 2:
                raise DomainError(
                    f"insertion of {a} creates a third row; the input contains 321", "321"
                )
            row = rows[r]
            bigger = [k for k, y in enumerate(row) if y > x]
            if not bigger:
                row.append(x)
                rec[r].append(step)
                break
            k = bigger[0]
            row[k], x = x, row[k]
    return TableauPair(
        (tuple(rows[0]), tuple(rows[1])), (tuple(rec[0]), tuple(rec[1]))
    )


def check_tableau_pair(t: TableauPair) -> int:
    n = sum(map(len, t.P))
    for tab in (t.P, t.Q):
        top, bottom = tab
        if sorted(top + bottom) != list(range(1, n + 1)):
            raise ValueError("tableau entries must be 1..n")
        if len(bottom) > len(top):
            raise ValueError("second row longer than the first")
        for row in tab:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must increase")
        if any(top[k] >= bottom[k] for k in range(len(bottom))):
            raise ValueError("columns must increase")
    if (len(t.P[0]), len(t.P[1])) != (len(t.Q[0]), len(t.Q[1])):
        raise ValueError("P and Q differ in shape")
    return n


def tableaux_to_path(t: TableauPair) -> Path:
    """A from P (first row u, second row d), B from Q with the roles swapped, path A + reversed B."""
    n = check_tableau_pair(t)
    top_p, top_q = set(t.P[0]), set(t.Q[0])
    a = "".join("u" if k in top_p else "d" for k in range(1, n + 1))
    b = "".join("d" if k in top_q else "u" for k in range(1, n + 1))
    return a + b[::-1]


def path_to_tableaux(steps: Path) -> TableauPair:
    check_path(steps)
    n = len(steps) // 2
    a, b = steps[:n], steps[n:][::-1]
    P = (tuple(k for k in range(1, n + 1) if a[k - 1] == "u"), tuple(k for k in range(1, n + 1) if a[k - 1] == "d"))
    Q = (tuple(k for k in range(1, n + 1) if b[k - 1] == "d"), tuple(k for k in range(1, n + 1) if b[k - 1] == "u"))
    return TableauPair(P, Q)


# -- Richards' decoder -------------------------------------------------------


def richards_decode(steps: Path) -> Perm:
    """Richards' map from Dyck paths to 123-avoiders.

    >>> richards_decode('uudduududuuddd')
    (5, 7, 4, 3, 6, 1, 2)
    """
    check_path(steps)
    n = len(steps) // 2
    b = " " + steps + " "  # 1-based, with a sentinel past the end
    a = [0] * (n + 2)
    r = s = n + 1
    j = 1
    for i in range(1, n + 1):
        if b[j] == "u":
            while True:
                s -= 1
                j += 1
                if b[j] == "d":
                    break
            a[s] = i
        else:
            while True:
                r -= 1
                if a[r] == 0:
                    break
            a[r] = i
        j += 1
    return tuple(a[1 : n + 1])


# -- Krattenthaler's encoder -------------------------------------------------


def krattenthaler_encode(p: Perm, reflected: bool = True) -> Path:
    """Right-to-left maxima become up-steps, the gaps between them down-steps.

    >>> krattenthaler_encode((5, 3, 6, 1, 4, 2))
    'uuudduuddudd'
    """
    require_avoids(p, "123", "krattenthaler_encode")
    out = []
    previous = 0
    gap = 0
    for a in reversed(p):
        if a > previous:
            if out or previous:
                out.append("d" * (gap + 1))
            out.append("u" * (a - previous))
            previous, gap = a, 0
        else:
            gap += 1
    if p:
        out.append("d" * (gap + 1))
    steps = "".join(out)
    return reflect(steps) if reflected else steps


# -- Elizalde and Deutsch ----------------------------------------------------


def ed_psi(p: Perm) -> Path:
    """Walk the permutation array from the top-left corner keeping the crosses on the right.

    Row r of the array holds a cross in column p(r).  The walk crosses row r at
    the largest column boundary that stays weakly below the diagonal and to the
    left of every cross in rows r and below.
    """
    require_avoids(p, "321", "ed_psi")
    n = len(p)
    out = []
    x = 0
    suffix_min = n + 1
    bound = [0] * n
    for r in range(n - 1, -1, -1):
        suffix_min = min(suffix_min, p[r])
        bound[r] = min(r, suffix_min - 1)
    for r in range(n):
        out.append("d" * (bound[r] - x) + "u")
        x = bound[r]
    out.append("d" * (n - x))
    return "".join(out)


def ed_phi(p: Perm) -> Path:
    return reflect(standard_f(p))


def ed_phi_inv(steps: Path) -> Perm:
    return standard_f_inv(reflect(steps))


def _psi_order(n: int) -> list[int]:
    return [(i + 1) // 2 if i % 2 else 2 * n + 1 - i // 2 for i in range(1, 2 * n + 1)]


def ed_Psi(steps: Path) -> Path:
    """Read steps outside-in, alternating ends; unread partners give u.

    >>> ed_Psi('uuduudududddud')
    'uuuddduduuddud'
    """
    check_path(steps)
    partner = matching(steps)
    read = [False] * len(steps)
    out = []
    for k in _psi_order(len(steps) // 2):
        k -= 1
        out.append("d" if read[partner[k]] else "u")
        read[k] = True
    return "".join(out)


@lru_cache(maxsize=None)
def _Psi_inverse_table(n: int) -> dict[Path, Path]:
    table = {ed_Psi(P): P for P in dyck_paths(n)}
    if len(table) != len(dyck_paths(n)):
        raise AssertionError(f"Psi is not injective at semilength {n}")
    return table


def ed_Psi_inv(steps: Path) -> Path:
    check_path(steps)
    return _Psi_inverse_table(len(steps) // 2)[steps]


# -- reduced words -----------------------------------------------------------


def check_reduced_word(w: Sequence[Run], n: int) -> None:
    previous = 0
    for h, t in w:
        if not 1 <= t <= h <= n - 1:
            raise ValueError(f"run s{h}..s{t} does not fit in S_{n}")
        if h <= previous:
            raise ValueError("run heads must strictly increase")
        previous = h


def canonical_decomposition(p: Perm) -> ReducedWord:
    """Runs (h, t) for s_h s_{h-1} ... s_t with increasing heads.

    The run with head h moves the letter h+1 from position h+1 to position t,
    so t is the place of h+1 among the letters 1..h+1 of p.

    >>> canonical_decomposition((4, 1, 5, 2, 6, 3))
    ((3, 1), (4, 3), (5, 5))
    """
    runs = []
    for v in range(2, len(p) + 1):
        place = [a for a in p if a <= v].index(v) + 1
        if place < v:
            runs.append((v - 1, place))
    return tuple(runs)


def apply_reduced_word(w: Sequence[Run], n: int) -> Perm:
    check_reduced_word(w, n)
    letters = list(range(1, n + 1))
    for h, t in w:
        for k in range(h, t - 1, -1):
            letters[k - 1], letters[k] = letters[k], letters[k - 1]
    return tuple(letters)


def format_reduced_word(w: Sequence[Run]) -> str:
    return "".join("(" + "".join(f"s{k}" for k in range(h, t - 1, -1)) + ")" for h, t in w)


def run_from_labels(labels: Sequence[int]) -> Run:
    distinct = sorted(set(labels))
    if distinct != list(range(distinct[0], distinct[-1] + 1)):
        raise AssertionError(f"strip labels are not consecutive: {distinct}")
    return distinct[-1], distinct[0]


# -- Mansour, Deng and Du ----------------------------------------------------


Cell = tuple[int, int]  # leftmost corner (x, y) of a unit square standing on a vertex


def cells_under(steps: Path) -> frozenset[Cell]:
    """Unit squares (tilted by 45 degrees) between the path and the axis."""
    h = heights(steps)
    return frozenset(
        (x, y)
        for x in range(len(steps) - 1)
        for y in range(1, h[x + 1])
        if (x + y) % 2 == 0 and h[x + 1] >= y + 1
    )


def path_over(cells: frozenset[Cell], length: int) -> Path:
    """Lowest Dyck path lying above every cell (the inverse of cells_under)."""
    h = [x % 2 for x in range(length + 1)]
    for x, y in cells:
        h[x] = max(h[x], y)
        h[x + 1] = max(h[x + 1], y + 1)
        h[x + 2] = max(h[x + 2], y)
    return "".join("u" if b > a else "d" for a, b in zip(h, h[1:]))


def xy_label(cell: Cell) -> int:
    x, y = cell
    return (x + y) // 2


def x_minus_y_label(cell: Cell) -> int:
    x, y = cell
    return (x - y + 2) // 2


def essential_cells(steps: Path) -> list[Cell]:
    """Cells whose leftmost corner sits between two consecutive up-steps, left to right."""
    h = heights(steps)
    return [(x, h[x]) for x in range(1, len(steps)) if steps[x - 1] == "u" and steps[x] == "u"]


def zigzag_strip(steps: Path) -> list[Cell]:
    """Cells hugging the path from the rightmost essential cell to the next return to the axis."""
    ess = essential_cells(steps)
    if not ess:
        return []
    x0, _ = ess[-1]
    h = heights(steps)
    strip: list[Cell] = []
    for x in range(x0, len(steps)):
        if steps[x] == "u":
            cell = (x, h[x])
        else:
            if h[x] < 2:
                break
            cell = (x - 1, h[x] - 1)
        if not strip or strip[-1] != cell:
            strip.append(cell)
    return strip


def zigzag_decomposition(steps: Path) -> ReducedWord:
    check_path(steps)
    runs = []
    cells = cells_under(steps)
    while True:
        strip = zigzag_strip(steps)
        if not strip:
            break
        runs.append(run_from_labels([xy_label(c) for c in strip]))
        cells = cells - set(strip)
        steps = path_over(cells, len(steps))
    return tuple(reversed(runs))


def mdd_zigzag_decode(steps: Path) -> Perm:
    """321-avoider from peeling zigzag strips labelled by x+y.

    >>> mdd_zigzag_decode('uudd')
    (2, 1)
    """
    return apply_reduced_word(zigzag_decomposition(steps), len(steps) // 2)


def _trapezoid_runs(steps: Path, start: int, stop: int, base: int, h: list[int]) -> list[Run]:
    # steps[start:stop] is a Dyck path sitting on the line y = base
    last_component = None
    k = start
    while k < stop:
        j = k + 1
        while h[j + 1] != base:
            j += 1
        if steps[k + 1] == "u":
            last_component = (k, j)
        k = j + 1
    if last_component is None:
        return []
    a, b = last_component  # left arm at a, matching down-step at b
    strip = [(x, base + 1) for x in range(a + 1, b - 1, 2)]
    run = run_from_labels([x_minus_y_label(c) for c in strip])
    before = _trapezoid_runs(steps, start, a, base, h)
    inside = _trapezoid_runs(steps, a + 1, b, base + 1, h)
    return before + inside + [run]


def trapezoid_decomposition(steps: Path) -> ReducedWord:
    check_path(steps)
    return tuple(_trapezoid_runs(steps, 0, len(steps), 0, heights(steps)))


def mdd_trapezoid_decode(steps: Path) -> Perm:
    """231-avoider from the trapezoidal strips labelled by x-y.

    >>> mdd_trapezoid_decode('uudd')
    (2, 1)
    """
    return apply_reduced_word(trapezoid_decomposition(steps), len(steps) // 2)


def ascii_path(steps: Path) -> str:
    """Two-dimensional rendering with / and \\."""
    h = heights(steps)
    top = max(h) if h else 0
    grid = [[" "] * len(steps) for _ in range(top)]
    for x, s in enumerate(steps):
        if s == "u":
            grid[top - 1 - h[x]][x] = "/"
        else:
            grid[top - h[x]][x] = "\\"
    return "\n".join("".join(row).rstrip() for row in grid)


def all_paths_up_to(max_n: int, start: int = 1) -> Iterator[Path]:
    for n in range(start, max_n + 1):
        yield from dyck_paths(n)

