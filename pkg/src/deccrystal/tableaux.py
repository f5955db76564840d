"""Shifted tableaux on strict partitions, stored bottom row first.

A strict partition ``shape = (l1 > l2 > ... > lk > 0)`` has shifted diagram
boxes ``(i, j)`` with ``1 <= i <= k`` and ``i <= j <= shape[i-1] + i - 1``;
row 1 is the longest, bottom row.  ``rows[i-1][j-i]`` holds the doubled
letter in box ``(i, j)``.

The module knows three tableau families on a shape:

* semistandard shifted tableaux (rows/columns weakly increase, a value
  repeats in a row only unprimed and in a column only primed),
* decomposition tableaux (every row is a hook word and each row is a
  maximum-length hook subword of it prepended with the row above),
* primed decomposition tableaux (primes allowed on row middles only).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .words import (FLAVOR_QPLUS, Word, ceil_of, e_word, f_word, is_primed,
                    letter_str, parse_letter, primed, unprimed, weight_of)

Shape = tuple[int, ...]


def check_shape(shape: Iterable[int]) -> Shape:
    shape = tuple(shape)
    if any(a <= 0 for a in shape):
        raise ValueError(f"shape parts must be positive: {shape}")
    if any(a <= b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"shape must be strictly decreasing: {shape}")
    return shape


def parse_shape(text: str) -> Shape:
    text = text.strip()
    if not text:
        return ()
    return check_shape(int(tok) for tok in text.replace(",", " ").split())


def shifted_cells(shape: Shape) -> list[tuple[int, int]]:
    """All boxes (i, j) of the shifted diagram, row 1 first."""
    return [(i, j) for i, part in enumerate(shape, start=1)
            for j in range(i, part + i)]


class ShiftedTableau:
    """An immutable filling of a shifted diagram by doubled letters."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.shape = check_shape(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - i]

    def weight(self, n: int) -> tuple[int, ...]:
        return weight_of(self.reading_word(), n)

    def size(self) -> int:
        return sum(self.shape)

    def reading_word(self) -> Word:
        """Row reading word: rows concatenated, top row first."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def revrow_word(self) -> Word:
        return tuple(reversed(self.reading_word()))

    def unprimed(self) -> "ShiftedTableau":
        return ShiftedTableau(tuple(unprimed(ceil_of(x)) for x in row)
                              for row in self.rows)

    def with_entry(self, i: int, j: int, letter: int) -> "ShiftedTableau":
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - i] = letter
        return ShiftedTableau(rows)

    def compact_str(self) -> str:
        return "|".join(" ".join(letter_str(x) for x in row)
                        for row in self.rows)

    def ascii(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(letter_str(x)) for row in self.rows for x in row) + 1
        lines = []
        for i in range(len(self.rows), 0, -1):
            pad = " " * (width * (i - 1))
            cells = "".join(letter_str(x).rjust(width)
                            for x in self.rows[i - 1])
            lines.append(pad + cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"shape": list(self.shape),
                "rows": [[letter_str(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "ShiftedTableau":
        t = cls([parse_letter(tok) for tok in row] for row in data["rows"])
        if list(t.shape) != list(data["shape"]):
            raise ValueError("shape field disagrees with row lengths")
        return t

    def __eq__(self, other):
        return isinstance(other, ShiftedTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ShiftedTableau({self.compact_str()!r})"


EMPTY_TABLEAU = ShiftedTableau(())


# ---------------------------------------------------------------------------
# Hook words and decomposition tableaux


def middle_index(values: tuple[int, ...]) -> int:
    """Length of the weakly decreasing prefix (1-based middle position)."""
    if not values:
        raise ValueError("empty row has no middle")
    m = 1
    while m < len(values) and values[m] <= values[m - 1]:
        m += 1
    return m


def is_hook_word(values: tuple[int, ...]) -> bool:
    """A hook word weakly decreases, then strictly increases."""
    if not values:
        return False
    m = middle_index(values)
    return all(values[t] < values[t + 1] for t in range(m - 1, len(values) - 1))


def max_hook_subword_len(values: tuple[int, ...]) -> int:
    """Length of a longest subsequence that is a hook word (brute force)."""
    best = 0
    idx = range(len(values))
    for r in range(len(values), best, -1):
        if any(is_hook_word(tuple(values[t] for t in picks))
               for picks in combinations(idx, r)):
            return r
    return best


def _row_values(row: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(ceil_of(x) for x in row)


def _rows_compatible(lower: tuple[int, ...], upper: tuple[int, ...]) -> bool:
    """Pairwise test: upper row on top of lower row in a decomposition
    tableau.  ``lower`` must be the longer row; both are unprimed values."""
    for k in range(1, len(upper) + 1):
        uk = upper[k - 1]
        if lower[0] <= uk:
            return False
        if uk < lower[0] < lower[k]:
            return False
        for j in range(1, k):
            if lower[j] <= uk <= upper[j - 1]:
                return False
            if uk < lower[j] < lower[k]:
                return False
    return True


def is_decomposition_tableau(t: ShiftedTableau) -> bool:
    """Unprimed tableau whose rows are hook words such that each row is a
    maximum-length hook subword of (row above) + (row)."""
    if any(is_primed(x) for row in t.rows for x in row):
        return False
    vals = [_row_values(row) for row in t.rows]
    if not all(is_hook_word(v) for v in vals):
        return False
    return all(_rows_compatible(vals[i], vals[i + 1])
               for i in range(len(vals) - 1))


def is_decomposition_tableau_slow(t: ShiftedTableau) -> bool:
    """Independent check straight from the defining property."""
    if any(is_primed(x) for row in t.rows for x in row):
        return False
    vals = [_row_values(row) for row in t.rows]
    if not all(is_hook_word(v) for v in vals):
        return False
    return all(max_hook_subword_len(vals[i + 1] + vals[i]) == len(vals[i])
               for i in range(len(vals) - 1))


def is_primed_decomposition_tableau(t: ShiftedTableau) -> bool:
    """Primes may only sit on the middle element of each row."""
    for row in t.rows:
        vals = _row_values(row)
        if not is_hook_word(vals):
            return False
        m = middle_index(vals)
        if any(is_primed(x) for pos, x in enumerate(row, start=1) if pos != m):
            return False
    return is_decomposition_tableau(t.unprimed())


def is_semistandard(t: ShiftedTableau, primed_diagonal: bool = True) -> bool:
    """Semistandard shifted tableau; forbid primed diagonal entries when
    ``primed_diagonal`` is false."""
    for i, row in enumerate(t.rows, start=1):
        if not primed_diagonal and is_primed(row[0]):
            return False
        for a, b in zip(row, row[1:]):
            if a > b or (a == b and is_primed(a)):
                return False
        if i > 1:
            below = t.rows[i - 2]
            for j in range(i, i + len(row)):
                a, b = below[j - (i - 1)], row[j - i]
                if a > b or (a == b and not is_primed(a)):
                    return False
    return True


def is_standard_recording(t: ShiftedTableau) -> bool:
    """Shifted standard tableau on 1..m with optional off-diagonal primes."""
    m = t.size()
    vals = sorted(ceil_of(x) for row in t.rows for x in row)
    if vals != list(range(1, m + 1)):
        return False
    for i, row in enumerate(t.rows, start=1):
        if is_primed(row[0]):
            return False
        if any(ceil_of(a) >= ceil_of(b) for a, b in zip(row, row[1:])):
            return False
        if i > 1:
            below = t.rows[i - 2]
            if any(ceil_of(below[j - i + 1]) >= ceil_of(row[j - i])
                   for j in range(i, i + len(row))):
                return False
    return True


# ---------------------------------------------------------------------------
# Crystal operators through the reversed reading word


def tableau_from_revrow(shape: Shape, revword: Word) -> ShiftedTableau:
    shape = check_shape(shape)
    if len(revword) != sum(shape):
        raise ValueError("word length does not match shape size")
    word = tuple(reversed(revword))
    rows, pos = [], 0
    for part in reversed(shape):
        rows.append(word[pos:pos + part])
        pos += part
    return ShiftedTableau(reversed(rows))


def tableau_e(t: ShiftedTableau, i: int, n: int,
              flavor: str = FLAVOR_QPLUS) -> ShiftedTableau | None:
    out = e_word(t.revrow_word(), i, n, flavor)
    if out is None:
        return None
    result = tableau_from_revrow(t.shape, out)
    if not is_primed_decomposition_tableau(result):
        raise ValueError(f"operator e_{i} left the tableau family: {result!r}")
    return result


def tableau_f(t: ShiftedTableau, i: int, n: int,
              flavor: str = FLAVOR_QPLUS) -> ShiftedTableau | None:
    out = f_word(t.revrow_word(), i, n, flavor)
    if out is None:
        return None
    result = tableau_from_revrow(t.shape, out)
    if not is_primed_decomposition_tableau(result):
        raise ValueError(f"operator f_{i} left the tableau family: {result!r}")
    return result


# ---------------------------------------------------------------------------
# Border strips and extreme tableaux


def border_strips(shape: Shape) -> list[frozenset[tuple[int, int]]]:
    """Peel the shifted diagram into border strips, outermost first.

    Each strip starts at the last box of the bottom row and walks up when
    the box above remains, otherwise left, stopping on the diagonal.
    """
    shape = check_shape(shape)
    boxes = set(shifted_cells(shape))
    strips = []
    while boxes:
        row1 = max(j for (i, j) in boxes if i == 1)
        strip = set()
        i, j = 1, row1
        while True:
            strip.add((i, j))
            if i == j:
                break
            if (i + 1, j) in boxes:
                i += 1
            else:
                j -= 1
        strips.append(frozenset(strip))
        boxes -= strip
    return strips


def highest_tableau(shape: Shape) -> ShiftedTableau:
    """The decomposition tableau whose s-th border strip is filled by s."""
    shape = check_shape(shape)
    fill = {}
    for s, strip in enumerate(border_strips(shape), start=1):
        for box in strip:
            fill[box] = unprimed(s)
    return ShiftedTableau([fill[(i, j)] for j in range(i, part + i)]
                          for i, part in enumerate(shape, start=1))


def lowest_tableau(shape: Shape, n: int) -> ShiftedTableau:
    """Row i filled with the constant value n + 1 - i."""
    shape = check_shape(shape)
    if len(shape) > n:
        raise ValueError(f"shape {shape} has more than n={n} rows")
    return ShiftedTableau([unprimed(n + 1 - i)] * part
                          for i, part in enumerate(shape, start=1))


def hat_lowest_tableau(shape: Shape, n: int) -> ShiftedTableau:
    """Lowest tableau with the middle (= last) entry of each row primed."""
    t = lowest_tableau(shape, n)
    rows = [row[:-1] + (row[-1] - 1,) for row in t.rows]
    return ShiftedTableau(rows)


# ---------------------------------------------------------------------------
# Enumeration


def _hook_words(length: int, n: int) -> Iterator[tuple[int, ...]]:
    """All hook words of the given length over values 1..n."""
    def extend(prefix: list[int], decreasing: bool):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        last = prefix[-1]
        if decreasing:
            for v in range(1, last + 1):
                prefix.append(v)
                yield from extend(prefix, True)
                prefix.pop()
        for v in range(last + 1, n + 1):
            prefix.append(v)
            yield from extend(prefix, False)
            prefix.pop()

    if length == 0:
        yield ()
        return
    for v in range(1, n + 1):
        yield from extend([v], True)


def enumerate_dectab(shape: Shape, n: int) -> Iterator[ShiftedTableau]:
    """All decomposition tableaux of the shape with values at most n."""
    shape = check_shape(shape)
    if not shape:
        yield EMPTY_TABLEAU
        return

    def build(i: int, rows_above: list[tuple[int, ...]]):
        # rows_above holds rows l(shape)..i+1 (top row first)
        if i == 0:
            yield ShiftedTableau([tuple(unprimed(v) for v in vals)
                                  for vals in reversed(rows_above)])
            return
        upper = rows_above[-1] if rows_above else None
        for cand in _hook_words(shape[i - 1], n):
            if upper is None or _rows_compatible(cand, upper):
                rows_above.append(cand)
                yield from build(i - 1, rows_above)
                rows_above.pop()

    yield from build(len(shape), [])


def enumerate_primed_dectab(shape: Shape, n: int) -> Iterator[ShiftedTableau]:
    """All primed decomposition tableaux: primes range over row middles."""
    for t in enumerate_dectab(shape, n):
        middles = [(i, middle_index(_row_values(row)) + i - 1)
                   for i, row in enumerate(t.rows, start=1)]
        for mask in range(1 << len(middles)):
            out = t
            for bit, (i, j) in enumerate(middles):
                if mask >> bit & 1:
                    out = out.with_entry(i, j, out.entry(i, j) - 1)
            yield out


def enumerate_shtab(shape: Shape, n: int,
                    primed_diagonal: bool = False) -> Iterator[ShiftedTableau]:
    """Semistandard shifted tableaux with values at most n.

    With ``primed_diagonal`` diagonal boxes may be primed as well.
    """
    shape = check_shape(shape)
    if not shape:
        yield EMPTY_TABLEAU
        return
    cells = shifted_cells(shape)
    rows = [[0] * part for part in shape]

    def options(i: int, j: int) -> Iterator[int]:
        lo = 1
        if j > i:
            left = rows[i - 1][j - i - 1]
            lo = left if not is_primed(left) else left + 1
        if i > 1:
            below = rows[i - 2][j - i + 1]
            lo = max(lo, below + 1 if not is_primed(below) else below)
        for letter in range(lo, 2 * n + 1):
            if is_primed(letter) and j == i and not primed_diagonal:
                continue
            yield letter

    def fill(pos: int):
        if pos == len(cells):
            yield ShiftedTableau([tuple(r) for r in rows])
            return
        i, j = cells[pos]
        for letter in options(i, j):
            rows[i - 1][j - i] = letter
            yield from fill(pos + 1)

    yield from fill(0)


def enumerate_standard_recording(shape: Shape) -> Iterator[ShiftedTableau]:
    """Shifted standard tableaux with all off-diagonal prime patterns."""
    shape = check_shape(shape)
    if not shape:
        yield EMPTY_TABLEAU
        return
    m = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def grow(t: int):
        if t > m:
            yield [tuple(r) for r in rows]
            return
        for i in range(len(shape)):
            length = len(rows[i])
            if length >= shape[i]:
                continue
            if i > 0 and len(rows[i - 1]) < length + 2:
                continue  # keep row lengths a strict partition prefix
            rows[i].append(unprimed(t))
            yield from grow(t + 1)
            rows[i].pop()

    for filled in grow(1):
        off_diag = [(i + 1, i + 1 + pos)
                    for i, row in enumerate(filled)
                    for pos in range(1, len(row))]
        base = ShiftedTableau(filled)
        for mask in range(1 << len(off_diag)):
            out = base
            for bit, (i, j) in enumerate(off_diag):
                if mask >> bit & 1:
                    out = out.with_entry(i, j, out.entry(i, j) - 1)
            yield out


def strict_partitions(size: int, max_len: int | None = None) -> list[Shape]:
    """All strict partitions of the given size (optionally bounded length)."""
    out: list[Shape] = []

    def rec(remaining: int, biggest: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for part in range(min(remaining, biggest), 0, -1):
            acc.append(part)
            rec(remaining - part, part - 1, acc)
            acc.pop()

    rec(size, size, [])
    return out
