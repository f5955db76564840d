"""Decomposition insertion of primed words into shifted tableaux.

``dec_insert`` inserts one primed letter into a primed decomposition
tableau; ``insert_word`` inserts a word letter by letter from the right,
building the insertion tableau P and a primed standard recording tableau Q.
``inverse_insertion`` recovers the unique word from a (P, Q) pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import (EMPTY_TABLEAU, ShiftedTableau, is_hook_word,
                       is_primed_decomposition_tableau, is_standard_recording,
                       middle_index)
from .words import Word, ceil_of, is_primed, letter_str, primed, unprimed

EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class InsertionStep:
    row: int                 # 1-based row the letter entered
    incoming: int            # doubled letter inserted into this row
    bumped: int | None       # doubled letter carried to the next row
    parity: str | None       # EVEN/ODD when the insertion halted here

    def __str__(self):
        what = (f"bumps {letter_str(self.bumped)}" if self.bumped is not None
                else f"halts ({self.parity})")
        return f"row {self.row}: insert {letter_str(self.incoming)}, {what}"


def _bump_values(values: list[int], incoming: int):
    """One bumping step on a hook word of plain values.

    Returns ``(new_values, carried_value)`` with ``carried_value`` None when
    the letter was appended at the end.
    """
    values = list(values)
    if is_hook_word(tuple(values + [incoming])):
        return values + [incoming], None
    m = middle_index(tuple(values))
    # replace the leftmost entry of the increasing part that is >= incoming
    t = next(pos for pos in range(m, len(values)) if values[pos] >= incoming)
    bumped = values[t]
    out = list(values)
    out[t] = incoming
    # the bumped entry replaces the leftmost strictly smaller entry of the
    # weakly decreasing part
    p = next(pos for pos in range(m) if out[pos] < bumped)
    carried = out[p]
    out[p] = bumped
    return out, carried


def dec_insert(letter: int, t: ShiftedTableau):
    """Insert one primed letter, returning (tableau, box, parity, steps)."""
    rows = [list(r) for r in t.rows]
    steps: list[InsertionStep] = []
    incoming = letter
    row_idx = 0
    while True:
        value = ceil_of(incoming)
        if row_idx == len(rows):
            rows.append([])
        row = rows[row_idx]
        old_mid = middle_index(tuple(row)) if row else None
        mid_primed = old_mid is not None and is_primed(row[old_mid - 1])
        values = [ceil_of(x) for x in row]
        new_values, carried_value = _bump_values(values, value)
        new_mid = middle_index(tuple(new_values))
        new_row = [unprimed(v) for v in new_values]
        moved = old_mid is None or new_mid != old_mid
        if moved:
            # the middle is new: it inherits the prime of the inserted letter
            if is_primed(incoming):
                new_row[new_mid - 1] -= 1
            carry_primed = mid_primed
            halt_parity = ODD if mid_primed else EVEN
        else:
            if mid_primed:
                new_row[new_mid - 1] -= 1
            carry_primed = is_primed(incoming)
            halt_parity = ODD if is_primed(incoming) else EVEN
        rows[row_idx] = new_row
        if carried_value is None:
            steps.append(InsertionStep(row_idx + 1, incoming, None, halt_parity))
            box = (row_idx + 1, row_idx + len(new_row))
            result = ShiftedTableau(rows)
            return result, box, halt_parity, steps
        carried = primed(carried_value) if carry_primed else unprimed(carried_value)
        steps.append(InsertionStep(row_idx + 1, incoming, carried, None))
        incoming = carried
        row_idx += 1


def insert_word(word: Word):
    """Insert the word from its last letter to its first.

    Returns ``(P, Q)``: the box added at step t (inserting the t-th letter
    from the right) receives the recording entry t, primed when the
    insertion halted with odd parity.
    """
    p = EMPTY_TABLEAU
    q_rows: list[list[int]] = []
    for t, letter in enumerate(reversed(word), start=1):
        p, (bi, bj), parity, _ = dec_insert(letter, p)
        while len(q_rows) < bi:
            q_rows.append([])
        q_rows[bi - 1].append(primed(t) if parity == ODD else unprimed(t))
    q = ShiftedTableau(q_rows) if q_rows else EMPTY_TABLEAU
    return p, q


# ---------------------------------------------------------------------------
# Inverse insertion


def _reverse_bump_row(row: tuple[int, ...], carried: int):
    """Candidate inversions of one bumping step.

    Yields ``(previous_row, incoming)`` pairs; each candidate is validated
    by replaying the forward step, so at most the true one survives."""
    m_new = middle_index(row)
    seen = set()
    for m_old in {m_new, m_new - 1}:
        if not 1 <= m_old <= len(row):
            continue
        ps = [pos for pos in range(m_old) if row[pos] > carried]
        if not ps:
            continue
        p = ps[-1]
        b = row[p]
        ts = [pos for pos in range(m_old, len(row)) if row[pos] <= b]
        if not ts:
            continue
        t = ts[-1]
        incoming = row[t]
        old = list(row)
        old[p], old[t] = carried, b
        key = (tuple(old), incoming)
        if key in seen or not is_hook_word(tuple(old)):
            continue
        seen.add(key)
        if _bump_values(old, incoming) == (list(row), carried):
            yield tuple(old), incoming


def _unwind_once(rows: list[list[int]], box_row: int) -> list[int]:
    """Remove the last box of ``box_row`` and reverse-bump to row 1.

    ``rows`` holds plain values and is modified in place; returns the list
    of possible extracted letters (a singleton for genuine images).
    """
    removed = rows[box_row - 1].pop()
    if not rows[box_row - 1]:
        rows.pop()
    chains: list[tuple[list[tuple[int, ...]], int]] = []

    def descend(r: int, carried: int, acc: list[tuple[int, ...]]):
        if r == 0:
            chains.append((acc, carried))
            return
        for prev_row, incoming in _reverse_bump_row(tuple(rows[r - 1]), carried):
            descend(r - 1, incoming, acc + [prev_row])

    descend(box_row - 1, removed, [])
    if len(chains) != 1:
        return [letter for _, letter in chains]
    acc, letter = chains[0]
    for offset, prev_row in enumerate(acc):
        rows[box_row - 2 - offset] = list(prev_row)
    return [letter]


def _recording_order(q: ShiftedTableau) -> list[int]:
    """Row of the box added at each step, read from the recording tableau."""
    boxes = sorted(((ceil_of(q.entry(i, j)), i)
                    for i, j in _cells(q)), key=lambda x: x[0])
    return [i for _, i in boxes]


def _cells(t: ShiftedTableau):
    for i, part in enumerate(t.shape, start=1):
        for j in range(i, part + i):
            yield (i, j)


def _unprimed_preimage(p: ShiftedTableau, q: ShiftedTableau) -> Word:
    """Invert the insertion of the unprimed word (primes ignored)."""
    order = _recording_order(q)
    rows = [[ceil_of(x) for x in row] for row in p.rows]
    letters: list[int] = []
    for box_row in reversed(order):
        out = _unwind_once(rows, box_row)
        if len(out) != 1:
            raise ValueError("tableau pair is not an insertion image")
        letters.append(out[0])
    # step t inserts the t-th letter from the right, so unwinding from the
    # last step yields the word left to right
    return tuple(unprimed(v) for v in letters)


def _prime_pattern(p: ShiftedTableau, q: ShiftedTableau) -> int:
    bits = 0
    for pos, x in enumerate(p.reading_word() + q.reading_word()):
        if is_primed(x):
            bits |= 1 << pos
    return bits


def _solve_gf2(columns: list[int], target: int) -> int | None:
    """Solve ``xor of chosen columns == target`` over GF(2).

    Returns a bitmask over column indices or ``None`` when unsolvable."""
    pivots: list[tuple[int, int, int]] = []  # (pivot bit, column, chosen-mask)
    basis = []
    for idx, col in enumerate(columns):
        mask = 1 << idx
        for pbit, pcol, pmask in pivots:
            if col >> pbit & 1:
                col ^= pcol
                mask ^= pmask
        if col:
            pivots.append((col.bit_length() - 1, col, mask))
    chosen = 0
    for pbit, pcol, pmask in sorted(pivots, reverse=True):
        if target >> pbit & 1:
            target ^= pcol
            chosen ^= pmask
    return chosen if target == 0 else None


def inverse_insertion(p: ShiftedTableau, q: ShiftedTableau) -> Word:
    """The unique word with ``insert_word(word) == (p, q)``.

    Raises ValueError when the pair is not in the image of insertion.
    """
    if p.shape != q.shape:
        raise ValueError("insertion and recording tableaux differ in shape")
    if not is_primed_decomposition_tableau(p) and p.shape:
        raise ValueError("first tableau is not a primed decomposition tableau")
    if not is_standard_recording(q) and q.shape:
        raise ValueError("second tableau is not a primed standard tableau")
    if not p.shape:
        return ()
    base = _unprimed_preimage(p.unprimed(), q.unprimed())
    m = len(base)
    p0, q0 = insert_word(base)
    if (p0, q0) != (p.unprimed(), q.unprimed()):
        raise ValueError("tableau pair is not an insertion image")
    base_bits = _prime_pattern(p0, q0)
    columns = []
    for t in range(m):
        w = base[:t] + (base[t] - 1,) + base[t + 1:]
        pt, qt = insert_word(w)
        columns.append(_prime_pattern(pt, qt) ^ base_bits)
    target = _prime_pattern(p, q) ^ base_bits
    chosen = _solve_gf2(columns, target)
    if chosen is None:
        raise ValueError("tableau pair is not an insertion image")
    word = tuple(x - 1 if chosen >> t & 1 else x for t, x in enumerate(base))
    if insert_word(word) != (p, q):
        raise ValueError("tableau pair is not an insertion image")
    return word


def monoid_product(t: ShiftedTableau, u: ShiftedTableau) -> ShiftedTableau:
    """Product on primed decomposition tableaux through insertion."""
    return insert_word(t.revrow_word() + u.revrow_word())[0]
