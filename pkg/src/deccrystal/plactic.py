"""The congruence on primed words generated by ten local rewriting rules.

Each rule rewrites a window of two or four adjacent letters.  Within one
rule application the letters marked ``dot`` share a single prime flag, the
letters marked ``circ`` share another, letters with no mark must be
unprimed, and ``prime`` marks a literally primed letter.  The letter bound
to ``d`` is always unprimed.

``dec_equivalent`` decides the congruence by breadth-first search through
rewrites; ``dec_equivalent_fast`` uses equality of insertion tableaux.
"""

from __future__ import annotations

from collections import deque

from .insertion import insert_word
from .tableaux import ShiftedTableau
from .words import Word, ceil_of, is_primed, primed, unprimed


class CapExceededError(RuntimeError):
    """The rewrite search hit its node cap before deciding."""


def _pat(spec: str):
    """Parse a compact pattern like "a. b d c:" (.=dot, :=circ, '=prime)."""
    out = []
    for tok in spec.split():
        if tok[-1] in ".:'":
            out.append((tok[:-1], {".": "dot", ":": "circ", "'": "prime"}[tok[-1]]))
        else:
            out.append((tok, None))
    return tuple(out)


RELATIONS = [
    ("1", _pat("a. b"), _pat("a. b'"),
     lambda v: v["a"] <= v["b"]),
    ("2", _pat("b a."), _pat("b' a."),
     lambda v: v["a"] < v["b"]),
    ("3", _pat("a. b d c:"), _pat("a. d b: c"),
     lambda v: v["a"] <= v["b"] <= v["c"] < v["d"]),
    ("4", _pat("a. c d b:"), _pat("a. c b: d"),
     lambda v: v["a"] <= v["b"] < v["c"] <= v["d"]),
    ("5", _pat("d a. c b:"), _pat("a. d c b:"),
     lambda v: v["a"] <= v["b"] < v["c"] < v["d"]),
    ("6", _pat("b a. d c:"), _pat("b: d a. c"),
     lambda v: v["a"] < v["b"] <= v["c"] < v["d"]),
    ("7", _pat("c b. d a:"), _pat("c. d b a:"),
     lambda v: v["a"] < v["b"] < v["c"] <= v["d"]),
    ("8", _pat("d b. c a:"), _pat("b. d c a:"),
     lambda v: v["a"] < v["b"] <= v["c"] < v["d"]),
    ("9", _pat("b. c d a:"), _pat("b. c a: d"),
     lambda v: v["a"] < v["b"] <= v["c"] <= v["d"]),
    ("10", _pat("c a. d b:"), _pat("c: d a. b"),
     lambda v: v["a"] <= v["b"] < v["c"] <= v["d"]),
]


def _match(window: Word, pattern) -> tuple[dict, dict] | None:
    """Bind symbol values and prime flags, or ``None`` if no match."""
    values: dict[str, int] = {}
    flags: dict[str, bool] = {}
    for (sym, ann), letter in zip(pattern, window):
        values[sym] = ceil_of(letter)
        pr = is_primed(letter)
        if ann is None or sym == "d":
            if pr:
                return None
        elif ann == "prime":
            if not pr:
                return None
        else:
            if ann in flags and flags[ann] != pr:
                return None
            flags[ann] = pr
    return values, flags


def _emit(pattern, values: dict, flags: dict) -> Word:
    out = []
    for sym, ann in pattern:
        v = values[sym]
        if ann == "prime" or (ann in ("dot", "circ") and flags.get(ann, False)):
            out.append(primed(v))
        else:
            out.append(unprimed(v))
    return tuple(out)


def one_step_rewrites(word: Word, detailed: bool = False):
    """Words reachable by one rule application, in either direction.

    With ``detailed`` each result is ``(word, rule_name, direction, pos)``.
    """
    results = [] if detailed else set()
    for name, lhs, rhs, cond in RELATIONS:
        size = len(lhs)
        for pos in range(len(word) - size + 1):
            window = word[pos:pos + size]
            for src, dst, direction in ((lhs, rhs, "->"), (rhs, lhs, "<-")):
                bound = _match(window, src)
                if bound is None:
                    continue
                values, flags = bound
                if not cond(values):
                    continue
                new = word[:pos] + _emit(dst, values, flags) + word[pos + size:]
                if new == word:
                    continue
                if detailed:
                    results.append((new, name, direction, pos))
                else:
                    results.add(new)
    return results


def equivalence_class(word: Word, node_cap: int = 10 ** 6) -> frozenset:
    """Closure of a word under the rewriting rules (both directions)."""
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for nxt in one_step_rewrites(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if len(seen) > node_cap:
                    raise CapExceededError(
                        f"rewrite closure exceeded {node_cap} words")
    return frozenset(seen)


def dec_equivalent(u: Word, v: Word, node_cap: int = 10 ** 6) -> bool:
    """Decide the congruence by breadth-first search from ``u``."""
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        for nxt in one_step_rewrites(cur):
            if nxt == v:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if len(seen) > node_cap:
                    raise CapExceededError(
                        f"rewrite search exceeded {node_cap} words")
    return False


def dec_equivalent_fast(u: Word, v: Word) -> bool:
    """Congruence test through equality of insertion tableaux."""
    return insert_word(u)[0] == insert_word(v)[0]


def equivalence_classes(words) -> dict[ShiftedTableau, list[Word]]:
    """Group words by their insertion tableau."""
    out: dict[ShiftedTableau, list[Word]] = {}
    for w in words:
        out.setdefault(insert_word(w)[0], []).append(w)
    return out


def rewrite_components(words) -> list[frozenset]:
    """Connected components of the rewrite graph restricted to ``words``.

    Rewrites preserve weight, hence length: the full component of each word
    stays inside the set of all words of that length."""
    pool = set(words)
    comps = []
    while pool:
        start = pool.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in one_step_rewrites(cur):
                if nxt not in comp:
                    comp.add(nxt)
                    queue.append(nxt)
        pool -= comp
        comps.append(frozenset(comp))
    return comps
