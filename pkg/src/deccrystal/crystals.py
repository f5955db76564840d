"""Crystal operator families, twisted operators, and crystal graphs.

An :class:`OperatorFamily` bundles the raising/lowering maps, the weight
map, rank and flavor for one carrier set (words or tableaux), so that the
string reversals sigma_i, the twisted operators built from them, and graph
construction work uniformly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

from . import tableaux as tb
from .words import (BAR1, FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS, ZERO, e_word,
                    f_word, index_label, operator_indices, weight_of,
                    word_str)


@dataclass(frozen=True)
class OperatorFamily:
    n: int
    flavor: str
    e: Callable
    f: Callable
    weight: Callable
    render: Callable = field(default=str)

    @property
    def indices(self) -> tuple[int, ...]:
        return operator_indices(self.n, self.flavor)


def word_ops(n: int, flavor: str = FLAVOR_QPLUS) -> OperatorFamily:
    return OperatorFamily(
        n, flavor,
        e=lambda w, i: e_word(w, i, n, flavor),
        f=lambda w, i: f_word(w, i, n, flavor),
        weight=lambda w: weight_of(w, n),
        render=word_str)


def tableau_ops(n: int, flavor: str = FLAVOR_QPLUS) -> OperatorFamily:
    return OperatorFamily(
        n, flavor,
        e=lambda t, i: tb.tableau_e(t, i, n, flavor),
        f=lambda t, i: tb.tableau_f(t, i, n, flavor),
        weight=lambda t: t.weight(n),
        render=lambda t: t.compact_str())


def epsilon(ops: OperatorFamily, v, i: int) -> int:
    count = 0
    while (v := ops.e(v, i)) is not None:
        count += 1
    return count


def phi(ops: OperatorFamily, v, i: int) -> int:
    count = 0
    while (v := ops.f(v, i)) is not None:
        count += 1
    return count


def sigma(ops: OperatorFamily, v, k: int):
    """Reverse the k-string through v: swap the roles of e_k and f_k."""
    eps, ph = epsilon(ops, v, k), phi(ops, v, k)
    if ph > eps:
        for _ in range(ph - eps):
            v = ops.f(v, k)
    else:
        for _ in range(eps - ph):
            v = ops.e(v, k)
    return v


def _apply_sigmas(ops: OperatorFamily, v, ks: Iterable[int]):
    """Apply sigma_k for k in ks, leftmost entry of ks applied last."""
    for k in reversed(tuple(ks)):
        v = sigma(ops, v, k)
    return v


def _bar1(ops: OperatorFamily, v, lower: bool):
    return ops.f(v, BAR1) if lower else ops.e(v, BAR1)


def twisted_bar(ops: OperatorFamily, v, i: int, lower: bool = False):
    """e-bar_i (or f-bar_i): conjugate the bar-1 operator by sigmas.

    The conjugating word is (sigma_{i-1} sigma_i) ... (sigma_1 sigma_2),
    read with its rightmost factor acting first.
    """
    if not 1 <= i <= ops.n - 1:
        raise ValueError(f"twisted bar index {i} outside 1..{ops.n - 1}")
    if i == 1:
        return _bar1(ops, v, lower)
    inner = [k for j in range(2, i + 1) for k in (j, j - 1)]
    # inner = [2,1,3,2,...,i,i-1]; conjugation applies it, then bar-1,
    # then the reverse word.
    v = _apply_sigmas(ops, v, inner)
    v = _bar1(ops, v, lower)
    if v is None:
        return None
    outer = [k for j in range(i, 1, -1) for k in (j - 1, j)]
    return _apply_sigmas(ops, v, outer)


def sigma_longest(ops: OperatorFamily, v, inverse: bool = False):
    """The longest string-reversal word sigma_{w0} (or its inverse)."""
    # blocks (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1}...sigma_1), the
    # rightmost block acting first and each block read right to left
    word = [k for top in range(1, ops.n) for k in range(top, 0, -1)]
    if inverse:
        word = word[::-1]
    return _apply_sigmas(ops, v, word)


def twisted_bar_prime(ops: OperatorFamily, v, i: int, lower: bool = False):
    """e-bar'_i / f-bar'_i: conjugate the opposite twisted bar operator by
    the longest string reversal.  Defined for 1 <= i <= n - 1."""
    if not 1 <= i <= ops.n - 1:
        raise ValueError(f"primed twisted bar index {i} outside 1..{ops.n - 1}")
    v = sigma_longest(ops, v, inverse=True)
    v = twisted_bar(ops, v, ops.n - i, lower=not lower)
    if v is None:
        return None
    return sigma_longest(ops, v)


def twisted_zero(ops: OperatorFamily, v, i: int, lower: bool = False):
    """e_0^[i] / f_0^[i]: conjugate the 0-operator by sigma_1 ... sigma_{i-1}."""
    if not 1 <= i <= ops.n:
        raise ValueError(f"twisted zero index {i} outside 1..{ops.n}")
    v = _apply_sigmas(ops, v, range(1, i))
    v = ops.f(v, ZERO) if lower else ops.e(v, ZERO)
    if v is None:
        return None
    return _apply_sigmas(ops, v, range(i - 1, 0, -1))


def is_highest(ops: OperatorFamily, v) -> bool:
    """No raising operator of the flavor applies (twisted ones included)."""
    if any(ops.e(v, k) is not None for k in range(1, ops.n)):
        return False
    if ops.flavor == FLAVOR_GL:
        return True
    if any(twisted_bar(ops, v, i) is not None for i in range(1, ops.n)):
        return False
    if ops.flavor == FLAVOR_Q:
        return True
    return all(twisted_zero(ops, v, i) is None for i in range(1, ops.n + 1))


def is_lowest(ops: OperatorFamily, v) -> bool:
    """No lowering operator of the flavor applies (twisted ones included)."""
    if any(ops.f(v, k) is not None for k in range(1, ops.n)):
        return False
    if ops.flavor == FLAVOR_GL:
        return True
    if any(twisted_bar_prime(ops, v, i, lower=True) is not None
           for i in range(1, ops.n)):
        return False
    if ops.flavor == FLAVOR_Q:
        return True
    return all(twisted_zero(ops, v, i, lower=True) is None
               for i in range(1, ops.n + 1))


def height(weight: tuple[int, ...]) -> int:
    """Sum of the partial sums of the weight (its first n-1 of them)."""
    total = 0
    acc = 0
    for part in weight[:-1]:
        acc += part
        total += acc
    return total


# ---------------------------------------------------------------------------
# Graphs


class ClosureError(ValueError):
    pass


DOT_STYLES = {
    "1": ("blue", "solid"),
    "2": ("red", "solid"),
    "0": ("green", "dotted"),
    "b1": ("blue", "dashed"),
}


class CrystalGraph:
    """A finite crystal: vertices plus labelled e/f edges.

    Vertices are sorted by their rendered label so everything downstream
    (components, exports) is deterministic.
    """

    def __init__(self, vertices: Iterable[Hashable], ops: OperatorFamily):
        self.ops = ops
        self.vertices = sorted(set(vertices), key=ops.render)
        self.index = {v: t for t, v in enumerate(self.vertices)}
        self.weights = [ops.weight(v) for v in self.vertices]
        self.edges: dict[tuple[int, int], int] = {}
        for src, v in enumerate(self.vertices):
            for i in ops.indices:
                out = ops.f(v, i)
                if out is None:
                    continue
                if out not in self.index:
                    raise ClosureError(
                        f"f_{index_label(i)}({ops.render(v)}) = "
                        f"{ops.render(out)} escapes the vertex set")
                self.edges[(src, i)] = self.index[out]
                back = ops.e(out, i)
                if back != v:
                    raise ClosureError(
                        f"e_{index_label(i)} does not invert f_{index_label(i)}"
                        f" at {ops.render(v)}")
        for src, v in enumerate(self.vertices):
            for i in ops.indices:
                out = ops.e(v, i)
                if out is not None and out not in self.index:
                    raise ClosureError(
                        f"e_{index_label(i)}({ops.render(v)}) = "
                        f"{ops.render(out)} escapes the vertex set")

    @classmethod
    def closure(cls, seeds: Iterable[Hashable], ops: OperatorFamily,
                max_vertices: int = 10 ** 6) -> "CrystalGraph":
        """Close a seed set under all e_i and f_i."""
        seen = set(seeds)
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for i in ops.indices:
                for out in (ops.e(v, i), ops.f(v, i)):
                    if out is not None and out not in seen:
                        seen.add(out)
                        queue.append(out)
                        if len(seen) > max_vertices:
                            raise ClosureError("closure exceeded max_vertices")
        return cls(seen, ops)

    def __len__(self):
        return len(self.vertices)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex-index lists."""
        seen, comps = set(), []
        neigh: dict[int, list[int]] = {t: [] for t in range(len(self.vertices))}
        for (src, _), dst in self.edges.items():
            neigh[src].append(dst)
            neigh[dst].append(src)
        for start in range(len(self.vertices)):
            if start in seen:
                continue
            comp, queue = [], deque([start])
            seen.add(start)
            while queue:
                t = queue.popleft()
                comp.append(t)
                for u in neigh[t]:
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
            comps.append(sorted(comp))
        return comps

    def rank(self) -> list[int]:
        """Per-component rank: +1 along every f-edge, minimum 0.

        Raises ValueError when no consistent rank exists.
        """
        ranks: list[int | None] = [None] * len(self.vertices)
        out_edges: dict[int, list[tuple[int, int]]] = {}
        for (src, i), dst in self.edges.items():
            out_edges.setdefault(src, []).append((dst, 1))
            out_edges.setdefault(dst, []).append((src, -1))
        for comp in self.components():
            ranks[comp[0]] = 0
            queue = deque([comp[0]])
            while queue:
                t = queue.popleft()
                for u, step in out_edges.get(t, ()):
                    want = ranks[t] + step
                    if ranks[u] is None:
                        ranks[u] = want
                        queue.append(u)
                    elif ranks[u] != want:
                        raise ValueError("graph has no consistent rank function")
            low = min(ranks[t] for t in comp)
            for t in comp:
                ranks[t] -= low
        return ranks

    def component_of(self, v) -> list[int]:
        t = self.index[v]
        return next(c for c in self.components() if t in c)

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for t, v in enumerate(self.vertices):
            label = self.ops.render(v)
            lines.append(f'  n{t} [label="{label}"];')
        for (src, i), dst in sorted(self.edges.items()):
            lbl = index_label(i)
            color, style = DOT_STYLES.get(lbl, ("black", "solid"))
            lines.append(f'  n{src} -> n{dst} '
                         f'[label="{lbl}", color={color}, style={style}];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        data = {
            "vertices": [{"id": t, "label": self.ops.render(v),
                          "wt": list(self.weights[t])}
                         for t, v in enumerate(self.vertices)],
            "edges": [{"src": src, "lbl": index_label(i), "dst": dst}
                      for (src, i), dst in sorted(self.edges.items())],
        }
        return json.dumps(data, indent=2)


def find_isomorphism(graph_a: CrystalGraph, comp_a: list[int],
                     graph_b: CrystalGraph, comp_b: list[int]) -> dict | None:
    """Weight-preserving labelled-digraph isomorphism between components.

    Anchored at the unique rank-minimal vertex of each component; returns a
    vertex-index mapping, or ``None`` when the components differ.
    """
    if len(comp_a) != len(comp_b):
        return None
    if set(i for _, i in graph_a.edges) - set(graph_a.ops.indices):
        raise ValueError("unexpected edge labels")
    labels = graph_a.ops.indices
    if labels != graph_b.ops.indices:
        return None

    def anchor(graph, comp):
        ranks = graph.rank()
        mins = [t for t in comp if ranks[t] == 0]
        return mins[0] if len(mins) == 1 else None

    start_a, start_b = anchor(graph_a, comp_a), anchor(graph_b, comp_b)
    if start_a is None or start_b is None:
        return None
    mapping = {start_a: start_b}
    queue = deque([start_a])
    while queue:
        ta = queue.popleft()
        tbv = mapping[ta]
        if graph_a.weights[ta] != graph_b.weights[tbv]:
            return None
        for i in labels:
            da = graph_a.edges.get((ta, i))
            db = graph_b.edges.get((tbv, i))
            if (da is None) != (db is None):
                return None
            if da is not None:
                if da in mapping:
                    if mapping[da] != db:
                        return None
                else:
                    mapping[da] = db
                    queue.append(da)
    if len(mapping) != len(comp_a) or len(set(mapping.values())) != len(comp_b):
        return None
    # walk e-direction too: every edge into the component must be matched
    rev_a = {(dst, i): src for (src, i), dst in graph_a.edges.items()}
    rev_b = {(dst, i): src for (src, i), dst in graph_b.edges.items()}
    for ta, tbv in mapping.items():
        for i in labels:
            ea, eb = rev_a.get((ta, i)), rev_b.get((tbv, i))
            if (ea is None) != (eb is None):
                return None
            if ea is not None and mapping.get(ea) != eb:
                return None
    return mapping
