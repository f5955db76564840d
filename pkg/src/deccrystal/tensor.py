"""Tensor products of crystal elements.

The combinators here act on anything exposing the small element interface
(``weight``, ``e``, ``f``, ``epsilon``, ``phi``): single letters, whole
words, or tableaux.  Tensor factors are written ``b (x) c`` with operators
read in the convention where the *right* factor is preferred by e_i.

``None`` is the absent element throughout: if a case of a tensor rule asks
for an operator value that is absent, the whole result is absent.
"""

from __future__ import annotations

from .words import (BAR1, FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS, FLAVORS, ZERO,
                    Word, e_word, f_word, operator_indices, string_lengths,
                    weight_of, word_str)


class Leaf:
    """A crystal element wrapping a single word (often one letter)."""

    __slots__ = ("word", "n", "flavor")

    def __init__(self, word: Word, n: int, flavor: str = FLAVOR_QPLUS):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.word = tuple(word)
        self.n = n
        self.flavor = flavor

    def weight(self) -> tuple[int, ...]:
        return weight_of(self.word, self.n)

    def e(self, i: int) -> "Leaf | None":
        out = e_word(self.word, i, self.n, self.flavor)
        return None if out is None else Leaf(out, self.n, self.flavor)

    def f(self, i: int) -> "Leaf | None":
        out = f_word(self.word, i, self.n, self.flavor)
        return None if out is None else Leaf(out, self.n, self.flavor)

    def epsilon(self, i: int) -> int:
        return string_lengths(self.word, i, self.n, self.flavor)[0]

    def phi(self, i: int) -> int:
        return string_lengths(self.word, i, self.n, self.flavor)[1]

    def letters(self) -> Word:
        return self.word

    def __eq__(self, other):
        return isinstance(other, Leaf) and self.word == other.word

    def __hash__(self):
        return hash(("Leaf", self.word))

    def __repr__(self):
        return f"Leaf({word_str(self.word)!r})"


def _e0f0_absent(b) -> bool:
    return b.e(ZERO) is None and b.f(ZERO) is None


def _chain(b, *ops):
    """Apply single-index operators right to left; absent is absorbing."""
    for kind, i in reversed(ops):
        if b is None:
            return None
        b = b.e(i) if kind == "e" else b.f(i)
    return b


class Pair:
    """Tensor product ``left (x) right`` of two crystal elements."""

    __slots__ = ("left", "right", "n", "flavor")

    def __init__(self, left, right, n: int, flavor: str = FLAVOR_QPLUS):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.left = left
        self.right = right
        self.n = n
        self.flavor = flavor

    def weight(self) -> tuple[int, ...]:
        lw, rw = self.left.weight(), self.right.weight()
        return tuple(a + b for a, b in zip(lw, rw))

    def _wrap(self, left, right):
        if left is None or right is None:
            return None
        return Pair(left, right, self.n, self.flavor)

    def e(self, i: int):
        b, c = self.left, self.right
        if i == ZERO:
            if _e0f0_absent(b):
                return self._wrap(b, c.e(ZERO))
            return self._wrap(b.e(ZERO), c)
        if i == BAR1:
            if self.flavor == FLAVOR_Q:
                if b.e(BAR1) is None and b.f(BAR1) is None:
                    return self._wrap(b, c.e(BAR1))
                return self._wrap(b.e(BAR1), c)
            # extended flavor: the bar-1 rule interacts with the 0-operators
            if b.e(BAR1) is None and b.f(BAR1) is None:
                return self._wrap(b, c.e(BAR1))
            if _e0f0_absent(b):
                if _chain(b, ("f", ZERO), ("e", BAR1)) is not None \
                        and c.e(ZERO) is not None:
                    return self._wrap(_chain(b, ("f", ZERO), ("e", BAR1)),
                                      c.e(ZERO))
                if _chain(b, ("e", ZERO), ("e", BAR1)) is not None \
                        and c.f(ZERO) is not None:
                    return self._wrap(_chain(b, ("e", ZERO), ("e", BAR1)),
                                      c.f(ZERO))
            return self._wrap(b.e(BAR1), c)
        if b.epsilon(i) <= c.phi(i):
            return self._wrap(b, c.e(i))
        return self._wrap(b.e(i), c)

    def f(self, i: int):
        b, c = self.left, self.right
        if i == ZERO:
            if _e0f0_absent(b):
                return self._wrap(b, c.f(ZERO))
            return self._wrap(b.f(ZERO), c)
        if i == BAR1:
            if self.flavor == FLAVOR_Q:
                if b.e(BAR1) is None and b.f(BAR1) is None:
                    return self._wrap(b, c.f(BAR1))
                return self._wrap(b.f(BAR1), c)
            if b.e(BAR1) is None and b.f(BAR1) is None:
                return self._wrap(b, c.f(BAR1))
            fe = _chain(b, ("f", BAR1), ("e", ZERO))
            if fe is not None and c.f(ZERO) is not None and _e0f0_absent(fe):
                return self._wrap(fe, c.f(ZERO))
            ff = _chain(b, ("f", BAR1), ("f", ZERO))
            if ff is not None and c.e(ZERO) is not None and _e0f0_absent(ff):
                return self._wrap(ff, c.e(ZERO))
            return self._wrap(b.f(BAR1), c)
        if b.epsilon(i) < c.phi(i):
            return self._wrap(b, c.f(i))
        return self._wrap(b.f(i), c)

    def epsilon(self, i: int) -> int:
        eps, cur = 0, self
        while (nxt := cur.e(i)) is not None:
            cur, eps = nxt, eps + 1
        return eps

    def phi(self, i: int) -> int:
        phi, cur = 0, self
        while (nxt := cur.f(i)) is not None:
            cur, phi = nxt, phi + 1
        return phi

    def letters(self) -> Word:
        return self.left.letters() + self.right.letters()

    def __eq__(self, other):
        return (isinstance(other, Pair) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash(("Pair", self.left, self.right))

    def __repr__(self):
        return f"Pair({self.left!r}, {self.right!r})"


def word_element(word: Word, n: int, flavor: str = FLAVOR_QPLUS,
                 bracket: str = "right"):
    """Fold a word into nested one-letter tensors.

    ``bracket="right"`` gives ``x1 (x) (x2 (x) (...))``; ``"left"`` gives
    ``((x1 (x) x2) (x) ...) (x) xm``.  An empty word becomes the empty Leaf.
    """
    if len(word) <= 1:
        return Leaf(word, n, flavor)
    if bracket == "right":
        return Pair(Leaf(word[:1], n, flavor),
                    word_element(word[1:], n, flavor, bracket), n, flavor)
    if bracket == "left":
        return Pair(word_element(word[:-1], n, flavor, bracket),
                    Leaf(word[-1:], n, flavor), n, flavor)
    raise ValueError(f"unknown bracketing {bracket!r}")


def tensor_indices(n: int, flavor: str) -> tuple[int, ...]:
    return operator_indices(n, flavor)
