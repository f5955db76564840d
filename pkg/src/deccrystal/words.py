"""Primed letters, primed words, and crystal operators on words.

Letters live in the ordered alphabet 1' < 1 < 2' < 2 < ... and are stored as
"doubled" integers: the primed letter i' is 2*i - 1 and the unprimed letter i
is 2*i.  A letter is primed exactly when its doubled value is odd, and its
underlying (unprimed) value is ``ceil_of(letter)``.

A word is a tuple of doubled letters read left to right.  Crystal operators
are partial maps: an operator that is undefined on a word returns ``None``.

Operator indices:

* ``1 <= k <= n - 1`` -- the standard operators e_k / f_k,
* ``ZERO`` -- the operators e_0 / f_0 acting on the letters 1', 1,
* ``BAR1`` -- the operators acting on the first letters with value 1 or 2.
"""

from __future__ import annotations

from typing import Iterable

# Operator index markers.  Standard operators use their positive integer k.
BAR1 = -1
ZERO = 0

FLAVOR_GL = "gl"
FLAVOR_Q = "q"
FLAVOR_QPLUS = "q_plus"

FLAVORS = (FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS)

Word = tuple[int, ...]


def primed(value: int) -> int:
    """The doubled letter for the primed entry ``value'``."""
    if value < 1:
        raise ValueError(f"letter value must be positive, got {value}")
    return 2 * value - 1


def unprimed(value: int) -> int:
    """The doubled letter for the unprimed entry ``value``."""
    if value < 1:
        raise ValueError(f"letter value must be positive, got {value}")
    return 2 * value


def ceil_of(letter: int) -> int:
    """Underlying value of a doubled letter: both i' and i map to i."""
    return (letter + 1) // 2


def is_primed(letter: int) -> bool:
    return letter % 2 == 1


def letter_str(letter: int) -> str:
    return f"{ceil_of(letter)}'" if is_primed(letter) else str(ceil_of(letter))


def parse_letter(token: str) -> int:
    """Parse a single letter token such as ``"4"`` or ``"2'"``."""
    token = token.strip()
    prime = token.endswith("'")
    body = token[:-1] if prime else token
    if not body.isdigit() or int(body) < 1:
        raise ValueError(f"bad letter token {token!r}")
    value = int(body)
    return primed(value) if prime else unprimed(value)


def parse_word(text: str) -> Word:
    """Parse a word.

    Tokens may be separated by whitespace ("4' 4 3"), or given compactly with
    no separators ("4'43") when every letter value is a single digit.
    """
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(parse_letter(tok) for tok in text.split())
    letters = []
    i = 0
    while i < len(text):
        ch = text[i]
        if not ch.isdigit():
            raise ValueError(f"bad character {ch!r} in compact word {text!r}")
        if i + 1 < len(text) and text[i + 1] == "'":
            letters.append(parse_letter(ch + "'"))
            i += 2
        else:
            letters.append(parse_letter(ch))
            i += 1
    return tuple(letters)


def word_str(word: Iterable[int]) -> str:
    return " ".join(letter_str(x) for x in word)


def unprime_word(word: Iterable[int]) -> Word:
    """Forget all primes, keeping the underlying values."""
    return tuple(unprimed(ceil_of(x)) for x in word)


def weight_of(word: Iterable[int], n: int) -> tuple[int, ...]:
    """Weight vector (#letters with value 1, ..., #letters with value n)."""
    wt = [0] * n
    for x in word:
        v = ceil_of(x)
        if v > n:
            raise ValueError(f"letter {letter_str(x)} exceeds rank n={n}")
        wt[v - 1] += 1
    return tuple(wt)


def check_index(i: int, n: int, flavor: str = FLAVOR_QPLUS) -> None:
    """Validate an operator index against the rank and crystal flavor."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got n={n}")
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if i == BAR1:
        if flavor == FLAVOR_GL:
            raise ValueError("bar-1 operators need a queer flavor")
        if n < 2:
            raise ValueError("bar-1 operators need rank n >= 2")
        return
    if i == ZERO:
        if flavor != FLAVOR_QPLUS:
            raise ValueError("0-operators only exist in the extended flavor")
        return
    if not 1 <= i <= n - 1:
        raise ValueError(f"standard operator index {i} outside 1..{n - 1}")


def operator_indices(n: int, flavor: str) -> tuple[int, ...]:
    """All operator indices available at rank ``n`` for the given flavor."""
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    std = tuple(range(1, n))
    if flavor == FLAVOR_GL:
        return std
    if flavor == FLAVOR_Q:
        return (BAR1,) + std
    return (BAR1, ZERO) + std


def index_label(i: int) -> str:
    if i == BAR1:
        return "b1"
    return str(i)


def i_pairing(word: Word, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bracket-match the value-(k+1) letters against later value-k letters.

    Letters with value k+1 open a bracket, letters with value k close one,
    and everything else is ignored.  Returns 0-based positions of the
    (unmatched k-letters, unmatched k+1-letters).
    """
    stack: list[int] = []
    unmatched_right: list[int] = []
    for pos, letter in enumerate(word):
        v = ceil_of(letter)
        if v == k + 1:
            stack.append(pos)
        elif v == k:
            if stack:
                stack.pop()
            else:
                unmatched_right.append(pos)
    return tuple(unmatched_right), tuple(stack)


def _first_pos(word: Word, values: set[int]) -> int | None:
    for pos, letter in enumerate(word):
        if ceil_of(letter) in values:
            return pos
    return None


def e_word(word: Word, i: int, n: int, flavor: str = FLAVOR_QPLUS) -> Word | None:
    """Raising operator e_i on a word, or ``None`` when undefined."""
    check_index(i, n, flavor)
    if i == ZERO:
        pos = _first_pos(word, {1})
        if pos is None or not is_primed(word[pos]):
            return None
        return word[:pos] + (word[pos] + 1,) + word[pos + 1:]
    if i == BAR1:
        j = _first_pos(word, {2})
        k = _first_pos(word, {1})
        if j is None or (k is not None and j > k):
            return None
        out = list(word)
        if k is None:
            out[j] -= 2
        else:
            out[j], out[k] = word[k], word[j] - 2
        return tuple(out)
    _, lefts = i_pairing(word, i)
    if not lefts:
        return None
    pos = lefts[0]
    return word[:pos] + (word[pos] - 2,) + word[pos + 1:]


def f_word(word: Word, i: int, n: int, flavor: str = FLAVOR_QPLUS) -> Word | None:
    """Lowering operator f_i on a word, or ``None`` when undefined."""
    check_index(i, n, flavor)
    if i == ZERO:
        pos = _first_pos(word, {1})
        if pos is None or is_primed(word[pos]):
            return None
        return word[:pos] + (word[pos] - 1,) + word[pos + 1:]
    if i == BAR1:
        ones = [pos for pos, x in enumerate(word) if ceil_of(x) == 1]
        if not ones:
            return None
        j = ones[0]
        if any(ceil_of(x) == 2 for x in word[:j]):
            return None
        out = list(word)
        if len(ones) == 1:
            out[j] += 2
        else:
            k = ones[1]
            out[j], out[k] = word[k] + 2, word[j]
        return tuple(out)
    rights, _ = i_pairing(word, i)
    if not rights:
        return None
    pos = rights[-1]
    return word[:pos] + (word[pos] + 2,) + word[pos + 1:]


def string_lengths(word: Word, i: int, n: int,
                   flavor: str = FLAVOR_QPLUS) -> tuple[int, int]:
    """(epsilon_i, phi_i): how often e_i resp. f_i applies before vanishing."""
    eps = 0
    cur = word
    while (nxt := e_word(cur, i, n, flavor)) is not None:
        cur, eps = nxt, eps + 1
    phi = 0
    cur = word
    while (nxt := f_word(cur, i, n, flavor)) is not None:
        cur, phi = nxt, phi + 1
    return eps, phi
