"""Exhaustive desk-scale verification suites.

Each suite checks one headline property of the library at small ranks and
word lengths, by complete enumeration.  The suites back both the ``check``
CLI subcommand and the acceptance tests.
"""

from __future__ import annotations

from itertools import product

from . import plactic
from .characters import character, expand_in_schur_q, schur_p, schur_q
from .crystals import (CrystalGraph, is_highest, is_lowest, sigma,
                       tableau_ops, word_ops)
from .insertion import dec_insert, insert_word, inverse_insertion, monoid_product
from .tableaux import (EMPTY_TABLEAU, ShiftedTableau, enumerate_dectab,
                       enumerate_primed_dectab, enumerate_shtab,
                       enumerate_standard_recording, hat_lowest_tableau,
                       highest_tableau, strict_partitions, tableau_e,
                       tableau_f)
from .words import (BAR1, FLAVOR_GL, FLAVOR_Q, ZERO, e_word, f_word,
                    is_primed, parse_word, primed, string_lengths, unprimed,
                    weight_of, word_str)
from .tensor import word_element

Check = tuple[str, bool, str]


def _check(results: list[Check], name: str, ok: bool, detail: str = ""):
    results.append((name, bool(ok), detail if not ok else ""))


def _tab(*row_strs: str) -> ShiftedTableau:
    return ShiftedTableau([parse_word(r) for r in row_strs])


def _all_words(n: int, length: int):
    return product(range(1, 2 * n + 1), repeat=length)


# ---------------------------------------------------------------------------


def suite_golden_insertion(**_) -> list[Check]:
    """Full insertion of one nine-letter word against its known image."""
    out: list[Check] = []
    w = parse_word("4' 4 3 3 2' 3' 3 2' 1'")
    p, q = insert_word(w)
    _check(out, "golden word P", p == _tab("4 3 3 3 4", "2 2' 3", "1'"),
           p.compact_str())
    _check(out, "golden word Q", q == _tab("1 2' 3 6 8", "4 5' 9'", "7"),
           q.compact_str())
    _check(out, "golden word round-trip", inverse_insertion(p, q) == w)
    return out


def suite_insertion_steps(**_) -> list[Check]:
    """Single-step insertion examples, including all prime choices."""
    out: list[Check] = []
    base = _tab("4 2 2 1' 3 4 6")
    got = dec_insert(parse_word("1")[0], base)[0]
    _check(out, "insert 1 into one-row tableau",
           got == _tab("4 3 2 1 1 4 6", "2'"), got.compact_str())
    got = dec_insert(parse_word("4'")[0], base)[0]
    _check(out, "insert 4' into one-row tableau",
           got == _tab("4 4 2 1' 3 4 6", "2'"), got.compact_str())

    # the two bumping cases on the row [4, 2, 2, 1~, 3], for every choice
    # of primes on the inserted letter (dot) and the row middle (circ)
    for dot in (0, 1):
        for circ in (0, 1):
            def lp(v, flag):
                return primed(v) if flag else unprimed(v)

            row = ShiftedTableau([(8, 4, 4, lp(1, circ), 6)])
            res, _box, _par, steps = dec_insert(lp(1, dot), row)
            want_row = (8, 6, 4, 2, lp(1, dot))
            _check(out, f"middle moves (dot={dot}, circ={circ})",
                   res.rows[0] == want_row and steps[0].bumped == lp(2, circ),
                   res.compact_str())
            res, _box, _par, steps = dec_insert(lp(3, dot), row)
            want_row = (8, 6, 4, lp(1, circ), 6)
            _check(out, f"middle fixed (dot={dot}, circ={circ})",
                   res.rows[0] == want_row and steps[0].bumped == lp(2, dot),
                   res.compact_str())
    return out


def suite_bijection(max_len: int | None = None, **_) -> list[Check]:
    """Insertion is a bijection onto same-shape tableau pairs."""
    out: list[Check] = []
    for n, mmax in ((2, 6), (3, 4)):
        if max_len is not None:
            mmax = min(mmax, max_len)
        for m in range(1, mmax + 1):
            seen: dict = {}
            round_trips = True
            for w in _all_words(n, m):
                pair = insert_word(w)
                if pair in seen:
                    _check(out, f"injective n={n} m={m}", False,
                           f"{word_str(w)} collides with {word_str(seen[pair])}")
                    break
                seen[pair] = w
                if inverse_insertion(*pair) != w:
                    round_trips = False
            else:
                _check(out, f"injective n={n} m={m}", True)
            _check(out, f"round-trip n={n} m={m}", round_trips)
            valid = set()
            for shape in strict_partitions(m):
                ps = list(enumerate_primed_dectab(shape, n))
                if not ps:
                    continue
                qs = list(enumerate_standard_recording(shape))
                valid.update((p, q) for p in ps for q in qs)
            _check(out, f"image is all valid pairs n={n} m={m}",
                   set(seen) == valid,
                   f"{len(seen)} reached vs {len(valid)} valid")
    return out


def suite_equivariance(max_len: int | None = None, **_) -> list[Check]:
    """Insertion intertwines word and tableau operators; the recording
    tableau is constant on components and separates them."""
    out: list[Check] = []
    n = 3
    mmax = 4 if max_len is None else min(4, max_len)
    indices = (BAR1, ZERO, 1, 2)
    for m in range(1, mmax + 1):
        inter = True
        detail = ""
        q_of: dict = {}
        for w in _all_words(n, m):
            p, q = insert_word(w)
            q_of[w] = q
            for i in indices:
                for wop, top in ((e_word, tableau_e), (f_word, tableau_f)):
                    u = wop(w, i, n)
                    via_t = top(p, i, n)
                    via_w = None if u is None else insert_word(u)[0]
                    if via_t != via_w:
                        inter = False
                        detail = f"{word_str(w)} index {i}"
        _check(out, f"operators commute with insertion m={m}", inter, detail)
        graph = CrystalGraph(list(_all_words(n, m)), word_ops(n))
        comps = graph.components()
        q_sets = [{q_of[graph.vertices[t]] for t in comp} for comp in comps]
        _check(out, f"recording constant on components m={m}",
               all(len(s) == 1 for s in q_sets))
        flat = [s.pop() for s in q_sets]
        _check(out, f"recording separates components m={m}",
               len(flat) == len(set(flat)))
    return out


def suite_highest_lowest(**_) -> list[Check]:
    """Unique extreme vertices and the verbatim string-reversal chains."""
    out: list[Check] = []
    for n in (2, 3):
        ops = tableau_ops(n)
        ok_hi = ok_lo = True
        detail = ""
        for size in range(1, 6):
            for shape in strict_partitions(size, max_len=n):
                verts = list(enumerate_primed_dectab(shape, n))
                hi = [t for t in verts if is_highest(ops, t)]
                lo = [t for t in verts if is_lowest(ops, t)]
                want_hi = highest_tableau(shape)
                if hi != [want_hi] or want_hi.weight(n) != shape + (0,) * (n - len(shape)):
                    ok_hi, detail = False, f"n={n} {shape}"
                if lo != [hat_lowest_tableau(shape, n)]:
                    ok_lo, detail = False, f"n={n} {shape}"
        _check(out, f"unique highest vertex n={n}", ok_hi, detail)
        _check(out, f"unique lowest vertex n={n}", ok_lo, detail)

    ops7 = tableau_ops(7)
    t = _tab("4 3 2 2 1 1", "3 2 1 1", "2 1", "1'")
    chain = [
        (lambda v: sigma(ops7, v, 3), _tab("4 4 2 2 1 1", "3 2 1 1", "2 1", "1'")),
        (lambda v: sigma(ops7, v, 2), _tab("4 4 3 3 1 1", "3 3 1 1", "2 1", "1'")),
        (lambda v: sigma(ops7, v, 1), _tab("4 4 3 3 2 2", "3 3 2 2", "2 2", "1'")),
        (lambda v: ops7.e(v, ZERO), _tab("4 4 3 3 2 2", "3 3 2 2", "2 2", "1")),
    ]
    ok = True
    for step, want in chain:
        t = step(t)
        if t != want:
            ok = False
            break
    _check(out, "raising chain through string reversals", ok,
           "(absent)" if t is None else t.compact_str())

    t = _tab("7 7 7 7 7 7", "6 6 6 6'", "5 5'", "4'")
    chain = [
        (6, _tab("7 7 7 7 6 6", "6 6 6 6'", "5 5'", "4'")),
        (5, _tab("7 7 7 7 5 5", "6 6 5 5'", "5 5'", "4'")),
        (4, _tab("7 7 7 7 4 4", "6 6 4 4'", "5 4'", "4'")),
        (3, _tab("7 7 7 7 3 3", "6 6 3 3'", "5 3'", "3'")),
        (2, _tab("7 7 7 7 2 2", "6 6 2 2'", "5 2'", "2'")),
        (1, _tab("7 7 7 7 1 1", "6 6 1 1'", "5 1'", "1'")),
    ]
    ok = True
    for k, want in chain:
        t = sigma(ops7, t, k)
        if t != want:
            ok = False
            break
    if ok:
        t = ops7.f(t, ZERO)
        ok = t == _tab("7 7 7 7 1 1'", "6 6 1 1'", "5 1'", "1'")
    _check(out, "lowering chain through string reversals", ok,
           "(absent)" if t is None else t.compact_str())

    got = sigma(tableau_ops(4), _tab("4 3 3 3 1 1", "3 2 1 1'", "2 1", "1'"), 1)
    _check(out, "two-row string reversal example",
           got == _tab("4 3 3 3 2 2", "3 2 2 2'", "2 1", "1'"),
           got.compact_str())
    got = sigma(ops7, _tab("7 7 7 7 7 7'", "6 6 6 6", "5 5'", "4"), 6)
    _check(out, "border string reversal example",
           got == _tab("7 7 7 7 6 6'", "6 6 6 6", "5 5'", "4"),
           got.compact_str())
    got = sigma(ops7, _tab("7 7 7 7 7 7'", "6 6 5 5", "5 5'", "4"), 4)
    _check(out, "interior string reversal example",
           got == _tab("7 7 7 7 7 7'", "6 6 4 4", "5 4'", "4"),
           got.compact_str())
    return out


def suite_characters(**_) -> list[Check]:
    """Characters of the tableau families equal Schur P/Q polynomials."""
    out: list[Check] = []
    for n in (2, 3, 4):
        ok_p = ok_q = ok_ratio = ok_sh = ok_exp = True
        detail = ""
        for size in range(1, 7):
            for shape in strict_partitions(size, max_len=n):
                p_poly = schur_p(shape, n)
                q_poly = schur_q(shape, n)
                ch_dec = character(
                    (t.weight(n) for t in enumerate_dectab(shape, n)), n)
                ch_pdec = character(
                    (t.weight(n) for t in enumerate_primed_dectab(shape, n)), n)
                sh = sorted(t.weight(n)
                            for t in enumerate_shtab(shape, n, True))
                dec = sorted(t.weight(n)
                             for t in enumerate_primed_dectab(shape, n))
                if ch_dec != p_poly:
                    ok_p, detail = False, f"{shape}"
                if ch_pdec != q_poly:
                    ok_q, detail = False, f"{shape}"
                if q_poly != p_poly.scale(2 ** len(shape)):
                    ok_ratio, detail = False, f"{shape}"
                if sh != dec:
                    ok_sh, detail = False, f"{shape}"
                if expand_in_schur_q(ch_pdec) != {shape: 1}:
                    ok_exp, detail = False, f"{shape}"
        _check(out, f"plain family has Schur P character n={n}", ok_p, detail)
        _check(out, f"primed family has Schur Q character n={n}", ok_q, detail)
        _check(out, f"Q equals 2^rows P n={n}", ok_ratio, detail)
        _check(out, f"weight multisets match semistandard family n={n}",
               ok_sh, detail)
        _check(out, f"Schur Q expansion recovers the shape n={n}",
               ok_exp, detail)
    return out


def suite_axioms(max_len: int | None = None, **_) -> list[Check]:
    """Crystal axioms and seminormality on all small tensor powers."""
    out: list[Check] = []
    for n in (2, 3):
        mmax = 4 if max_len is None else min(4, max_len)
        words = [w for m in range(mmax + 1) for w in _all_words(n, m)]
        word_set = set(words)
        std = list(range(1, n))
        all_idx = (BAR1, ZERO) + tuple(std)

        def sl(w, i):
            return string_lengths(w, i, n)

        ok = {key: True for key in
              ("inverse", "weight", "seminormal-gl", "seminormal-q",
               "seminormal-q+", "commute-q", "commute-q+", "preserve-q+",
               "zero-strings", "tensor", "assoc")}
        detail: dict[str, str] = {}

        def fail(key, w, extra=""):
            ok[key] = False
            detail.setdefault(key, f"{word_str(w)} {extra}")

        for w in words:
            wt = weight_of(w, n)
            for i in all_idx:
                c = e_word(w, i, n)
                if c is not None:
                    if c not in word_set or f_word(c, i, n) != w:
                        fail("inverse", w, f"e index {i}")
                    want = list(wt)
                    if i == BAR1:
                        want[0] += 1
                        want[1] -= 1
                    elif i != ZERO:
                        want[i - 1] += 1
                        want[i] -= 1
                    if weight_of(c, n) != tuple(want):
                        fail("weight", w, f"index {i}")
                c = f_word(w, i, n)
                if c is not None and (c not in word_set
                                      or e_word(c, i, n) != w):
                    fail("inverse", w, f"f index {i}")
            for i in std:
                eps, ph = sl(w, i)
                if ph - eps != wt[i - 1] - wt[i]:
                    fail("seminormal-gl", w, f"index {i}")
            epsb, phb = sl(w, BAR1)
            want = 0 if wt[0] == wt[1] == 0 else 1
            if epsb + phb != want:
                fail("seminormal-q", w)
            eps0, ph0 = sl(w, ZERO)
            if eps0 + ph0 != (1 if wt[0] > 0 else 0):
                fail("seminormal-q+", w)
            if eps0 + ph0 > 1 or (epsb + phb == 0 and eps0 + ph0 != 0):
                fail("zero-strings", w)
            # bar-1 operators commute with e_i, f_i for 3 <= i <= n-1
            for i in range(3, n):
                for bar_op in (lambda v: e_word(v, BAR1, n),
                               lambda v: f_word(v, BAR1, n)):
                    for std_op in (lambda v: e_word(v, i, n),
                                   lambda v: f_word(v, i, n)):
                        a = _compose(bar_op, std_op, w)
                        b = _compose(std_op, bar_op, w)
                        if a != b:
                            fail("commute-q", w, f"index {i}")
                bw = bar_op(w)
                if bw is not None and sl(bw, i) != sl(w, i):
                    fail("commute-q", w, f"strings index {i}")
            # 0-operators commute with e_i, f_i for 2 <= i <= n-1 and
            # preserve weight and all other string lengths
            for zero_op in (lambda v: e_word(v, ZERO, n),
                            lambda v: f_word(v, ZERO, n)):
                zw = zero_op(w)
                for i in range(2, n):
                    for std_op in (lambda v: e_word(v, i, n),
                                   lambda v: f_word(v, i, n)):
                        if _compose(zero_op, std_op, w) != _compose(std_op, zero_op, w):
                            fail("commute-q+", w, f"index {i}")
                if zw is None:
                    continue
                if weight_of(zw, n) != wt:
                    fail("preserve-q+", w, "weight")
                for i in (BAR1,) + tuple(std):
                    if sl(zw, i) != sl(w, i):
                        fail("preserve-q+", w, f"strings index {i}")
            # signature rule equals the recursive tensor combinators; the
            # plain queer combinators are only defined on unprimed words
            checks = [(word_element(w, n), all_idx),
                      (word_element(w, n, flavor=FLAVOR_GL), tuple(std))]
            if not any(is_primed(x) for x in w):
                checks.append((word_element(w, n, flavor=FLAVOR_Q),
                               (BAR1,) + tuple(std)))
            for el, idx in checks:
                for i in idx:
                    ew = el.e(i)
                    fw = el.f(i)
                    if (None if ew is None else ew.letters()) != e_word(w, i, n) \
                            or (None if fw is None else fw.letters()) != f_word(w, i, n):
                        fail("tensor", w, f"index {i}")
            el = word_element(w, n)
            if len(w) == 3:
                left = word_element(w, n, bracket="left")
                for i in all_idx:
                    for op in ("e", "f"):
                        a = getattr(el, op)(i)
                        b = getattr(left, op)(i)
                        if (None if a is None else a.letters()) != \
                                (None if b is None else b.letters()):
                            fail("assoc", w, f"index {i}")
        names = {
            "inverse": "raising and lowering are partial inverses",
            "weight": "operators shift weights correctly",
            "seminormal-gl": "standard string lengths match weights",
            "seminormal-q": "bar-1 string lengths match weights",
            "seminormal-q+": "0-string lengths match weights",
            "zero-strings": "0-strings are short and vanish with bar-1",
            "commute-q": "bar-1 commutes with distant operators",
            "commute-q+": "0-operators commute with interior operators",
            "preserve-q+": "0-operators preserve weight and strings",
            "tensor": "signature rule equals tensor combinators",
            "assoc": "re-bracketing commutes with all operators",
        }
        for key, label in names.items():
            _check(out, f"{label} n={n}", ok[key], detail.get(key, ""))
    return out


def _compose(op1, op2, w):
    """op1 after op2, with absent results absorbing."""
    v = op2(w)
    return None if v is None else op1(v)


def suite_idempotence(**_) -> list[Check]:
    """Reinserting a tableau's reversed reading word reproduces it."""
    out: list[Check] = []
    ok = True
    detail = ""
    for size in range(1, 5):
        for shape in strict_partitions(size, max_len=3):
            for t in enumerate_primed_dectab(shape, 3):
                if insert_word(t.revrow_word())[0] != t:
                    ok, detail = False, t.compact_str()
    _check(out, "reinsertion fixes every tableau", ok, detail)
    return out


def suite_plactic(max_len: int | None = None, **_) -> list[Check]:
    """Local rewriting rules generate exactly insertion equivalence."""
    out: list[Check] = []
    n = 3
    mmax = 4 if max_len is None else min(4, max_len)
    for m in range(1, mmax + 1):
        words = list(_all_words(n, m))
        comps = {frozenset(c) for c in plactic.rewrite_components(words)}
        fibers = {frozenset(v)
                  for v in plactic.equivalence_classes(words).values()}
        _check(out, f"rewrite classes are insertion fibers m={m}",
               comps == fibers, f"{len(comps)} vs {len(fibers)}")

    chain = ["1 6 4 3 1' 2 2 4", "6 1 4 3 1' 2 2 4", "6 4 1 3 1' 2 2 4",
             "6 4 1 1 3 2' 2 4", "6 4 1 1 2 3 2' 4", "6 4 1 1 2 3 4 2'"]
    steps = [parse_word(s) for s in chain]
    ok = all(b in plactic.one_step_rewrites(a)
             for a, b in zip(steps, steps[1:]))
    _check(out, "eight-letter rewrite chain", ok)

    classes = _ClassStore()
    ok, detail = _increasing_instances(classes)
    _check(out, "insertions into increasing runs", ok, detail)
    ok, detail = _decreasing_instances(classes)
    _check(out, "insertions into decreasing runs", ok, detail)
    return out


class _ClassStore:
    """Memoized rewrite closures for repeated equivalence queries."""

    def __init__(self):
        self.class_of: dict = {}
        self.classes: list[frozenset] = []

    def same_class(self, u, v) -> bool:
        for w in (u, v):
            if w not in self.class_of:
                cls = plactic.equivalence_class(w)
                idx = len(self.classes)
                self.classes.append(cls)
                for member in cls:
                    self.class_of.setdefault(member, idx)
        return self.class_of[u] == self.class_of[v]


def _lp(value: int, flag: bool) -> int:
    return primed(value) if flag else unprimed(value)


def _increasing_instances(classes: _ClassStore):
    """x inserted before a decreasing read of an increasing run."""
    from itertools import combinations
    for count in (3, 4):
        for ys in combinations(range(1, 5), count):
            top = ys[1:][::-1]  # y_N ... y_1
            for x in range(1, 5):
                for dot in (False, True):
                    for circ in (False, True):
                        lhs = (_lp(x, dot),) + tuple(unprimed(y) for y in top) \
                            + (_lp(ys[0], circ),)
                        rhs = _expected_increasing(ys, x, dot, circ)
                        if rhs is None:
                            continue
                        if not classes.same_class(lhs, rhs):
                            return False, word_str(lhs)
    return True, ""


def _expected_increasing(ys, x, dot, circ):
    n_top = len(ys) - 1
    if x <= ys[1]:
        body = [unprimed(y) for y in ys[:1:-1]]  # y_N ... y_2
        return tuple(body) + (_lp(x, dot), unprimed(ys[1]), _lp(ys[0], circ))
    for i in range(2, n_top + 1):
        if ys[i - 1] < x <= ys[i]:
            body = [unprimed(ys[k]) for k in range(n_top, i, -1)]
            body.append(unprimed(x))
            body.extend(unprimed(ys[k]) for k in range(i - 1, 1, -1))
            body.append(_lp(ys[1], dot))
            body.append(unprimed(ys[i]))
            body.append(_lp(ys[0], circ))
            return tuple(body)
    return None


def _decreasing_instances(classes: _ClassStore):
    """u then y inserted before a weakly decreasing run."""
    from itertools import combinations_with_replacement
    for m in (2, 3, 4):
        for ws_sorted in combinations_with_replacement(range(1, 5), m):
            ws = ws_sorted[::-1]  # w_1 >= ... >= w_m
            for y in range(ws[-1] + 1, 5):
                for u in range(1, y + 1):
                    for dot in (False, True):
                        for circ in (False, True):
                            for lhs, rhs in _expected_decreasing(
                                    ws, y, u, dot, circ):
                                if not classes.same_class(lhs, rhs):
                                    return False, word_str(lhs)
    return True, ""


def _expected_decreasing(ws, y, u, dot, circ):
    m = len(ws)
    lhs = (_lp(u, dot), unprimed(y), _lp(ws[-1], circ)) \
        + tuple(unprimed(w) for w in ws[-2::-1])
    pairs = []
    if u > ws[-1] and ws[0] < y:
        rhs = (unprimed(u), _lp(ws[-1], circ)) \
            + tuple(unprimed(w) for w in ws[-2:0:-1]) \
            + (unprimed(y), _lp(ws[0], dot))
        pairs.append((lhs, rhs))
    if u <= ws[-1] and ws[0] < y:
        rhs = (_lp(u, dot),) + tuple(unprimed(w) for w in ws[::-1][:-1]) \
            + (unprimed(y), _lp(ws[0], circ))
        pairs.append((lhs, rhs))
    for j in range(2, m):
        if not ws[j - 1] < y <= ws[j - 2]:
            continue
        tail = [unprimed(ws[k]) for k in range(m - 2, j - 1, -1)]
        tail.append(unprimed(y))
        tail.extend(unprimed(ws[k]) for k in range(j - 2, -1, -1))
        if u > ws[-1]:
            rhs = (unprimed(u), _lp(ws[-1], circ)) + tuple(tail) \
                + (_lp(ws[j - 1], dot),)
        else:
            rhs = (_lp(u, dot), unprimed(ws[-1])) + tuple(tail) \
                + (_lp(ws[j - 1], circ),)
        pairs.append((lhs, rhs))
    if m >= 2 and ws[-1] < y <= ws[-2]:
        rhs = (_lp(u, dot), unprimed(y)) \
            + tuple(unprimed(w) for w in ws[-2::-1]) + (_lp(ws[-1], circ),)
        pairs.append((lhs, rhs))
    return pairs


def suite_rank(max_len: int | None = None, **_) -> list[Check]:
    """Graph ranks step along edges and locate the extreme vertices."""
    out: list[Check] = []
    graphs = []
    for n in (2, 3):
        mmax = (4 if n == 3 else 5)
        if max_len is not None:
            mmax = min(mmax, max_len)
        for m in range(1, mmax + 1):
            graphs.append((f"words n={n} m={m}",
                           CrystalGraph(list(_all_words(n, m)), word_ops(n))))
    for n in (2, 3):
        for size in range(1, 6):
            for shape in strict_partitions(size, max_len=n):
                graphs.append(
                    (f"tableaux n={n} shape={shape}",
                     CrystalGraph(list(enumerate_primed_dectab(shape, n)),
                                  tableau_ops(n))))
    ok_edge = ok_hi = ok_lo = True
    detail = ""
    for label, graph in graphs:
        ranks = graph.rank()
        if any(ranks[dst] != ranks[src] + 1
               for (src, _i), dst in graph.edges.items()):
            ok_edge, detail = False, label
        hi = {t for t, v in enumerate(graph.vertices)
              if is_highest(graph.ops, v)}
        lo = {t for t, v in enumerate(graph.vertices)
              if is_lowest(graph.ops, v)}
        zeros, tops = set(), set()
        for comp in graph.components():
            peak = max(ranks[t] for t in comp)
            zeros.update(t for t in comp if ranks[t] == 0)
            tops.update(t for t in comp if ranks[t] == peak)
        if zeros != hi:
            ok_hi, detail = False, label
        if tops != lo:
            ok_lo, detail = False, label
    _check(out, "rank increases along every edge", ok_edge, detail)
    _check(out, "rank vanishes exactly at highest vertices", ok_hi, detail)
    _check(out, "rank peaks exactly at lowest vertices", ok_lo, detail)
    return out


def suite_monoid(**_) -> list[Check]:
    """The insertion product is associative and unital."""
    out: list[Check] = []
    boxes = [ShiftedTableau([(x,)]) for x in (1, 2, 3, 4)]
    ok = all(monoid_product(monoid_product(a, b), c)
             == monoid_product(a, monoid_product(b, c))
             for a in boxes for b in boxes for c in boxes)
    _check(out, "associativity on one-box tableaux", ok)
    ok = all(monoid_product(t, EMPTY_TABLEAU) == t
             and monoid_product(EMPTY_TABLEAU, t) == t for t in boxes)
    ok = ok and monoid_product(EMPTY_TABLEAU, EMPTY_TABLEAU) == EMPTY_TABLEAU
    _check(out, "empty tableau is the unit", ok)
    return out


SUITES = {
    "golden-insertion": suite_golden_insertion,
    "insertion-steps": suite_insertion_steps,
    "bijection": suite_bijection,
    "equivariance": suite_equivariance,
    "highest-lowest": suite_highest_lowest,
    "characters": suite_characters,
    "axioms": suite_axioms,
    "idempotence": suite_idempotence,
    "plactic": suite_plactic,
    "rank": suite_rank,
    "monoid": suite_monoid,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    return SUITES[name](**kwargs)
