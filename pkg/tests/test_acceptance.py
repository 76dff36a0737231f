"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are shown in
the "acceptance criteria" section of the terminal summary, or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction

from expanse import (Context, Kind, build, build_lazy, constant_term, derive, expand, has_kind,
                     is_valid, width)
from expanse.bench import time_build
from expanse.errors import StateCapExceeded
from expanse.oracle import assert_equiv

from acceptance_log import criterion
from corpus import EXAMPLES
from exprgen import ALL_OPS, BASIC_OPS, corpus, random_expr
from test_syntax import IDENTITY_ROWS, check_compl_gate, check_identity_row

third = Fraction(1, 3)


def test_criterion_1_worked_examples():
    with criterion(1, "worked examples d(F2), d(E2), d(a*E2), d(b*E2), d(E3), E2 automaton"):
        t0 = time.perf_counter()
        q = Context("ab", "q")
        f2 = q.parse("<1/6>a*+<1/3>b*")
        e2 = q.star(f2)
        ae, be = q.prod(q.parse("a*"), e2), q.prod(q.parse("b*"), e2)

        assert str(expand(f2)) == "<1/2> (+) a.[<1/6>a*] (+) b.[<1/3>b*]"
        for e, (ka, kb) in [(e2, (third, 2 * third)), (ae, (4 * third, 2 * third)),
                            (be, (third, 5 * third))]:
            x = expand(e)
            assert x.constant == 2
            assert dict(x["a"].items()) == {ae: ka}
            assert dict(x["b"].items()) == {be: kb}

        z = Context("ab", "z")
        e3 = z.parse("<2>ab<+<3>(a+b){+}")
        assert str(expand(e3)) == "a.[<2>b (+) <3>(b{c}&(a+b)*)] (+) b.[<3>(a+b)*]"

        a = build(e2)
        assert a.states == [e2, ae, be]
        assert a.labeled_transitions() == {
            (e2, "a", ae, third), (e2, "b", be, 2 * third),
            (ae, "a", ae, 4 * third), (ae, "b", be, 2 * third),
            (be, "a", ae, third), (be, "b", be, 5 * third),
        }
        assert a.final == {0: 2, 1: 2, 2: 2}
        assert time.perf_counter() - t0 < 1.0


def test_criterion_2_size_laws():
    with criterion(2, "size laws: (a^m)*&(a^n)* has m*n states; F_n{c} has 2^(n+1)+1 states"):
        t0 = time.perf_counter()
        one = Context("a", "b")
        for m, n in [(2, 3), (3, 4), (2, 5)]:
            e = one.parse(f"({'a' * m})*&({'a' * n})*")
            assert len(build(e)) == m * n, (m, n)
        ab = Context("ab", "b")
        counts = {}
        for n in (1, 2, 3):
            e = ab.parse("((a+b)*a" + "(a+b)" * n + "){c}")
            counts[n] = len(build(e))
        expected = {n: 2 ** (n + 1) + 1 for n in (1, 2, 3)}
        assert counts == expected, f"state counts {counts}, expected {expected}"
        assert time.perf_counter() - t0 < 5.0


def test_criterion_3_expansion_matches_derivatives():
    with criterion(3, "expand agrees with constant_term/derive on 1000 random expressions per domain"):
        for domain in ("b", "z", "q"):
            ctx, exprs = corpus(domain, 1000, seed=2024, depth=6, ops=ALL_OPS)
            assert len(exprs) >= 1000
            for e in exprs:
                x = expand(e)
                assert x.constant == constant_term(e)
                for a in ctx.alphabet:
                    assert x[a] == derive(e, a), (str(e), a)


def _random_complement_free(count, seed):
    rng = random.Random(seed)
    out = []
    domains = ("b", "z", "q")
    ctxs = {d: Context("abc", d) for d in domains}
    ops = BASIC_OPS + ("conj",)
    while len(out) < count:
        ctx = ctxs[domains[len(out) % 3]]
        e = random_expr(ctx, rng, depth=5, ops=ops)
        if is_valid(e):
            out.append(e)
    return out


def test_criterion_4_automaton_denotes_series():
    with criterion(4, "evaluate(build(E), u) == word_weight(E, u) for |u| <= 6 on corpus + 200 random"):
        exprs = [Context(alpha, dom).parse(text) for alpha, dom, text in EXAMPLES]
        exprs += _random_complement_free(200, seed=99)
        assert len(exprs) >= 200 + len(EXAMPLES)
        for e in exprs:
            report = assert_equiv(e, max_len=6)
            assert report.ok, str(report)
            try:
                det = assert_equiv(e, max_len=6, deterministic=True, state_cap=2000)
            except StateCapExceeded:
                continue
            assert det.ok, str(det)


def test_criterion_5_basic_size_bound():
    with criterion(5, "state count <= width + 1 on 500 random basic expressions"):
        seen = 0
        for i, domain in enumerate(("b", "z", "q")):
            ctx, exprs = corpus(domain, 170, seed=500 + i, depth=6, ops=BASIC_OPS)
            for e in exprs:
                assert not has_kind(e, Kind.CONJ, Kind.COMPL)
                assert len(build(e)) <= width(e) + 1, str(e)
                seen += 1
        assert seen >= 500


def test_criterion_6_alphabet_size_independence():
    with criterion(6, "E_500 build time: expansion 254/2 <= 1.5x, derivation 254/2 > 5x"):
        t0 = time.perf_counter()
        limit = sys.getrecursionlimit()
        ms = {}
        for algo in ("expansion", "derivation"):
            for size in (2, 254):
                ms[algo, size], states = time_build(algo, 500, size, runs=5)
                assert states == 502
        sys.setrecursionlimit(limit)
        exp_ratio = ms["expansion", 254] / ms["expansion", 2]
        der_ratio = ms["derivation", 254] / ms["derivation", 2]
        print(f"  expansion ratio {exp_ratio:.2f}, derivation ratio {der_ratio:.2f}")
        assert exp_ratio <= 1.5
        assert der_ratio > 5
        assert time.perf_counter() - t0 < 120


def test_criterion_7_non_termination():
    with criterion(7, "deterministic a*+(<2>a)* hits the cap; lazy evaluation of a^k gives 1+2^k"):
        ctx = Context("a", "q")
        e = ctx.parse("a*+(<2>a)*")
        for cap in (3, 4, 5, 10, 100, 1000):
            try:
                build(e, deterministic=True, state_cap=cap)
            except StateCapExceeded as exc:
                assert exc.cap == cap
            else:
                raise AssertionError(f"cap {cap} not hit")
        lazy = build_lazy(e, deterministic=True)
        for k in range(11):
            assert lazy.evaluate("a" * k) == 1 + 2 ** k
        assert lazy.is_deterministic()


def test_criterion_8_complement_finiteness():
    with criterion(8, "((<2>a)*+(<4>aa)*){c} over Q: finite, exactly 2 complemented derived states"):
        ctx = Context("a", "q")
        a = build(ctx.parse("((<2>a)*+(<4>aa)*){c}"), state_cap=1000)
        derived = {a.states[j] for _, _, j, _ in a.transition_list()}
        assert len(derived) == 2
        assert all(s.kind is Kind.COMPL for s in derived)
        # written in canonical sum order the input is itself one of the two
        b = build(ctx.parse("((<4>aa)*+(<2>a)*){c}"), state_cap=1000)
        assert len(b) == 2


def test_criterion_9_trivial_identities():
    with criterion(9, f"all {len(IDENTITY_ROWS)} trivial-identity rows plus complement gating"):
        for domain in ("z", "q"):
            ctx = Context("ab", domain)
            for name, lhs, rhs in IDENTITY_ROWS:
                assert check_identity_row(ctx, lhs, rhs), name
        assert check_compl_gate()


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
