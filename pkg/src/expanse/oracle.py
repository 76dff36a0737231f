"""Reference semantics built only on constant terms and derivatives.

Nothing here calls :func:`expanse.expand.expand`: word weights come from
``c(d_u E)``, and :func:`automaton_via_derivation` loops over the whole
alphabet for every state, the way a derivative-based construction has to.
"""

from dataclasses import asdict, dataclass, field
from itertools import product

from .automaton import DEFAULT_STATE_CAP, Automaton, build
from .expand import (constant_term, derive, derive_polynomial, derive_word,
                     polynomial_constant, validate)
from .expansion import Expansion
from .polynomial import Polynomial


def word_weight(e, word, ctx=None):
    """Weight of ``word`` in the series denoted by ``e``."""
    ctx = ctx or e.ctx
    if not word:
        return constant_term(e, ctx)
    return polynomial_constant(derive_word(e, word, ctx))


def derivation_step(ctx, deterministic=False, normalized=False):
    """State expansion assembled from ``c`` and one ``d_a`` per alphabet letter."""
    def step(e):
        parts = {}
        for a in ctx.alphabet:
            p = derive(e, a, ctx)
            if not p:
                continue
            if deterministic:
                if normalized:
                    n, unit = p.unit_form()
                    p = Polynomial.monomial(ctx, unit.expr(), n)
                else:
                    p = Polynomial.monomial(ctx, p.expr())
            parts[a] = p
        return Expansion(ctx, constant_term(e, ctx), parts)
    return step


def automaton_via_derivation(e, ctx=None, deterministic=False, normalized=False,
                             state_cap=DEFAULT_STATE_CAP):
    ctx = ctx or e.ctx
    validate(e, ctx)
    a = Automaton(ctx, e, derivation_step(ctx, deterministic, normalized),
                  deterministic, normalized, state_cap)
    return a.explore()


def label_isomorphic(a1, a2):
    """Same initial label, same labeled transitions and same labeled final weights."""
    return (a1.states[0] is a2.states[0]
            and a1.labeled_transitions() == a2.labeled_transitions()
            and a1.labeled_finals() == a2.labeled_finals())


def words(alphabet, max_len):
    for n in range(max_len + 1):
        for w in product(alphabet, repeat=n):
            yield "".join(w)


@dataclass
class EquivReport:
    expression: str
    max_len: int
    words_checked: int = 0
    ok: bool = True
    mismatch: dict = field(default_factory=dict)

    def __str__(self):
        if self.ok:
            return f"ok: {self.words_checked} words up to length {self.max_len} agree for {self.expression}"
        m = self.mismatch
        return (f"MISMATCH on {m['word']!r} for {self.expression}: "
                f"expansion={m['expansion']} derivative={m['derivative']} derivation={m['derivation']}")

    def to_dict(self):
        return asdict(self)


def assert_equiv(e, ctx=None, max_len=6, deterministic=False, normalized=False,
                 state_cap=DEFAULT_STATE_CAP):
    """Compare three routes to the weight of every word of length <= ``max_len``.

    The expansion-built automaton, the word-derivative weight ``c(d_u E)``
    and the derivation-built automaton must agree exactly.  Derivatives are
    carried along a trie of words so each prefix is derived only once.
    """
    ctx = ctx or e.ctx
    fmt = ctx.domain.format
    by_expansion = build(e, ctx, deterministic, normalized, state_cap)
    by_derivation = automaton_via_derivation(e, ctx, deterministic, normalized, state_cap)
    report = EquivReport(str(e), max_len)

    # (word, derivative polynomial, vector in each automaton)
    stack = [("", None, dict(by_expansion.initial), dict(by_derivation.initial))]
    while stack:
        w, p, v1, v2 = stack.pop()
        k0 = constant_term(e, ctx) if p is None else polynomial_constant(p)
        k1 = by_expansion.read_out(v1)
        k2 = by_derivation.read_out(v2)
        report.words_checked += 1
        if not (k0 == k1 == k2):
            report.ok = False
            report.mismatch = {"word": w, "derivative": fmt(k0),
                               "expansion": fmt(k1), "derivation": fmt(k2)}
            return report
        if len(w) == max_len:
            continue
        for a in reversed(ctx.alphabet):
            q = derive(e, a, ctx) if p is None else derive_polynomial(p, a)
            stack.append((w + a, q, by_expansion.step_vector(v1, a),
                          by_derivation.step_vector(v2, a)))
    return report
