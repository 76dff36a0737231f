"""Expansion of an expression, and the independent constant-term/derivative route.

:func:`expand` is the construction used to build automata.  :func:`constant_term`
and :func:`derive` compute the same information letter by letter without going
through expansions; agreement between the two is the main consistency check.
"""

from weakref import WeakKeyDictionary

from .errors import NotStarrable, UnknownLetter
from .expansion import Expansion
from .polynomial import Polynomial
from .syntax import Kind, subterms

_expansions = WeakKeyDictionary()
_constants = WeakKeyDictionary()


def _memo(table, ctx):
    m = table.get(ctx)
    if m is None:
        m = table[ctx] = {}
    return m


def clear_caches(ctx=None):
    if ctx is None:
        _expansions.clear()
        _constants.clear()
    else:
        _expansions.pop(ctx, None)
        _constants.pop(ctx, None)


def expand(e, ctx=None):
    """The expansion ``d(e)``, memoized per interned expression."""
    ctx = ctx or e.ctx
    memo = _memo(_expansions, ctx)
    x = memo.get(e)
    if x is None:
        x = memo[e] = _expand(e, ctx)
    return x


def _expand(e, ctx):
    dom = ctx.domain
    k = e.kind
    if k is Kind.ZERO:
        return Expansion(ctx)
    if k is Kind.ONE:
        return Expansion(ctx, dom.one)
    if k is Kind.LETTER:
        return Expansion(ctx, None, {e.letter: Polynomial.monomial(ctx, ctx.one)})
    if k is Kind.SUM:
        return expand(e.left, ctx).add(expand(e.right, ctx))
    if k is Kind.LWEIGHT:
        return expand(e.sub, ctx).lmul(e.weight)
    if k is Kind.RWEIGHT:
        return expand(e.sub, ctx).rmul(e.weight)
    if k is Kind.PROD:
        x = expand(e.left, ctx)
        res = x.proper().rmul_expr(e.right)
        if x.constant != dom.zero:
            res = res.add(expand(e.right, ctx).lmul(x.constant))
        return res
    if k is Kind.STAR:
        x = expand(e.sub, ctx)
        try:
            s = dom.star(x.constant)
        except NotStarrable as exc:
            raise NotStarrable(exc.weight, e.sub) from None
        # e itself is reused as the right factor, not rebuilt
        return Expansion(ctx, s).add(x.proper().rmul_expr(e).lmul(s))
    if k is Kind.CONJ:
        return expand(e.left, ctx).conj(expand(e.right, ctx))
    if k is Kind.COMPL:
        return expand(e.sub, ctx).compl()
    raise AssertionError(k)


def constant_term(e, ctx=None):
    """``c(e)``: weight of the empty word, computed syntactically."""
    ctx = ctx or e.ctx
    memo = _memo(_constants, ctx)
    c = memo.get(e)
    if c is None:
        c = memo[e] = _constant(e, ctx)
    return c


def _constant(e, ctx):
    dom = ctx.domain
    k = e.kind
    if k is Kind.ZERO or k is Kind.LETTER:
        return dom.zero
    if k is Kind.ONE:
        return dom.one
    if k is Kind.SUM:
        return dom.add(constant_term(e.left, ctx), constant_term(e.right, ctx))
    if k is Kind.LWEIGHT:
        return dom.mul(e.weight, constant_term(e.sub, ctx))
    if k is Kind.RWEIGHT:
        return dom.mul(constant_term(e.sub, ctx), e.weight)
    if k is Kind.PROD or k is Kind.CONJ:
        c = constant_term(e.left, ctx)
        if c == dom.zero:
            return c
        return dom.mul(c, constant_term(e.right, ctx))
    if k is Kind.STAR:
        c = constant_term(e.sub, ctx)
        try:
            return dom.star(c)
        except NotStarrable as exc:
            raise NotStarrable(exc.weight, e.sub) from None
    if k is Kind.COMPL:
        return dom.compl(constant_term(e.sub, ctx))
    raise AssertionError(k)


def derive(e, a, ctx=None):
    """Derivative of ``e`` with respect to letter ``a``, as a polynomial."""
    ctx = ctx or e.ctx
    if a not in ctx.alphabet:
        raise UnknownLetter(a)
    return _derive(e, a, ctx)


def _derive(e, a, ctx):
    dom = ctx.domain
    k = e.kind
    if k is Kind.ZERO or k is Kind.ONE:
        return Polynomial(ctx)
    if k is Kind.LETTER:
        return Polynomial.monomial(ctx, ctx.one) if e.letter == a else Polynomial(ctx)
    if k is Kind.SUM:
        return _derive(e.left, a, ctx).add(_derive(e.right, a, ctx))
    if k is Kind.LWEIGHT:
        return _derive(e.sub, a, ctx).lmul(e.weight)
    if k is Kind.RWEIGHT:
        return _derive(e.sub, a, ctx).rmul(e.weight)
    if k is Kind.PROD:
        p = _derive(e.left, a, ctx).rmul_expr(e.right)
        c = constant_term(e.left, ctx)
        if c != dom.zero:
            p = p.add(_derive(e.right, a, ctx).lmul(c))
        return p
    if k is Kind.STAR:
        s = dom.star(constant_term(e.sub, ctx))
        return _derive(e.sub, a, ctx).rmul_expr(e).lmul(s)
    if k is Kind.CONJ:
        return _derive(e.left, a, ctx).conj(_derive(e.right, a, ctx))
    if k is Kind.COMPL:
        return _derive(e.sub, a, ctx).compl()
    raise AssertionError(k)


def derive_polynomial(p, a):
    """Derivative of a polynomial: ``(+) <k_i> d_a(E_i)``."""
    return p.linear_map(lambda e: derive(e, a))


def derive_word(e, word, ctx=None):
    """Derivative with respect to a nonempty word, one letter at a time."""
    ctx = ctx or e.ctx
    if not word:
        raise ValueError("derive_word needs a nonempty word")
    p = derive(e, word[0], ctx)
    for a in word[1:]:
        p = derive_polynomial(p, a)
    return p


def polynomial_constant(p):
    """``c`` extended linearly: ``sum k_i c(E_i)``."""
    dom = p.ctx.domain
    return dom.sum(dom.mul(k, constant_term(e)) for e, k in p.items())


def validate(e, ctx=None):
    """Raise :class:`NotStarrable` at the first star whose argument has an unstarrable constant term."""
    ctx = ctx or e.ctx
    for x in subterms(e):
        if x.kind is Kind.STAR:
            c = constant_term(x.sub, ctx)
            if not ctx.domain.is_starrable(c):
                raise NotStarrable(c, x.sub)
    return True


def is_valid(e, ctx=None):
    try:
        return validate(e, ctx)
    except NotStarrable:
        return False
