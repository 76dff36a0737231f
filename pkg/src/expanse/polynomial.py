"""Polynomials of expressions: finite left-linear combinations ``<k1>E1 (+) ... (+) <kn>En``."""

from .syntax import operand_text, sort_key


class Polynomial:
    """Immutable map expression -> nonzero weight, iterated in canonical order.

    Zero weights and the zero expression are never stored; the empty
    polynomial is the null polynomial.
    """

    __slots__ = ("ctx", "_terms", "_items", "_hash")

    def __init__(self, ctx, terms=()):
        self.ctx = ctx
        dom = ctx.domain
        acc = {}
        for e, k in (terms.items() if isinstance(terms, dict) else terms):
            if e is ctx.zero:
                continue
            acc[e] = dom.add(acc[e], k) if e in acc else k
        self._terms = {e: k for e, k in acc.items() if k != dom.zero}
        self._items = None
        self._hash = None

    @classmethod
    def monomial(cls, ctx, e, k=None):
        return cls(ctx, [(e, ctx.domain.one if k is None else k)])

    def items(self):
        """``(expression, weight)`` pairs in canonical expression order."""
        if self._items is None:
            self._items = tuple(sorted(self._terms.items(), key=lambda t: sort_key(t[0])))
        return self._items

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, e):
        return self._terms.get(e, self.ctx.domain.zero)

    def __contains__(self, e):
        return e in self._terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx is other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        fmt = self.ctx.domain.format
        return " (+) ".join(f"<{fmt(k)}>{operand_text(e)}" for e, k in self.items())

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    @property
    def expressions(self):
        return [e for e, _ in self.items()]

    @property
    def weights(self):
        return [k for _, k in self.items()]

    # -- algebra ----

    def add(self, other):
        if not other._terms:
            return self
        if not self._terms:
            return other
        return Polynomial(self.ctx, list(self._terms.items()) + list(other._terms.items()))

    __add__ = add

    def lmul(self, k):
        mul = self.ctx.domain.mul
        return Polynomial(self.ctx, [(e, mul(k, w)) for e, w in self._terms.items()])

    def rmul(self, k):
        ctx = self.ctx
        if k == ctx.domain.zero:
            return Polynomial(ctx)
        return Polynomial(ctx, [(ctx.rweight(e, k), w) for e, w in self._terms.items()])

    def rmul_expr(self, f):
        ctx = self.ctx
        return Polynomial(ctx, [(ctx.prod(e, f), w) for e, w in self._terms.items()])

    def conj(self, other):
        ctx = self.ctx
        mul = ctx.domain.mul
        return Polynomial(ctx, [(ctx.conj(e, f), mul(k, h))
                                for e, k in self._terms.items()
                                for f, h in other._terms.items()])

    __and__ = conj

    def compl(self):
        """``<1> expr(P){c}``, after factoring out the norm when the domain allows it.

        Without zero divisors, ``(<k>E){c}`` reduces to ``E{c}``, so only the
        unit-form polynomial matters; this keeps colinear complements equal.
        """
        ctx = self.ctx
        base = self.unit_form()[1] if not ctx.domain.has_zero_divisors else self
        return Polynomial.monomial(ctx, ctx.compl(base.expr()))

    def expr(self):
        """Project onto an expression: left fold of ``<k>E`` in canonical order."""
        ctx = self.ctx
        e = ctx.zero
        for f, k in self.items():
            e = ctx.sum(e, ctx.lweight(k, f))
        return e

    def left_div(self, k):
        div = self.ctx.domain.left_div
        return Polynomial(self.ctx, [(e, div(k, w)) for e, w in self._terms.items()])

    def norm(self):
        return self.ctx.domain.norm(self.weights)

    def unit_form(self):
        """``(n, P')`` with ``P = <n>P'`` and ``n`` the domain norm of the coefficients."""
        if not self._terms:
            return self.ctx.domain.one, self
        n = self.norm()
        return n, self.left_div(n)

    def linear_map(self, fn):
        """Extend ``fn: Expr -> Polynomial`` linearly: ``(+) <k_i> fn(E_i)``."""
        out = Polynomial(self.ctx)
        for e, k in self.items():
            out = out.add(fn(e).lmul(k))
        return out

