"""Rational expansions: a constant term plus one polynomial per first letter."""

from .errors import NotProper
from .polynomial import Polynomial


class Expansion:
    """``<k> (+) a.[P_a] (+) b.[P_b] ...``

    ``parts`` never holds a null polynomial, so its keys are exactly the
    firsts of the expansion.
    """

    __slots__ = ("ctx", "constant", "parts")

    def __init__(self, ctx, constant=None, parts=None):
        self.ctx = ctx
        self.constant = ctx.domain.zero if constant is None else constant
        self.parts = {a: p for a, p in (parts or {}).items() if p}

    @property
    def firsts(self):
        return sorted(self.parts)

    def __getitem__(self, a):
        """Polynomial for letter ``a`` (the null polynomial outside the firsts)."""
        p = self.parts.get(a)
        return Polynomial(self.ctx) if p is None else p

    def is_proper(self):
        return self.constant == self.ctx.domain.zero

    def is_deterministic(self):
        return all(len(p) == 1 for p in self.parts.values())

    def proper(self):
        return Expansion(self.ctx, None, self.parts)

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return (self.ctx is other.ctx and self.constant == other.constant
                and self.parts == other.parts)

    def __hash__(self):
        return hash((self.constant, frozenset(self.parts.items())))

    def __str__(self):
        fmt = self.ctx.domain.format
        out = []
        if not self.is_proper() or not self.parts:
            out.append(f"<{fmt(self.constant)}>")
        out += [f"{a}.[{self.parts[a]}]" for a in self.firsts]
        return " (+) ".join(out)

    def __repr__(self):
        return f"Expansion({str(self)!r})"

    # -- algebra ----

    def add(self, other):
        parts = dict(self.parts)
        for a, p in other.parts.items():
            parts[a] = parts[a].add(p) if a in parts else p
        return Expansion(self.ctx, self.ctx.domain.add(self.constant, other.constant), parts)

    __add__ = add

    def lmul(self, k):
        dom = self.ctx.domain
        if k == dom.zero:
            return Expansion(self.ctx)
        return Expansion(self.ctx, dom.mul(k, self.constant),
                         {a: p.lmul(k) for a, p in self.parts.items()})

    def rmul(self, k):
        dom = self.ctx.domain
        if k == dom.zero:
            return Expansion(self.ctx)
        return Expansion(self.ctx, dom.mul(self.constant, k),
                         {a: p.rmul(k) for a, p in self.parts.items()})

    def rmul_expr(self, f):
        """``X . F`` for a proper expansion ``X``."""
        if not self.is_proper():
            raise NotProper(f"cannot right-multiply non-proper expansion {self} by an expression")
        return Expansion(self.ctx, None, {a: p.rmul_expr(f) for a, p in self.parts.items()})

    def conj(self, other):
        ctx = self.ctx
        parts = {a: p.conj(other.parts[a]) for a, p in self.parts.items() if a in other.parts}
        return Expansion(ctx, ctx.domain.mul(self.constant, other.constant), parts)

    __and__ = conj

    def compl(self):
        """Complement over the declared alphabet; the result is deterministic."""
        ctx = self.ctx
        null = Polynomial(ctx)
        parts = {a: self.parts.get(a, null).compl() for a in ctx.alphabet}
        return Expansion(ctx, ctx.domain.compl(self.constant), parts)

    def expr(self):
        ctx = self.ctx
        e = ctx.lweight(self.constant, ctx.one)
        for a in self.firsts:
            e = ctx.sum(e, ctx.prod(ctx.letter(a), self.parts[a].expr()))
        return e

    def det(self, normalized=False):
        """Make every part a monomial, optionally factoring out the coefficient norm."""
        ctx = self.ctx
        parts = {}
        for a, p in self.parts.items():
            if normalized:
                n, unit = p.unit_form()
                parts[a] = Polynomial.monomial(ctx, unit.expr(), n)
            else:
                parts[a] = Polynomial.monomial(ctx, p.expr())
        return Expansion(ctx, self.constant, parts)

