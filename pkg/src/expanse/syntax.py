"""Weighted rational expressions.

Expressions are hash-consed per :class:`Context`: the smart constructors
(``ctx.sum``, ``ctx.prod``, ...) apply the trivial identities at the root
and return the unique interned node, so structural equality is ``is``.

Concrete syntax, loosest to tightest::

    E + F     sum            E <+ F    left-biased sum, E + (E{c} & F)
    E & F     conjunction
    E F       concatenation (juxtaposition, left associative)
    E*  E{c}  E{+}  E<k>     postfix: star, complement, E E*, right weight
    <k>E      left weight, binds to the following postfix-closed atom
    \\z  \\e  a  (E)         atoms: zero, one, letter, group
"""

from enum import IntEnum
from functools import cmp_to_key

from .errors import MalformedWeight, ParseError, UnknownLetter
from .semiring import get_domain

METACHARACTERS = set("()<>*{}+&\\ \t\n\r")


class Kind(IntEnum):
    # declaration order is the rank used by compare()
    ZERO = 0
    ONE = 1
    LETTER = 2
    SUM = 3
    PROD = 4
    STAR = 5
    LWEIGHT = 6
    RWEIGHT = 7
    CONJ = 8
    COMPL = 9


class Expr:
    """An interned expression node.  Build these through a :class:`Context`."""

    __slots__ = ("kind", "children", "letter", "weight", "ctx", "__weakref__")

    def __init__(self, ctx, kind, children=(), letter=None, weight=None):
        self.ctx = ctx
        self.kind = kind
        self.children = children
        self.letter = letter
        self.weight = weight

    @property
    def left(self):
        return self.children[0]

    @property
    def right(self):
        return self.children[1]

    @property
    def sub(self):
        return self.children[0]

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Expr({to_text(self)!r})"

    def __lt__(self, other):
        return compare(self, other) < 0


class Context:
    """An alphabet plus a weight domain; owns the intern table for its expressions."""

    def __init__(self, alphabet, domain):
        if isinstance(domain, str):
            domain = get_domain(domain)
        letters = list(alphabet)
        if not letters:
            raise ValueError("the alphabet must not be empty")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in alphabet {''.join(letters)!r}")
        for a in letters:
            if len(a) != 1 or a in METACHARACTERS or not a.isprintable():
                raise ValueError(f"invalid letter {a!r}")
        self.alphabet = tuple(sorted(letters))
        self._letters = frozenset(letters)
        self.domain = domain
        self._table = {}
        self.zero = self._intern(Kind.ZERO)
        self.one = self._intern(Kind.ONE)

    def __repr__(self):
        return f"Context({''.join(self.alphabet)!r}, {self.domain.kind})"

    def _intern(self, kind, children=(), letter=None, weight=None):
        key = (kind, *(id(c) for c in children), letter, weight)
        node = self._table.get(key)
        if node is None:
            # setdefault keeps a concurrent inserter's node if it won the race
            node = self._table.setdefault(key, Expr(self, kind, children, letter, weight))
        return node

    @property
    def interned(self):
        """Number of distinct expressions built so far in this context."""
        return len(self._table)

    # -- smart constructors (trivial identities applied at the root) ----

    def letter(self, a):
        if a not in self._letters:
            raise UnknownLetter(a)
        return self._intern(Kind.LETTER, letter=a)

    def weight(self, value):
        return self.domain.coerce(value)

    def sum(self, e, f):
        if e is self.zero:
            return f
        if f is self.zero:
            return e
        return self._intern(Kind.SUM, (e, f))

    def lweight(self, k, e):
        if type(k) is not self.domain.type:
            k = self.domain.coerce(k)
        dom = self.domain
        if k == dom.zero or e is self.zero:
            return self.zero
        if k == dom.one:
            return e
        if e.kind is Kind.LWEIGHT:
            return self.lweight(dom.mul(k, e.weight), e.sub)
        return self._intern(Kind.LWEIGHT, (e,), weight=k)

    def rweight(self, e, k):
        if type(k) is not self.domain.type:
            k = self.domain.coerce(k)
        dom = self.domain
        if k == dom.zero or e is self.zero:
            return self.zero
        if k == dom.one:
            return e
        if e.kind is Kind.RWEIGHT:
            return self.rweight(e.sub, dom.mul(e.weight, k))
        if e.kind is Kind.LWEIGHT:
            return self.lweight(e.weight, self.rweight(e.sub, k))
        if e.kind is Kind.LETTER or e is self.one:
            return self.lweight(k, e)
        return self._intern(Kind.RWEIGHT, (e,), weight=k)

    def prod(self, e, f):
        if e is self.zero or f is self.zero:
            return self.zero
        if e is self.one:
            return f
        if f is self.one:
            return e
        if e.kind is Kind.LWEIGHT and e.sub is self.one:
            return self.lweight(e.weight, f)
        if f.kind is Kind.LWEIGHT and f.sub is self.one:
            return self.rweight(e, f.weight)
        return self._intern(Kind.PROD, (e, f))

    def star(self, e):
        if e is self.zero:
            return self.one
        return self._intern(Kind.STAR, (e,))

    def conj(self, e, f):
        if e is self.zero or f is self.zero:
            return self.zero
        if _is_universal(e):
            return f
        if _is_universal(f):
            return e
        le, lf = _weighted_label(e), _weighted_label(f)
        if le is not None and lf is not None:
            (k, l1), (h, l2) = le, lf
            if l1 is not l2:
                return self.zero
            return self.lweight(self.domain.mul(k, h), l1)
        return self._intern(Kind.CONJ, (e, f))

    def compl(self, e):
        if not self.domain.has_zero_divisors:
            while e.kind is Kind.LWEIGHT or e.kind is Kind.RWEIGHT:
                e = e.sub
        return self._intern(Kind.COMPL, (e,))

    # -- sugar ----

    def plus(self, e):
        return self.prod(e, self.star(e))

    def lplus(self, e, f):
        return self.sum(e, self.conj(self.compl(e), f))

    def parse(self, text):
        return parse(text, self)


def _is_universal(e):
    return e.kind is Kind.COMPL and e.sub.kind is Kind.ZERO


def _weighted_label(e):
    """Return ``(k, label)`` if ``e`` is ``<k>l`` or a bare label ``l`` in A + {one}."""
    if e.kind is Kind.LETTER or e.kind is Kind.ONE:
        return e.ctx.domain.one, e
    if e.kind is Kind.LWEIGHT:
        s = e.sub
        if s.kind is Kind.LETTER or s.kind is Kind.ONE:
            return e.weight, s
    return None


# -- generic raw construction -------------------------------------------

def normalize(ctx, kind, children=(), letter=None, weight=None):
    """Apply the trivial identities to a raw node whose children are normal."""
    kind = Kind(kind)
    if kind is Kind.ZERO:
        return ctx.zero
    if kind is Kind.ONE:
        return ctx.one
    if kind is Kind.LETTER:
        return ctx.letter(letter)
    if kind is Kind.SUM:
        return ctx.sum(*children)
    if kind is Kind.PROD:
        return ctx.prod(*children)
    if kind is Kind.CONJ:
        return ctx.conj(*children)
    if kind is Kind.STAR:
        return ctx.star(children[0])
    if kind is Kind.COMPL:
        return ctx.compl(children[0])
    if kind is Kind.LWEIGHT:
        return ctx.lweight(weight, children[0])
    return ctx.rweight(children[0], weight)


# -- ordering -------------------------------------------------------------

def _cmp(x, y):
    return (x > y) - (x < y)


def compare(e, f):
    """Total order on expressions: kind rank, then children, letters, weights.

    Returns -1, 0 or 1.  Loops on the last child so long right spines do
    not recurse.
    """
    while True:
        if e is f:
            return 0
        if e.kind != f.kind:
            return -1 if e.kind < f.kind else 1
        kind = e.kind
        if kind is Kind.LETTER:
            return _cmp(e.letter, f.letter)
        if kind is Kind.LWEIGHT:
            c = _cmp(e.weight, f.weight)
            if c:
                return c
        elif kind is Kind.RWEIGHT:
            c = compare(e.sub, f.sub)
            return c or _cmp(e.weight, f.weight)
        elif len(e.children) == 2:
            c = compare(e.left, f.left)
            if c:
                return c
            e, f = e.right, f.right
            continue
        elif not e.children:
            return 0
        e, f = e.sub, f.sub


sort_key = cmp_to_key(compare)


# -- metrics --------------------------------------------------------------

def _fold(e, leaf, node):
    """Bottom-up fold over the tree without Python recursion."""
    memo = {}
    stack = [e]
    while stack:
        x = stack[-1]
        if x in memo:
            stack.pop()
            continue
        pending = [c for c in x.children if c not in memo]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        memo[x] = leaf(x) if not x.children else node(x, [memo[c] for c in x.children])
    return memo[e]


def size(e):
    """Number of symbols, parentheses excluded; a weight or an implicit product counts as one."""
    return _fold(e, lambda x: 1, lambda x, cs: 1 + sum(cs))


def width(e):
    """Number of letter occurrences."""
    return _fold(e, lambda x: 1 if x.kind is Kind.LETTER else 0, lambda x, cs: sum(cs))


def subterms(e):
    """All distinct subterms of ``e`` (including ``e``), children first."""
    order = []
    _fold(e, lambda x: order.append(x), lambda x, cs: order.append(x))
    return order


def has_kind(e, *kinds):
    return any(x.kind in kinds for x in subterms(e))


# -- printing -------------------------------------------------------------

_SUM, _CONJ, _PROD, _PREFIX, _POSTFIX = range(5)


def _level(e):
    k = e.kind
    if k is Kind.SUM:
        return _SUM
    if k is Kind.CONJ:
        return _CONJ
    if k is Kind.PROD:
        return _PROD
    if k is Kind.LWEIGHT:
        return _PREFIX
    return _POSTFIX


def to_text(e, parens=False):
    """Render ``e`` in the concrete syntax; ``parens=True`` brackets every compound."""
    fmt = e.ctx.domain.format
    if parens:
        return _full(e, fmt)
    return _min(e, fmt)


def operand_text(e):
    """Text of ``e`` as the expression of a monomial ``<k>e``.

    Sums, conjunctions and left-weighted terms are parenthesized; a product
    is not, since the weight of a monomial applies to the whole term anyway.
    """
    lvl = _level(e)
    return _wrap(_min(e, e.ctx.domain.format), lvl < _PROD or lvl == _PREFIX)


def _wrap(s, cond):
    return f"({s})" if cond else s


def _min(e, fmt):
    k = e.kind
    if k is Kind.ZERO:
        return "\\z"
    if k is Kind.ONE:
        return "\\e"
    if k is Kind.LETTER:
        return e.letter
    if k is Kind.SUM:
        return f"{_wrap(_min(e.left, fmt), _level(e.left) < _SUM)}+{_wrap(_min(e.right, fmt), _level(e.right) <= _SUM)}"
    if k is Kind.CONJ:
        return f"{_wrap(_min(e.left, fmt), _level(e.left) < _CONJ)}&{_wrap(_min(e.right, fmt), _level(e.right) <= _CONJ)}"
    if k is Kind.PROD:
        # a prefix weight on the right would be read back as a right weight
        return f"{_wrap(_min(e.left, fmt), _level(e.left) < _PROD)}{_wrap(_min(e.right, fmt), _level(e.right) <= _PREFIX)}"
    if k is Kind.LWEIGHT:
        return f"<{fmt(e.weight)}>{_wrap(_min(e.sub, fmt), _level(e.sub) < _POSTFIX)}"
    sub = _wrap(_min(e.sub, fmt), _level(e.sub) < _POSTFIX)
    if k is Kind.STAR:
        return sub + "*"
    if k is Kind.COMPL:
        return sub + "{c}"
    return f"{sub}<{fmt(e.weight)}>"


def _full(e, fmt):
    k = e.kind
    if k is Kind.ZERO:
        return "\\z"
    if k is Kind.ONE:
        return "\\e"
    if k is Kind.LETTER:
        return e.letter
    if k is Kind.SUM:
        return f"({_full(e.left, fmt)}+{_full(e.right, fmt)})"
    if k is Kind.CONJ:
        return f"({_full(e.left, fmt)}&{_full(e.right, fmt)})"
    if k is Kind.PROD:
        return f"({_full(e.left, fmt)}{_full(e.right, fmt)})"
    if k is Kind.LWEIGHT:
        return f"(<{fmt(e.weight)}>{_full(e.sub, fmt)})"
    if k is Kind.STAR:
        return f"({_full(e.sub, fmt)}*)"
    if k is Kind.COMPL:
        return f"({_full(e.sub, fmt)}{{c}})"
    return f"({_full(e.sub, fmt)}<{fmt(e.weight)}>)"


# -- parsing --------------------------------------------------------------

class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.pos = 0

    def error(self, msg, pos=None):
        return ParseError(msg, self.pos if pos is None else pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self, n=1):
        self.skip()
        return self.text[self.pos:self.pos + n]

    def parse(self):
        e = self.sum()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return e

    def sum(self):
        ctx = self.ctx
        e = self.conj()
        while True:
            if self.peek(2) == "<+":
                self.pos += 2
                e = ctx.lplus(e, self.conj())
            elif self.peek() == "+":
                self.pos += 1
                e = ctx.sum(e, self.conj())
            else:
                return e

    def conj(self):
        e = self.concat()
        while self.peek() == "&":
            self.pos += 1
            e = self.ctx.conj(e, self.concat())
        return e

    def starts_item(self):
        c = self.peek()
        if not c:
            return False
        if c == "<":
            return self.peek(2) != "<+"
        return c in "(\\" or c not in METACHARACTERS

    def concat(self):
        if not self.starts_item():
            raise self.error("expected an expression")
        e = self.item()
        while self.starts_item():
            e = self.ctx.prod(e, self.item())
        return e

    def item(self):
        if self.peek() == "<":
            k = self.weight()
            return self.ctx.lweight(k, self.item())
        e = self.atom()
        ctx = self.ctx
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                e = ctx.star(e)
            elif self.peek(3) == "{c}":
                self.pos += 3
                e = ctx.compl(e)
            elif self.peek(3) == "{+}":
                self.pos += 3
                e = ctx.plus(e)
            elif c == "<" and self.peek(2) != "<+":
                e = ctx.rweight(e, self.weight())
            elif c == "{":
                raise self.error("unknown postfix operator")
            else:
                return e

    def weight(self):
        start = self.pos
        end = self.text.find(">", start)
        if end < 0:
            raise MalformedWeight("unterminated weight", start)
        body = self.text[start + 1:end]
        try:
            k = self.ctx.domain.parse(body)
        except MalformedWeight as exc:
            raise MalformedWeight(str(exc), start) from None
        self.pos = end + 1
        return k

    def atom(self):
        c = self.peek()
        ctx = self.ctx
        start = self.pos
        if c == "(":
            self.pos += 1
            e = self.sum()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return e
        if c == "\\":
            code = self.text[self.pos:self.pos + 2]
            self.pos += 2
            if code == "\\z":
                return ctx.zero
            if code == "\\e":
                return ctx.one
            raise self.error(f"unknown escape {code!r}", start)
        if not c or c in METACHARACTERS:
            raise self.error("expected an atom")
        self.pos += 1
        try:
            return ctx.letter(c)
        except UnknownLetter:
            raise UnknownLetter(c, start) from None


def parse(text, ctx):
    """Parse ``text`` into a normalized expression over ``ctx``."""
    return _Parser(text, ctx).parse()
