"""Weight domains: Booleans, integers and rationals.

Weights are plain Python values (``bool``, ``int``, ``Fraction``); a
:class:`WeightDomain` carries the operations on them.  Each domain only
accepts values of its own Python type, so mixing domains fails loudly
instead of silently coercing ``2 + Fraction(1, 2)``.
"""

import re
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import (DivisionByZero, EmptyInput, MalformedWeight, MixedDomains,
                     NotDivisible, NotStarrable)


class WeightDomain:
    """Semiring interface.  Subclasses fill in the arithmetic."""

    kind = None
    type = None
    zero = None
    one = None
    has_zero_divisors = False

    def _check(self, *values):
        for v in values:
            if type(v) is not self.type:
                raise MixedDomains(f"{v!r} is not a {self.kind} weight")

    def add(self, k, h):
        raise NotImplementedError

    def mul(self, k, h):
        raise NotImplementedError

    def star(self, k):
        raise NotImplementedError

    def left_div(self, k, h):
        raise NotImplementedError

    def norm(self, coeffs):
        raise NotImplementedError

    def is_zero(self, k):
        return k == self.zero

    def compl(self, k):
        """``one`` if ``k`` is zero, ``zero`` otherwise."""
        self._check(k)
        return self.one if k == self.zero else self.zero

    def is_starrable(self, k):
        try:
            self.star(k)
        except NotStarrable:
            return False
        return True

    def sum(self, values):
        return reduce(self.add, values, self.zero)

    def coerce(self, value):
        """Convert a Python number into a weight of this domain."""
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, k):
        return str(k)

    def __repr__(self):
        return self.kind

    def __reduce__(self):
        return (get_domain, (self.kind,))


class BooleanDomain(WeightDomain):
    kind = "B"
    type = bool
    zero = False
    one = True

    def add(self, k, h):
        self._check(k, h)
        return k or h

    def mul(self, k, h):
        self._check(k, h)
        return k and h

    def star(self, k):
        self._check(k)
        return True

    def left_div(self, k, h):
        self._check(k, h)
        if not k:
            raise DivisionByZero("left division by 0")
        return h

    def norm(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise EmptyInput("norm of an empty coefficient list")
        self._check(*coeffs)
        return True

    def coerce(self, value):
        if value in (0, 1):
            return bool(value)
        raise MixedDomains(f"{value!r} is not a Boolean weight")

    def parse(self, text):
        text = text.strip()
        if text not in ("0", "1"):
            raise MalformedWeight(f"bad Boolean weight {text!r}")
        return text == "1"

    def format(self, k):
        return "1" if k else "0"


class IntegerDomain(WeightDomain):
    kind = "Z"
    type = int
    zero = 0
    one = 1
    _syntax = re.compile(r"-?\d+")

    def add(self, k, h):
        self._check(k, h)
        return k + h

    def mul(self, k, h):
        self._check(k, h)
        return k * h

    def star(self, k):
        # sum of k^n only converges for k = 0
        self._check(k)
        if k != 0:
            raise NotStarrable(k)
        return 1

    def left_div(self, k, h):
        self._check(k, h)
        if k == 0:
            raise DivisionByZero("left division by 0")
        q, r = divmod(h, k)
        if r:
            raise NotDivisible(f"{k} does not divide {h}")
        return q

    def norm(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise EmptyInput("norm of an empty coefficient list")
        self._check(*coeffs)
        return reduce(gcd, coeffs, 0) or 1

    def coerce(self, value):
        if isinstance(value, bool):
            raise MixedDomains(f"{value!r} is not an integer weight")
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise MixedDomains(f"{value} is not an integer weight")
            return value.numerator
        if isinstance(value, int):
            return value
        raise MixedDomains(f"{value!r} is not an integer weight")

    def parse(self, text):
        text = text.strip()
        if not self._syntax.fullmatch(text):
            raise MalformedWeight(f"bad integer weight {text!r}")
        return int(text)


class RationalDomain(WeightDomain):
    kind = "Q"
    type = Fraction
    zero = Fraction(0)
    one = Fraction(1)
    _syntax = re.compile(r"(-?\d+)(?:/(\d+))?")

    def add(self, k, h):
        self._check(k, h)
        return k + h

    def mul(self, k, h):
        self._check(k, h)
        return k * h

    def star(self, k):
        self._check(k)
        if abs(k) >= 1:
            raise NotStarrable(k)
        return 1 / (1 - k)

    def left_div(self, k, h):
        self._check(k, h)
        if k == 0:
            raise DivisionByZero("left division by 0")
        return h / k

    def norm(self, coeffs):
        # callers pass coefficients in canonical polynomial order
        coeffs = list(coeffs)
        if not coeffs:
            raise EmptyInput("norm of an empty coefficient list")
        self._check(*coeffs)
        return coeffs[0]

    def coerce(self, value):
        if isinstance(value, bool):
            raise MixedDomains(f"{value!r} is not a rational weight")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise MixedDomains(f"{value!r} is not a rational weight")

    def parse(self, text):
        text = text.strip()
        m = self._syntax.fullmatch(text)
        if not m:
            raise MalformedWeight(f"bad rational weight {text!r}")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise MalformedWeight(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)


B = BooleanDomain()
Z = IntegerDomain()
Q = RationalDomain()

DOMAINS = {"b": B, "z": Z, "q": Q}


def get_domain(name):
    """Look up a domain by name (``b``, ``z``, ``q``, case-insensitive)."""
    try:
        return DOMAINS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown weight domain {name!r}; expected one of b, z, q") from None
