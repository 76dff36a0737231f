"""Exception hierarchy shared by every module of the package."""


class ExpanseError(Exception):
    """Base class for all errors raised by expanse."""


class MixedDomains(ExpanseError, TypeError):
    pass


class NotStarrable(ExpanseError, ValueError):
    """A weight whose star is undefined; the enclosing expression is invalid."""

    def __init__(self, weight, subterm=None):
        self.weight = weight
        self.subterm = subterm
        msg = f"weight {weight} is not starrable"
        if subterm is not None:
            msg += f" (in {subterm}*)"
        super().__init__(msg)


class NotDivisible(ExpanseError, ArithmeticError):
    pass


class DivisionByZero(ExpanseError, ZeroDivisionError):
    pass


class EmptyInput(ExpanseError, ValueError):
    pass


class NotProper(ExpanseError, ValueError):
    pass


class ParseError(ExpanseError, ValueError):
    """Syntax error while reading an expression; ``position`` is a 0-based offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownLetter(ParseError):
    def __init__(self, letter, position=None):
        self.letter = letter
        super().__init__(f"unknown letter {letter!r}", position)


class MalformedWeight(ParseError):
    pass


class StateCapExceeded(ExpanseError, RuntimeError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"more than {cap} states; the construction may not terminate")
