"""Exception hierarchy.

Everything raised on bad input derives from :class:`ValidationError`, so the
command line front end can map it to exit status 1 without knowing the
concrete type.
"""


class SkewIncError(Exception):
    pass


class ValidationError(SkewIncError):
    """Input data failed a structural check."""


# posets

class CycleError(ValidationError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("relations contain a cycle: %s" % " <= ".join(map(str, self.cycle)))


class UnknownElement(ValidationError):
    def __init__(self, token):
        self.token = token
        super().__init__("unknown element %r" % (token,))


class NotBijective(ValidationError):
    pass


class NotOrderPreserving(ValidationError):
    def __init__(self, x, y):
        self.witness = (x, y)
        super().__init__("map does not preserve the order at the pair (%s, %s)" % (x, y))


class NotAllComparable(ValidationError):
    pass


# fields and linear algebra

class DivisionByZero(ValidationError, ZeroDivisionError):
    pass


class MixedFields(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


# incidence algebra

class Mismatch(ValidationError):
    """Operands live over different posets or fields."""


class NotComparable(ValidationError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__("%s is not <= %s" % (x, y))


class NotInvertible(ValidationError):
    def __init__(self, x):
        self.element = x
        super().__init__("diagonal entry at %s is zero" % (x,))


class ZeroEntry(ValidationError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__("entry (%s, %s) is zero" % (x, y))


class NotMultiplicative(ValidationError):
    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__("sigma(%s,%s) != sigma(%s,%s)*sigma(%s,%s)" % (x, z, x, y, y, z))


class PathInconsistent(ValidationError):
    def __init__(self, x, y, chain1, chain2):
        self.pair = (x, y)
        self.chains = (tuple(chain1), tuple(chain2))
        super().__init__(
            "saturated chains %s and %s from %s to %s give different products"
            % (list(chain1), list(chain2), x, y))


# derivations

class ViolatesVanishing(ValidationError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__("tau(%s,%s) must vanish since lambda(%s) is not <= %s" % (x, y, x, y))


class ViolatesCocycle(ValidationError):
    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__("twisted cocycle identity fails on %s <= %s <= %s" % (x, y, z))


class NotADerivation(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        loc = []
        if line is not None:
            loc.append("line %d, column %d" % (line, column or 0))
        if path:
            loc.append(path)
        if loc:
            message = "%s: %s" % (", ".join(loc), message)
        super().__init__(message)
