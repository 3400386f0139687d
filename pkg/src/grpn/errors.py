"""Exception hierarchy shared by all grpn modules."""


class GrpnError(Exception):
    """Base class for all errors raised by this package."""


# exact arithmetic
class OrderMismatch(GrpnError):
    """Arithmetic between cyclotomic numbers of different orders."""


class DivisionByZero(GrpnError, ZeroDivisionError):
    pass


# polynomials
class VariableCountMismatch(GrpnError):
    pass


class RingMismatch(GrpnError):
    pass


class NonUnitConstantTerm(GrpnError):
    """Geometric inversion requires constant term exactly 1."""


# group elements and parsing
class MalformedToken(GrpnError):
    pass


class ValueOutOfRange(GrpnError):
    pass


class NotAPermutation(GrpnError):
    pass


class ColorOutOfRange(GrpnError):
    pass


class ParamsMismatch(GrpnError):
    pass


class NotInH(GrpnError):
    pass


class NotInGamma(GrpnError):
    pass


class NIsOne(GrpnError):
    """Dropping the last letter needs at least two letters."""


class SizeGuardExceeded(GrpnError):
    """Enumeration would exceed the configured size guard."""


# coinvariant algebra
class ZeroInQuotient(GrpnError):
    """Monomial with every exponent >= d; it vanishes modulo the invariant ideal."""


class InternalNonIntegral(GrpnError):
    """Exponent gap not a multiple of r: signals a statistics bug."""


class InvalidClass(GrpnError):
    pass


class FuelExhausted(GrpnError):
    """Straightening exceeded its reduction budget; indicates a termination bug."""


# characters
class NotSymmetric(GrpnError):
    """Schur peeling hit a term that cannot head a Schur polynomial."""


# tableaux
class NonIntegralDelta(GrpnError):
    pass


class ShapeMismatch(GrpnError):
    pass
