"""Exception types shared across the package."""


class EhcError(Exception):
    """Base class for all library errors."""


class ZeroInput(EhcError, ValueError):
    pass


class NotCyclotomicProduct(EhcError, ValueError):
    pass


class DenominatorNotEllIntegral(EhcError, ArithmeticError):
    pass


class NonIntegralCentralCharacter(EhcError, ArithmeticError):
    pass


class UnsupportedType(EhcError, ValueError):
    pass


class TwistedUnsupported(EhcError, ValueError):
    pass


class EllDividesQ(EhcError, ValueError):
    pass


class MaxLenExceeded(EhcError, RuntimeError):
    pass


class TooLarge(EhcError, ValueError):
    def __init__(self, order, limit):
        super().__init__(f"group order {order} exceeds limit {limit}")
        self.order = order
        self.limit = limit


class LiftFailure(EhcError, RuntimeError):
    pass


class CentraliserNotLevi(EhcError, RuntimeError):
    pass


class HypothesisViolated(EhcError, ValueError):
    def __init__(self, clauses):
        super().__init__("; ".join(clauses))
        self.clauses = list(clauses)


class ConfigError(EhcError, ValueError):
    pass
