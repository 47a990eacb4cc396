"""Exception hierarchy shared by every module."""


class SlceLabError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotPrime(SlceLabError, ValueError):
    pass


class DegreeTooLarge(SlceLabError, ValueError):
    pass


class NoIrreducibleFound(SlceLabError, RuntimeError):
    pass


class FieldMismatch(SlceLabError, ValueError):
    pass


class DivisionByZero(SlceLabError, ZeroDivisionError):
    pass


class ZeroMultiplier(SlceLabError, ValueError):
    pass


class NotDivisor(SlceLabError, ValueError):
    pass


class EvenCharacteristic(SlceLabError, ValueError):
    pass


class PeriodMismatch(SlceLabError, ValueError):
    pass


class AlphabetMismatch(SlceLabError, ValueError):
    pass


class NotUnit(SlceLabError, ValueError):
    pass


class TooLarge(SlceLabError, ValueError):
    pass


class HypothesisViolated(SlceLabError, ValueError):
    """A theorem was invoked on inputs outside its hypotheses."""


class TrivialCharacter(SlceLabError, ValueError):
    pass


class WrongOrder(SlceLabError, ValueError):
    pass


class NonIntegerNorm(SlceLabError, RuntimeError):
    pass


class ExcludedCandidate(SlceLabError, ValueError):
    pass
