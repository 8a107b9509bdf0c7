"""Exception hierarchy shared by every module in the package."""


class NormEuclidError(Exception):
    """Base class for computational errors (CLI exit code 3)."""


class DomainError(NormEuclidError, ValueError):
    """An analytic formula was evaluated outside its domain."""


class RangeError(NormEuclidError, ValueError):
    """A brute-force or sieve routine was asked for too large a range."""


class NotPrime(NormEuclidError, ValueError):
    pass


class NotOddPrime(NormEuclidError, ValueError):
    pass


class BadCongruence(NormEuclidError, ValueError):
    pass


class ArgumentNotCoprime(NormEuclidError, ValueError):
    pass


class WrongPairing(NormEuclidError, ValueError):
    pass


class SearchExhausted(NormEuclidError, RuntimeError):
    pass


class FactorizationError(NormEuclidError, RuntimeError):
    pass
