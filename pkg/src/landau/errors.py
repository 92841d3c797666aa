"""Exception types shared across the package."""


class LandauError(Exception):
    """Base class for all package-specific errors."""


class DomainError(LandauError, ValueError):
    """An argument lies outside an operation's documented domain."""


class ResourceLimitError(LandauError, RuntimeError):
    """A request exceeds the configured resource ceiling."""


class InsufficientSieveError(LandauError, ValueError):
    """A query needs primes beyond the sieve's limit."""


class NoBoundError(LandauError, LookupError):
    """No analytic bound entry applies at the requested point."""


class CacheFormatError(LandauError, ValueError):
    """A prime-cache file is malformed or inconsistent."""
