"""Exception types shared across the toolkit."""


class ScrimkitError(Exception):
    """Base class for all toolkit errors."""


class NonPrimeCharacteristic(ScrimkitError):
    """Field construction asked for a composite characteristic."""


class SizeLimitExceeded(ScrimkitError):
    """A field or factorization would exceed the configured size budget."""


class ZeroHasNoOrder(ScrimkitError):
    """Multiplicative order requested for the zero element."""


class CharacteristicDividesN(ScrimkitError):
    """No primitive n-th root of unity exists when p divides n."""


class NotCoprime(ScrimkitError):
    """Arguments violate a gcd = 1 precondition."""


class DivisionByZeroPoly(ScrimkitError):
    """Polynomial division by the zero polynomial."""


class NonUnitLeadingCoefficient(ScrimkitError):
    """Chain-ring polynomial division needs a unit leading coefficient."""


class NonUnitConstantTerm(ScrimkitError):
    """Reciprocal involutions need a unit constant term."""


class EvenInput(ScrimkitError):
    """Operation defined for odd n only."""


class NilpotencyTooSmall(ScrimkitError):
    """Chain-ring construction needs nilpotency index t >= 2."""


class LiftMismatch(ScrimkitError):
    """Internal consistency failure during or after Hensel lifting."""


class OracleTooLarge(ScrimkitError):
    """A verification oracle was refused above its size budget."""


class EnumerationTooLarge(ScrimkitError):
    """An enumeration would produce more objects than the budget allows."""


class Unsupported(ScrimkitError):
    """Requested by-product is not available in this configuration."""


class InternalCheckFailed(ScrimkitError):
    """A structural self-check failed; indicates a bug, never user error."""
