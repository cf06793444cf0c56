"""Exception types shared across the calculator.

Every domain precondition or schema violation raises a CalculatorError
subclass; the CLI maps these to exit code 2 with a machine-readable
{code, message} line.  Anything else escaping is a bug.
"""


class CalculatorError(Exception):
    code = "error"


class PreconditionError(CalculatorError):
    """An operation was called outside its stated domain."""

    code = "precondition"


class PrimeMismatchError(CalculatorError):
    """Operands carry different configured primes."""

    code = "prime-mismatch"


class SchemaError(CalculatorError):
    """Malformed serialized input (JSON complex, flag payload)."""

    code = "schema"


class BoundError(CalculatorError):
    """Requested enumeration exceeds the configured safety bounds."""

    code = "bound-exceeded"
