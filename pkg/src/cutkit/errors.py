"""Exception hierarchy shared across the toolkit."""


class CutkitError(Exception):
    """Base class for all toolkit errors."""


class InputError(CutkitError, ValueError):
    """Malformed or out-of-contract input (bad ids, weights, formats, flags)."""


class ContractViolation(CutkitError, RuntimeError):
    """An internal invariant that should hold by construction was violated."""


class DecompositionError(CutkitError, RuntimeError):
    """Expander decomposition could not produce a valid certified partition."""
