"""Package-wide exception types with a stable meaning for the CLI exit codes."""


class InputError(ValueError):
    """Caller supplied data violating a documented precondition (CLI exit 2)."""


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates an arithmetic bug (CLI exit 1)."""


class UnsupportedError(InputError):
    """Requested a regime outside the supported desk-scale range."""
