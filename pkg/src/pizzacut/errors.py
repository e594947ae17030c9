"""Exception types. Each carries the CLI exit code it maps to."""


class PizzaError(Exception):
    exit_code = 1
    kind = "error"

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

    def to_dict(self):
        return {
            "error": self.kind,
            "message": str(self),
            "exit_code": self.exit_code,
            "diagnostics": self.diagnostics,
        }


class GeometryError(PizzaError, ValueError):
    """Input geometry violates a polygon or pizza invariant."""

    exit_code = 2
    kind = "invalid_input"


class OddNError(PizzaError, ValueError):
    exit_code = 3
    kind = "odd_n"


class NumericalFailure(PizzaError, RuntimeError):
    """A root search exhausted its budget or lost its bracket."""

    exit_code = 4
    kind = "numerical_failure"


class TheoremViolation(PizzaError, RuntimeError):
    """A search found no witness where one is guaranteed to exist."""

    exit_code = 5
    kind = "theorem_violation"


class WitnessFailure(PizzaError, RuntimeError):
    exit_code = 5
    kind = "witness_failure"
