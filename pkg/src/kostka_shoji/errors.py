"""Exception hierarchy.

Every error carries an ``exit_code`` used by the CLI and a ``details`` dict that is
serialized verbatim into the machine-readable error object.
"""


class KostkaError(Exception):
    exit_code = 1
    kind = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self):
        return {"error": self.kind, "message": self.message, "details": self.details}


class InvalidInput(KostkaError, ValueError):
    exit_code = 4
    kind = "invalid_input"


class BudgetExceeded(KostkaError):
    exit_code = 3
    kind = "budget_exceeded"


class InvariantViolation(KostkaError):
    exit_code = 2
    kind = "invariant_violation"


class RationalityError(InvariantViolation):
    kind = "rationality_violation"


class SingularBlockError(InvariantViolation):
    kind = "singular_block"


class PositivityError(InvariantViolation):
    kind = "positivity_violation"


class NonPolynomialError(InvariantViolation):
    kind = "non_polynomial_entry"


class ConventionError(InvariantViolation):
    kind = "convention_fault"


class SymmetryError(InvariantViolation):
    kind = "non_symmetric_input"


class PeelingError(InvariantViolation):
    kind = "peeling_failure"
