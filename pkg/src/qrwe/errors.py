"""Exception types raised by the library."""


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold failed (non-integral trace,
    nonzero irrational part, negative coefficient, ...).  Signals a bug
    or a malformed input, never a rounding issue: all arithmetic is exact."""


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration refused to run because it would exceed
    the configured budget; carries the budget that would be required."""

    def __init__(self, required: int, budget: int):
        super().__init__(
            "enumeration needs budget >= %d, configured budget is %d"
            % (required, budget))
        self.required = required
        self.budget = budget
