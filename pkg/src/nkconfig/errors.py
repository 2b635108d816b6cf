"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph, unknown label, or label collision."""


class ParameterError(ValueError):
    """Invalid (k, n) pair or other out-of-range parameter."""


class CellBudgetExceeded(RuntimeError):
    """Enumeration would produce more cells than the configured budget."""

    def __init__(self, budget, produced=None):
        self.budget = budget
        self.produced = produced
        msg = f"cell budget of {budget} exceeded"
        if produced is not None:
            msg += f" (at least {produced} cells)"
        super().__init__(msg)


class InsufficientSubdivision(ValueError):
    """The base graph is not (k, n)-sufficiently subdivided."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"graph is not sufficiently subdivided: {len(report.violations)} violation(s)"
        )


class InvariantViolation(AssertionError):
    """A structural identity that must hold failed; carries the offending cell."""

    def __init__(self, message, cell=None):
        self.cell = cell
        if cell is not None:
            message = f"{message} [cell={cell!r}]"
        super().__init__(message)
