"""
Exceptions shared across the toolkit
"""


class FaceBudgetExceeded(RuntimeError):
    """A complex or boundary matrix would exceed its configured budget."""

    def __init__(self, what, size, budget):
        super().__init__(f"{what} needs {size:,} entries, budget is {budget:,}")
        self.what = what
        self.size = size
        self.budget = budget


class ConfigurationParseError(ValueError):
    """Malformed point-set document."""

    def __init__(self, message, line=None, column=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.column = column
        self.field = field


class SearchTimeout(RuntimeError):
    """The per-instance time budget ran out before the search finished."""


class HypothesisMismatch(ValueError):
    """Color cardinalities do not satisfy the hypotheses of the tagged theorem."""
