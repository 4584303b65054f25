"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class NoNegativeNormUnit(DomainError):
    """Z[sqrt(m)] has no unit of norm -1 (even continued fraction period)."""

    def __init__(self, m, period=None):
        self.m = m
        self.period = period
        msg = f"no unit of norm -1 in Z[sqrt({m})]"
        if period is not None:
            msg += f" (continued fraction period {period} is even)"
        super().__init__(msg)


class InvariantError(RuntimeError):
    """An internal mathematical invariant failed; always a bug."""
