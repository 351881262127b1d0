"""Exception hierarchy shared by every module of the package."""


class L1EmbedError(Exception):
    """Base class for all errors raised by l1embed."""


class MetricError(L1EmbedError, ValueError):
    """A distance matrix violates a metric axiom.

    ``kind`` names the axiom and ``index`` holds the offending point indices,
    e.g. ``("TriangleViolation", (0, 2, 1))``.
    """

    def __init__(self, kind, index, message=None):
        self.kind = kind
        self.index = tuple(index)
        super().__init__(message or f"{kind}{self.index}")


class ParameterError(L1EmbedError, ValueError):
    """Invalid scalar parameter (negative lambda, bad a/b pair, bad m...)."""


class EmptySubset(ParameterError):
    pass


class NotACorrespondence(L1EmbedError, ValueError):
    pass


class AmbientMismatch(L1EmbedError, ValueError):
    pass


class DuplicateCut(L1EmbedError, ValueError):
    pass


class BudgetExceeded(L1EmbedError):
    """An exact search refused to run because the instance is over budget."""


class SizeLimitExceeded(BudgetExceeded):
    pass


class TooManyPoints(BudgetExceeded):
    pass


class FamilyTooLarge(BudgetExceeded):
    pass


class NotInCutCone(L1EmbedError):
    """The pseudometric is not a nonnegative combination of cut metrics.

    ``certificate`` maps point pairs ``(i, j)`` to rational coefficients ``y``
    with ``sum y_ij * delta_c(i, j) <= 0`` for every cut ``c`` while
    ``sum y_ij * d(i, j) > 0``.
    """

    def __init__(self, certificate=None, message="metric is not in the cut cone"):
        self.certificate = certificate
        super().__init__(message)


class InternalConsistencyError(L1EmbedError, AssertionError):
    """A proven identity failed on a concrete instance: this is a bug."""


class NoLinearRealization(InternalConsistencyError):
    pass


class DisagreementDetected(InternalConsistencyError):
    def __init__(self, values, message=None):
        self.values = dict(values)
        super().__init__(message or f"l1-dimension routes disagree: {self.values}")
