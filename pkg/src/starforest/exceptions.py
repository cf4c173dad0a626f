"""Exception hierarchy shared by all starforest modules."""


class StarForestError(Exception):
    """Base class for every error raised by this package."""


class CoordinateOutOfRange(StarForestError, ValueError):
    pass


class DegeneratePointSet(StarForestError, ValueError):
    """Duplicate points, collinear triples, or a failed convexity certificate."""


class SizeOutOfRange(StarForestError, ValueError):
    pass


class IdenticalEdge(StarForestError, ValueError):
    pass


class HypothesisViolated(StarForestError):
    """The four-cluster containment hypothesis failed after all retries."""


class GeometryMissing(StarForestError, ValueError):
    pass


class NotTwoCenters(StarForestError, ValueError):
    def __init__(self, forest_index, n_stars):
        super().__init__(
            f"forest {forest_index} has {n_stars} star(s); center graph needs exactly 2"
        )
        self.forest_index = forest_index
        self.n_stars = n_stars


class IncompleteCovering(StarForestError, ValueError):
    pass


class SizeTooSmall(StarForestError, ValueError):
    pass


class BadParameters(StarForestError, ValueError):
    pass


class PlanarityFailure(StarForestError):
    def __init__(self, forest_index, e1, e2):
        super().__init__(f"forest {forest_index}: edges {e1} and {e2} cross")
        self.forest_index = forest_index
        self.edges = (e1, e2)


class BadSpan(StarForestError, ValueError):
    pass


class NotAComponent(StarForestError, ValueError):
    pass


class CrossingIntroduced(StarForestError, ValueError):
    pass


class StarForestViolation(StarForestError, ValueError):
    """A move would leave the target forest with a non-star component."""


class ProofInvariantViolation(StarForestError):
    """An invariant the recoloring argument guarantees did not hold.

    This always indicates a bug (or invalid input slipping past the
    entry checks), never a property of the data.
    """

    def __init__(self, step, detail):
        super().__init__(f"[{step}] {detail}")
        self.step = step
        self.detail = detail


class NoSpanningStar(StarForestError):
    pass


class InvalidInput(StarForestError, ValueError):
    pass


class TooLarge(StarForestError, ValueError):
    pass


class NodeLimitExceeded(StarForestError):
    def __init__(self, limit):
        super().__init__(f"search node limit {limit} exceeded")
        self.limit = limit
