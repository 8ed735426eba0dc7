"""Exception hierarchy shared by the package."""


class SplineError(Exception):
    """Base class for errors raised by gsplines."""


class RingMismatch(SplineError, ValueError):
    pass


class UnsupportedRing(SplineError, ValueError):
    pass


class NonPrincipalIntersection(SplineError, ValueError):
    """Intersection of non-principal Z[x] ideals was requested."""


class NotInSum(SplineError, ValueError):
    """The element does not lie in the sum of the given ideals."""


class MembershipUndecided(SplineError):
    """A Z[x] membership query came back Unknown where an answer was required."""


class InvalidAutomorphism(SplineError, ValueError):
    pass


class GraphError(SplineError, ValueError):
    """Malformed graph, unknown vertex, invalid path, wrong graph family, ..."""


class DisconnectedPair(GraphError):
    pass


class CrtInconsistency(SplineError, RuntimeError):
    """The CRT builder hit an infeasible system.

    Over a Prufer domain this cannot happen, so it is raised loudly rather
    than swallowed.
    """


class NotACutVertex(GraphError):
    pass


class MoreThanTwoSides(GraphError):
    pass


class PastingEquationFails(SplineError, ValueError):
    pass


class BudgetExceeded(SplineError, RuntimeError):
    pass


class InvalidIsomorphism(SplineError, ValueError):
    pass


class ParseError(SplineError, ValueError):
    """Malformed input file; the message names the offending field or line."""


class CrtInfeasible(SplineError, ValueError):
    """A congruence system has no solution; ``pair`` names a violated pairwise condition."""

    def __init__(self, j: int, k: int, message: str = ""):
        self.pair = (j, k)
        super().__init__(message or f"congruences {j} and {k} are incompatible")
