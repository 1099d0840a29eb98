"""Exception hierarchy.

Input problems (non-generic curves, bad codes, bad sites) derive from
``JPlusInputError``; broken internal identities derive from
``IdentityViolation`` so callers can tell the two apart.
"""


class JPlusInputError(ValueError):
    pass


# geometry

class CurveError(JPlusInputError):
    pass


class NotClosed(CurveError):
    pass


class EdgeReversal(CurveError):
    pass


class TripleOrHigherPoint(CurveError):
    pass


class TangentialIntersection(CurveError):
    pass


class PointOnCurve(CurveError):
    pass


# diagrams

class DiagramError(JPlusInputError):
    pass


class BadMultiplicity(DiagramError):
    pass


class UnrealizableCode(DiagramError):
    pass


class InconsistentWinding(DiagramError):
    pass


class CornerPatternViolation(DiagramError):
    pass


class NoGeometry(DiagramError):
    pass


# constructions and moves

class ConstructionError(JPlusInputError):
    pass


class ArcNotOuter(ConstructionError):
    pass


class ArcNotOnFace(ConstructionError):
    pass


class FaceUnbounded(ConstructionError):
    pass


class OrientationMismatch(ConstructionError):
    pass


class PlacementFailure(ConstructionError):
    pass


class IllegalSite(JPlusInputError):
    pass


class IdentityViolation(AssertionError):
    """Two computations that must agree did not.

    ``lhs`` and ``rhs`` carry both sides for the report.
    """

    def __init__(self, message, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs
