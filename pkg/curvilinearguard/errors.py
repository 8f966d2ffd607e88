class GuardingError(Exception):
    """
    Base class of all errors raised by curvilinearguard
    """


#
# Triangulation graphs
#


class GraphError(GuardingError):
    pass


class WrongDiagonalCount(GraphError):
    def __init__(self, n, count):
        super().__init__(f"Expected {n - 3} diagonals for n={n}, got {count}")
        self.n = n
        self.count = count


class CrossingDiagonals(GraphError):
    def __init__(self, first, second):
        super().__init__(f"Diagonals {first} and {second} cross")
        self.pair = (first, second)


class DuplicateDiagonal(GraphError):
    def __init__(self, diagonal):
        super().__init__(f"Diagonal {diagonal} is listed twice")
        self.diagonal = diagonal


class AdjacentPair(GraphError):
    def __init__(self, pair):
        super().__init__(f"Pair {pair} is a boundary edge, not a diagonal")
        self.pair = pair


class LabelOutOfRange(GraphError):
    def __init__(self, pair, n):
        super().__init__(f"Pair {pair} has a label outside 0..{n - 1}")
        self.pair = pair


class NotADiagonal(GraphError):
    pass


class NotBoundary(GraphError):
    pass


class TooSmall(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class ForeignMember(GraphError):
    def __init__(self, member):
        super().__init__(f"Member {member} is not an edge of the graph")
        self.member = member


class NTooLarge(GraphError):
    pass


class OutOfRange(GraphError):
    pass


#
# Dominating sets
#


class DominationError(GuardingError):
    pass


class NotDominating(DominationError):
    pass


class NonEdgeMember(DominationError):
    pass


class RuleNotApplicable(DominationError):
    """A case rule met a configuration its preconditions exclude"""


#
# Polygons
#


class GeometryError(GuardingError):
    pass


class InvalidPolygon(GeometryError):
    pass


class NonSimple(InvalidPolygon):
    pass


class DegenerateInput(GeometryError):
    pass


class PointOutside(GeometryError):
    pass


class MonotoneError(GuardingError):
    pass


class NotMonotone(MonotoneError):
    pass


#
# Generators
#


class GeneratorError(GuardingError):
    pass


class MTooSmall(GeneratorError):
    pass


class KTooSmall(GeneratorError):
    pass


class NTooSmall(GeneratorError):
    pass


#
# File formats
#


class FormatError(GuardingError):
    def __init__(self, message, line=None, column=None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column
