"""Exception types shared across the package."""


class ShapeInvError(Exception):
    """Base class for all package errors."""


class NonPositiveA(ShapeInvError):
    """A(x) is not strictly positive in the interior of the interval."""


class WeightNotVanishing(ShapeInvError):
    """A(x)*W(x) does not vanish at an interval endpoint."""


class DegreeViolation(ShapeInvError):
    """(A*W)'/W is not a polynomial of degree <= 1."""


class UnknownPreset(ShapeInvError):
    """Requested catalog entry does not exist."""


class IntervalDegenerate(ShapeInvError):
    """Interval endpoints are not ordered (a >= b)."""


class NoConvergence(ShapeInvError):
    """Iterative solver failed to converge."""


class NormDiverges(ShapeInvError):
    """Requested polynomial norm is not finite for this weight."""


class BadQuantumNumbers(ShapeInvError):
    """Quantum numbers violate 0 <= m <= n <= max_n."""


class MapNotMonotone(ShapeInvError):
    """Coordinate map xi(x) is not monotone (A <= 0 on the grid)."""


class OutOfInterval(ShapeInvError):
    """Point lies outside the open interval (a, b)."""


class TruncationTooSmall(ShapeInvError):
    """Operator truncation must satisfy nmax >= m + 2."""


class NonOscillatory(ShapeInvError):
    """Classical motion is not oscillatory at this energy (eta1 >= 0)."""


class DivergentRecursion(ShapeInvError):
    """Coefficient recursion grows without passing the tail-mass check."""


class ZeroDenominator(ShapeInvError):
    """A recursion prefactor denominator vanished."""


class ZeroEnergyDivision(ShapeInvError):
    """Factorization energy E(j, m) = 0 encountered in a coefficient product."""


class DivergentSeries(ShapeInvError):
    """State expansion failed the tail-mass check at the truncation cap."""


class ParityUnavailable(ShapeInvError):
    """Parity-restricted states need even A, even W and a symmetric interval."""


class BasisMismatch(ShapeInvError):
    """State expansions live in different bases (spec or m differ)."""
