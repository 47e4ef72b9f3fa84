"""Custom exceptions for the Goldbach laboratory."""


class GoldbachLabError(Exception):
    """Base exception for all laboratory errors."""

    pass


class DomainError(GoldbachLabError):
    """Raised when an operation's precondition is violated."""

    pass


class NumericalError(GoldbachLabError):
    """Raised when a numerical computation fails an integrity check."""

    pass


class ArcError(GoldbachLabError):
    """Raised when the major/minor arc construction is not valid."""

    pass


class SieveCacheError(GoldbachLabError):
    """Raised when a sieve cache file cannot be read or written."""

    pass


# Domain exceptions
class OutOfRangeError(DomainError):
    """Raised when an argument lies outside its admissible range."""

    def __init__(self, name: str, value: object, constraint: str) -> None:
        self.name = name
        self.value = value
        self.constraint = constraint
        super().__init__(f"{name}={value!r} violates {constraint}")


class NotOddPrimeError(DomainError):
    """Raised when an argument is required to be an odd prime."""

    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(f"{value} is not an odd prime")


class OddInputError(DomainError):
    """Raised when an even number is required."""

    def __init__(self, name: str, value: int) -> None:
        self.name = name
        self.value = value
        super().__init__(f"{name}={value} must be even")


class InconsistentCountError(DomainError):
    """Raised when a representation count breaks ordered = 2 * unordered - s."""

    def __init__(self, N: int, ordered: int, unordered: int, self_paired: bool) -> None:
        self.N = N
        self.ordered = ordered
        self.unordered = unordered
        self.self_paired = self_paired
        super().__init__(
            f"N={N}: ordered={ordered} != 2 * unordered - s = "
            f"{2 * unordered - int(self_paired)} (unordered={unordered}, s={int(self_paired)})"
        )


# Numerical exceptions
class RoundingResidueError(NumericalError):
    """Raised when a value expected to be an integer is too far from one."""

    def __init__(self, value: complex, residue: float, limit: float) -> None:
        self.value = value
        self.residue = residue
        self.limit = limit
        super().__init__(f"Value {value} is {residue:.3e} away from an integer (limit {limit:g})")


class QuadratureError(NumericalError):
    """Raised when adaptive quadrature fails to reach its tolerance."""

    def __init__(self, a: float, b: float, tol: float, panels: int) -> None:
        self.a = a
        self.b = b
        self.tol = tol
        self.panels = panels
        super().__init__(
            f"Quadrature on [{a:g}, {b:g}] did not reach tol={tol:g} within {panels} panels"
        )


class ConvolutionMismatchError(NumericalError):
    """Raised when the transform-based counter disagrees with the exact path."""

    def __init__(self, n: int, fast: int, exact: int) -> None:
        self.n = n
        self.fast = fast
        self.exact = exact
        super().__init__(f"Convolution count for N={n} is {fast}, exact scan gives {exact}")


# Arc exceptions
class ArcOverlapError(ArcError):
    """Raised when two major arcs intersect."""

    def __init__(
        self, left: tuple[int, int], right: tuple[int, int], gap: float, width: float
    ) -> None:
        self.left = left
        self.right = right
        self.gap = gap
        self.width = width
        super().__init__(
            f"Major arcs around {left[0]}/{left[1]} and {right[0]}/{right[1]} overlap: "
            f"centre gap {gap:.3e} < arc width {width:.3e}"
        )


# Sieve cache exceptions
class CorruptedCacheError(SieveCacheError):
    """Raised when a sieve cache file fails validation."""

    def __init__(self, path: str, reason: str) -> None:
        self.path = path
        self.reason = reason
        super().__init__(f"Sieve cache {path} is corrupted: {reason}")


class CacheWriteError(SieveCacheError):
    """Raised when a sieve cache file cannot be written."""

    def __init__(self, path: str, reason: str) -> None:
        self.path = path
        self.reason = reason
        super().__init__(f"Cannot write sieve cache {path}: {reason}")
