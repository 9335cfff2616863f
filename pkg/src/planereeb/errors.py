"""Exception types shared across the library."""


class PlaneReebError(Exception):
    """Base class for all library errors."""


# --- polynomial kernel ---

class ZeroPolynomial(PlaneReebError):
    """An operation that needs a nonzero polynomial received zero."""


class DegenerateInput(PlaneReebError):
    """Input outside an operation's precondition (e.g. y-degree 0 resultant)."""


class NotIsolating(PlaneReebError):
    """A root interval does not isolate a root of the given polynomial."""


# --- curve analysis ---

class VerticalLineComponent(PlaneReebError):
    """The curve contains a vertical line (a factor independent of y)."""


class AsymptoteDetected(PlaneReebError):
    """The curve has a vertical asymptote; arc gluing is undefined."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class SingularCurve(PlaneReebError):
    """The curve has a real singular point (or is not square-free)."""


# --- domain ---

class PointOnCurve(PlaneReebError):
    """A sample point lies on one of the curves."""


class InvalidDomain(PlaneReebError):
    """A DomainSpec violates its invariants (intersecting selection, bad seed)."""


# --- sweep / graphs ---

class BlockedByDefect(PlaneReebError):
    """Genericity defects prevent the sweep."""

    def __init__(self, defects):
        super().__init__("sweep blocked by genericity defects: %s"
                         % "; ".join(str(d) for d in defects))
        self.defects = list(defects)


class NotWeaklyFinite(PlaneReebError):
    """The domain is not of weakly finite type (asymptotes, vertical lines...)."""


class NonGenericGraph(PlaneReebError):
    """The graph is not generic (valencies, shared abscissas)."""


class InvalidGraph(PlaneReebError):
    """A graph or code fails structural validation / replay."""


class InconsistentFeathers(PlaneReebError):
    """Arrow feather decorations are inconsistent (odd simple-feather count)."""


class NotADisk(PlaneReebError):
    """The graph is not the tree of a compact disk domain."""


# --- realization ---

class EpsilonSearchFailed(PlaneReebError):
    """No epsilon in the search schedule verified the target code."""


class BaseNotGeneric(PlaneReebError):
    """The realization base violates its preconditions."""


class GenerationFailed(PlaneReebError):
    """random_domain exhausted its re-roll budget."""


# --- parsing / emitting ---

class PolynomialSyntaxError(PlaneReebError):
    """Malformed polynomial expression; carries the byte offset."""

    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class NonIntegerExponent(PolynomialSyntaxError):
    """Exponent is not a nonnegative integer literal."""


class UnknownVariable(PolynomialSyntaxError):
    """Only the variables x and y are allowed."""


class WindowEmpty(PlaneReebError):
    """An empty or inverted rendering window."""
