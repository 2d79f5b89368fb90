"""Error taxonomy shared by all modules.

Every precondition failure raises a subclass of ClawpolyError so the CLI can
map it to a stable exit code (2 for preconditions, 3 for resource caps).
"""


class ClawpolyError(Exception):
    """Base class for all package errors."""


class DimensionError(ClawpolyError):
    """Shape or dimension mismatch between a point/matrix and a system."""


class LeafCountError(ClawpolyError):
    """Leaf count m outside the supported range (claw trees need m >= 3)."""


class UnsupportedGroupError(ClawpolyError):
    """Operation restricted to a specific group received a different one."""


class NotAMemberError(ClawpolyError):
    """Point lies outside the polytope required by the operation."""


class ClassificationUndefinedError(ClawpolyError):
    """Facet classification asked for a row without exactly two non-integral coordinates."""


class NotTightError(ClawpolyError):
    """Point does not lie on the pseudo-facet it was classified against."""


class IntegralPointError(ClawpolyError):
    """Segment-interior witness requested for an integral point (a vertex)."""


class ConfigurationError(ClawpolyError):
    """Support pattern is not one of the recognized configurations."""


class ResourceCapError(ClawpolyError):
    """Requested computation exceeds the configured size cap."""


class UnboundedError(ClawpolyError):
    """Inequality system describes an unbounded polyhedron."""


class InfeasibleError(ClawpolyError):
    """Inequality system has no solutions."""


class FileFormatError(ClawpolyError):
    """Malformed polyhedron or point file."""
