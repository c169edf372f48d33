"""Exception hierarchy for the pipeline.

Errors are split by which certificate failed: configuration problems,
genericity/Lefschetz failures of the chosen pencil, and numerical guard
trips during continuation.  The CLI maps these onto distinct exit codes.
"""


class TubelabError(Exception):
    """Base class for all package errors."""


class ConfigError(TubelabError):
    """Malformed run configuration (schema, types, ranges)."""


class GenericityError(TubelabError):
    """Pencil center fails a genericity requirement (center on curve,
    vertical line tangent, degenerate loop geometry)."""


class NotLefschetzError(TubelabError):
    """The discriminant in the pencil parameter has a multiple root:
    the pencil is not Lefschetz for this curve/center."""


class NearCollisionError(TubelabError):
    """Two critical values are numerically too close for the requested
    precision to certify separation."""


class TrackingError(TubelabError):
    """Base class for continuation failures."""


class StepUnderflowError(TrackingError):
    """Adaptive step fell below the halving budget (path too close to a
    critical value, or tolerance unreachable)."""


class LeadingCoeffSmallError(TrackingError):
    """|leading coefficient| fell below threshold along the path: a root
    is escaping to infinity; recenter the pencil."""


class NonTranspositionError(TrackingError):
    """A lasso's permutation is not a transposition."""


class ProductNotIdentityError(TrackingError):
    """The ordered product of lasso permutations is not the identity."""


class IntransitiveCoverError(TubelabError):
    """Monodromy group is intransitive: the covering curve is disconnected."""


class CoverBuildError(TubelabError):
    """Internal inconsistency while assembling the covering CW complex."""


class StabilizationError(TubelabError):
    """Orbit closure did not stabilize within the round budget."""
