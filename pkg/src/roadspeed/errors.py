"""Exception types shared across the package.

Every error raised on a contract violation derives from RoadspeedError so
the command-line layer can map failures to a single exit path.
"""


class RoadspeedError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateConfiguration(RoadspeedError):
    """Input geometry does not determine a unique, invertible solution."""


class InsufficientData(RoadspeedError):
    """Fewer samples, correspondences or frames than the operation needs."""


class PointAtInfinity(RoadspeedError):
    """Homogeneous point cannot be converted to Euclidean coordinates."""


class BehindCamera(RoadspeedError):
    """3D point lies on or behind the camera plane and cannot be projected."""


class InvalidGeometry(RoadspeedError):
    """Physically impossible scene parameters (e.g. point above the camera)."""


class ShapeError(RoadspeedError):
    """Array dimensions do not match what the operation expects."""


class ClipError(RoadspeedError):
    """Requested region extends outside the image bounds."""


class EmptyPlate(RoadspeedError):
    """No character ink found in a plate crop."""


class ConfigurationError(RoadspeedError):
    """Run configuration is missing data required by the requested output."""
