"""2D projective geometry: homogeneous points and road-plane homographies.

Conventions used throughout the package:

* the image plane is measured in pixels, x to the right and y downward;
* the road reference plane is measured in meters in a right-handed frame;
* a ``Homography`` stores the world->image map, so projecting a pixel track
  onto the road goes through ``invert``.

Estimation follows the normalized DLT: both point sets are Hartley
normalized (zero centroid, mean radius sqrt(2)), the homogeneous system is
solved by SVD, and the result is de-normalized.  Matrices are kept in a
canonical scale (unit Frobenius norm, largest-magnitude entry positive) so
two estimates of the same map compare entry by entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfiguration, InsufficientData, PointAtInfinity

__all__ = [
    "Point2",
    "HomogeneousPoint2",
    "Correspondence",
    "Homography",
    "normalize_points",
    "estimate_homography",
    "apply",
    "invert",
    "compose",
    "reprojection_rms",
    "load_calibration",
    "homography_to_list",
    "homography_from_list",
]

# Ratio of smallest to largest singular value below which a configuration
# is treated as rank deficient (coincident or collinear markers).
_RANK_RTOL = 1e-9

# Relative |w| threshold below which a homogeneous point has no Euclidean
# counterpart.  Scaled by the point's largest coordinate magnitude so that
# genuine horizon points are distinguished from round-off.
_W_EPS = 1e-12


@dataclass(frozen=True)
class Point2:
    """A finite 2D point; pixels or meters depending on context."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point components must be finite, got ({self.x}, {self.y})")

    def to_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)

    @staticmethod
    def from_array(arr) -> "Point2":
        return Point2(float(arr[0]), float(arr[1]))


@dataclass(frozen=True)
class HomogeneousPoint2:
    """Projective 2D point (u, v, w); not all components may be zero."""

    u: float
    v: float
    w: float

    def __post_init__(self):
        if self.u == 0.0 and self.v == 0.0 and self.w == 0.0:
            raise ValueError("homogeneous point must have a nonzero component")

    def to_euclidean(self) -> Point2:
        eps = _W_EPS * max(1.0, abs(self.u), abs(self.v))
        if abs(self.w) <= eps:
            raise PointAtInfinity(f"point at infinity: w={self.w} below relative threshold")
        return Point2(self.u / self.w, self.v / self.w)


@dataclass(frozen=True)
class Correspondence:
    """A road marker: its pixel location and its surveyed road position."""

    image: Point2
    world: Point2


def _canonicalize(m: np.ndarray) -> np.ndarray:
    """Scale to unit Frobenius norm and make the largest-|entry| positive."""
    m = m / np.linalg.norm(m)
    flat = np.abs(m).argmax()
    if m.flat[flat] < 0:
        m = -m
    m = np.ascontiguousarray(m)
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class Homography:
    """Invertible 3x3 projective map, stored in canonical scale."""

    m: np.ndarray

    @staticmethod
    def from_matrix(m) -> "Homography":
        arr = np.asarray(m, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"homography must be 3x3, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("homography entries must be finite")
        norm = np.linalg.norm(arr)
        if norm == 0.0:
            raise DegenerateConfiguration("degenerate configuration: zero matrix")
        canonical = _canonicalize(arr)
        # Unit Frobenius norm makes the determinant scale-free, so a fixed
        # threshold separates invertible maps from rank-deficient ones.
        if abs(np.linalg.det(canonical)) < 1e-12:
            raise DegenerateConfiguration("degenerate configuration: singular homography")
        return Homography(canonical)

    @staticmethod
    def identity() -> "Homography":
        return Homography.from_matrix(np.eye(3))


def normalize_points(points) -> tuple[list[Point2], np.ndarray]:
    """Translate/scale points to zero centroid and mean radius sqrt(2).

    Returns the normalized points and the 3x3 similarity T that maps the
    originals onto them.  Raises DegenerateConfiguration when the points
    carry no spread (all coincident).
    """
    pts = [p if isinstance(p, Point2) else Point2.from_array(p) for p in points]
    if len(pts) < 2:
        raise InsufficientData(f"insufficient correspondences: need at least 2 points, got {len(pts)}")
    arr = np.array([[p.x, p.y] for p in pts], dtype=float)
    centroid = arr.mean(axis=0)
    centered = arr - centroid
    mean_radius = float(np.hypot(centered[:, 0], centered[:, 1]).mean())
    scale_ref = max(1.0, float(np.abs(arr).max()))
    if mean_radius <= 1e-15 * scale_ref:
        raise DegenerateConfiguration("degenerate configuration: all points coincident")
    s = math.sqrt(2.0) / mean_radius
    t = np.array([
        [s, 0.0, -s * centroid[0]],
        [0.0, s, -s * centroid[1]],
        [0.0, 0.0, 1.0],
    ])
    normalized = [Point2(s * (p.x - centroid[0]), s * (p.y - centroid[1])) for p in pts]
    return normalized, t


def _assert_spread(points: np.ndarray, label: str) -> None:
    """Raise if the point set is (numerically) collinear or coincident."""
    centered = points - points.mean(axis=0)
    sv = np.linalg.svd(centered, compute_uv=False)
    if sv[0] == 0.0 or sv[-1] <= _RANK_RTOL * sv[0]:
        raise DegenerateConfiguration(f"degenerate configuration: {label} points are collinear or coincident")


def estimate_homography(correspondences) -> Homography:
    """Estimate the world->image homography from >=4 marker correspondences.

    Noise-free consistent input is reproduced to numerical precision; with
    more than four noisy markers the algebraic DLT residual is minimized on
    normalized coordinates.
    """
    corr = list(correspondences)
    if len(corr) < 4:
        raise InsufficientData(f"insufficient correspondences: need at least 4, got {len(corr)}")
    world = np.array([[c.world.x, c.world.y] for c in corr], dtype=float)
    image = np.array([[c.image.x, c.image.y] for c in corr], dtype=float)
    _assert_spread(world, "world")
    _assert_spread(image, "image")

    world_n, t_world = normalize_points([c.world for c in corr])
    image_n, t_image = normalize_points([c.image for c in corr])

    design = np.zeros((2 * len(corr), 9), dtype=float)
    for i, (q, p) in enumerate(zip(world_n, image_n)):
        design[2 * i] = [q.x, q.y, 1.0, 0.0, 0.0, 0.0, -p.x * q.x, -p.x * q.y, -p.x]
        design[2 * i + 1] = [0.0, 0.0, 0.0, q.x, q.y, 1.0, -p.y * q.x, -p.y * q.y, -p.y]

    _, sv, vt = np.linalg.svd(design)
    # With a one-dimensional null space the second-smallest singular value
    # stays well away from zero; losing it means the markers are degenerate.
    if sv[0] == 0.0 or sv[7] <= _RANK_RTOL * sv[0]:
        raise DegenerateConfiguration("degenerate configuration: rank-deficient design matrix")
    h_normalized = vt[-1].reshape(3, 3)
    h = np.linalg.inv(t_image) @ h_normalized @ t_world
    return Homography.from_matrix(h)


def apply(h: Homography, p: Point2) -> Point2:
    """Map a point through the homography and return Euclidean coordinates."""
    vec = h.m @ np.array([p.x, p.y, 1.0])
    return HomogeneousPoint2(float(vec[0]), float(vec[1]), float(vec[2])).to_euclidean()


def invert(h: Homography) -> Homography:
    try:
        inv = np.linalg.inv(h.m)
    except np.linalg.LinAlgError as exc:
        raise DegenerateConfiguration("degenerate configuration: singular homography") from exc
    return Homography.from_matrix(inv)


def compose(first: Homography, second: Homography) -> Homography:
    """Return the map equivalent to applying `second`, then `first`."""
    return Homography.from_matrix(first.m @ second.m)


def reprojection_rms(h: Homography, correspondences) -> float:
    """RMS pixel distance between mapped world points and their images."""
    errors = []
    for c in correspondences:
        mapped = apply(h, c.world)
        errors.append((mapped.x - c.image.x) ** 2 + (mapped.y - c.image.y) ** 2)
    if not errors:
        raise InsufficientData("insufficient correspondences: none supplied")
    return math.sqrt(float(np.mean(errors)))


def load_calibration(obj) -> tuple[list[Correspondence], float | None]:
    """Parse marker correspondences from decoded calibration JSON.

    Accepts either a bare array of ``{"image": [px, py], "world": [mx, my]}``
    objects or an object holding that array under ``"markers"`` plus an
    optional ``"camera_height_m"``.
    """
    camera_height = None
    if isinstance(obj, dict):
        markers = obj.get("markers")
        if markers is None:
            raise ValueError('calibration object must contain a "markers" array')
        if obj.get("camera_height_m") is not None:
            camera_height = float(obj["camera_height_m"])
    else:
        markers = obj
    corr = []
    for entry in markers:
        image = entry["image"]
        world = entry["world"]
        corr.append(Correspondence(image=Point2(float(image[0]), float(image[1])),
                                   world=Point2(float(world[0]), float(world[1]))))
    return corr, camera_height


def homography_to_list(h: Homography) -> list[float]:
    """Row-major 9-element list, the on-disk form of a homography."""
    return [float(v) for v in h.m.reshape(-1)]


def homography_from_list(values) -> Homography:
    arr = np.asarray(list(values), dtype=float)
    if arr.size != 9:
        raise ValueError(f"expected 9 row-major entries, got {arr.size}")
    return Homography.from_matrix(arr.reshape(3, 3))
