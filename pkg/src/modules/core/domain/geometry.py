"""Planar geometry value objects shared by every bounded context."""

import math
from dataclasses import dataclass
from typing import override


@dataclass(frozen=True, slots=True)
class Point:
    """A point in the deployment plane, in meters.

    Attributes:
        x: Horizontal coordinate.
        y: Vertical coordinate.
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        """Validate coordinates after initialization.

        Raises:
            ValueError: If a coordinate is NaN or infinite.
        """
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Point") -> float:
        """Euclidean distance to another point."""
        return math.hypot(self.x - other.x, self.y - other.y)

    def inside(self, width: float, height: float) -> bool:
        """Check whether the point lies in the closed rectangle [0,width]×[0,height]."""
        return 0.0 <= self.x <= width and 0.0 <= self.y <= height

    @override
    def __str__(self) -> str:
        """Return the point as ``(x, y)``."""
        return f"({self.x:g}, {self.y:g})"


def distance(a: Point, b: Point) -> float:
    """Euclidean distance between two points in meters.

    Args:
        a: First point.
        b: Second point.

    Returns:
        The distance; symmetric and zero iff ``a == b``.
    """
    return a.distance_to(b)
