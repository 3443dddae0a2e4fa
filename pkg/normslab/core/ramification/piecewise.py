"""Exact piecewise-linear functions on [-1, oo) with rational breakpoints."""

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from normslab.core.errors import InvalidInput

Number = Fraction
Point = Tuple[Fraction, Fraction]


class PiecewiseLinearFn:
    """A continuous, strictly increasing function given by its breakpoints.

    Past the last breakpoint the function continues with ``final_slope``.
    Breakpoints are stored without collinear interior points, so two equal
    functions have equal representations.
    """

    __slots__ = ("points", "final_slope")

    def __init__(self, points: Iterable[Tuple], final_slope):
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        final_slope = Fraction(final_slope)
        if not pts:
            raise InvalidInput("a piecewise-linear function needs a breakpoint")
        if final_slope <= 0:
            raise InvalidInput("final slope must be positive")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 <= x0 or y1 <= y0:
                raise InvalidInput("breakpoints must be strictly increasing")
        self.points: Tuple[Point, ...] = tuple(_simplify(pts, final_slope))
        self.final_slope = final_slope

    @classmethod
    def from_slopes(
        cls, start: Point, breaks: Sequence, slopes: Sequence
    ) -> "PiecewiseLinearFn":
        """Start at ``start``; ``slopes[k]`` holds up to ``breaks[k]``.

        ``slopes`` has one more entry than ``breaks``: the final slope.
        """
        if len(slopes) != len(breaks) + 1:
            raise InvalidInput("need exactly one slope past the last break")
        x, y = Fraction(start[0]), Fraction(start[1])
        pts = [(x, y)]
        for b, s in zip(breaks, slopes):
            b = Fraction(b)
            y += Fraction(s) * (b - x)
            x = b
            pts.append((x, y))
        return cls(pts, slopes[-1])

    @classmethod
    def identity(cls) -> "PiecewiseLinearFn":
        return cls([(-1, -1)], 1)

    @property
    def domain_start(self) -> Fraction:
        return self.points[0][0]

    @property
    def breakpoints(self) -> List[Point]:
        return list(self.points)

    def slopes(self) -> List[Fraction]:
        out = [
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])
        ]
        return out + [self.final_slope]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if x < self.domain_start:
            raise InvalidInput(f"{x} is left of the domain start {self.domain_start}")
        xs = [px for px, _ in self.points]
        k = bisect_right(xs, x) - 1
        x0, y0 = self.points[k]
        if k + 1 < len(self.points):
            x1, y1 = self.points[k + 1]
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return y0 + self.final_slope * (x - x0)

    def inverse(self) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn(
            [(y, x) for x, y in self.points], 1 / self.final_slope
        )

    def compose(self, inner: "PiecewiseLinearFn") -> "PiecewiseLinearFn":
        """``self o inner``."""
        if inner(inner.domain_start) < self.domain_start:
            raise InvalidInput("inner function leaves the outer domain")
        inner_inv = inner.inverse()
        xs = {x for x, _ in inner.points}
        for y, _ in self.points:
            if y >= inner(inner.domain_start):
                xs.add(inner_inv(y))
        pts = [(x, self(inner(x))) for x in sorted(xs)]
        return PiecewiseLinearFn(pts, self.final_slope * inner.final_slope)

    def __eq__(self, other):
        if not isinstance(other, PiecewiseLinearFn):
            return NotImplemented
        return self.points == other.points and self.final_slope == other.final_slope

    def __hash__(self):
        return hash((self.points, self.final_slope))

    def __repr__(self):
        pts = ", ".join(f"({x}, {y})" for x, y in self.points)
        return f"PiecewiseLinearFn([{pts}], final_slope={self.final_slope})"


def _simplify(points: List[Point], final_slope: Fraction) -> List[Point]:
    out = [points[0]]
    for k in range(1, len(points)):
        x0, y0 = out[-1]
        x1, y1 = points[k]
        if k + 1 < len(points):
            x2, y2 = points[k + 1]
            next_slope = (y2 - y1) / (x2 - x1)
        else:
            next_slope = final_slope
        if (y1 - y0) / (x1 - x0) != next_slope:
            out.append((x1, y1))
    return out
