"""Exact geometric oracle for straight-line drawings of K_{2,n}.

A realization places the two apexes a and b and one spoke vertex per label
1..n, all with rational coordinates.  Crossing detection runs entirely on
exact orientation predicates, so the combinatorial statements the library
is built on are checked with no floating-point slack.

``build_realization`` lays a permutation out on a template: both apexes sit
on the x-axis and each sends a fan of rays into the upper half-plane, the
b-fan right-leaning and the a-fan left-leaning so that every b-ray meets
every a-ray.  Vertex i goes at the intersection of the i-th b-ray with the
a-ray whose rank is the position of i in the word.  Crossings of such a
drawing are exactly the inversions.

``recover_permutation`` inverts the construction for an arbitrary
realization: spokes are relabeled by increasing angle at b (one chosen side
of the line ab first), and the induced angular order at a spells out the
word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .perms import Pair, PairSet, Permutation

Point = tuple[Fraction, Fraction]


class GeneralPositionError(ValueError):
    """A degeneracy that the crossing predicates cannot tolerate."""


@dataclass(frozen=True)
class Realization:
    """Apexes a, b and spoke vertices labeled 1..n."""

    a: Point
    b: Point
    spokes: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_point(self.a))
        object.__setattr__(self, "b", _as_point(self.b))
        object.__setattr__(self, "spokes", tuple(_as_point(p) for p in self.spokes))
        if not self.spokes:
            raise ValueError("a realization needs at least one spoke vertex")

    @property
    def n(self) -> int:
        return len(self.spokes)

    def spoke(self, label: int) -> Point:
        return self.spokes[label - 1]

    def to_json_obj(self) -> dict:
        return {
            "a": [_fmt(self.a[0]), _fmt(self.a[1])],
            "b": [_fmt(self.b[0]), _fmt(self.b[1])],
            "vertices": {
                str(i + 1): [_fmt(p[0]), _fmt(p[1])]
                for i, p in enumerate(self.spokes)
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Realization":
        labels = sorted(int(k) for k in obj["vertices"])
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError("vertex labels must be 1..n")
        return cls(
            a=tuple(_parse_fraction(c) for c in obj["a"]),
            b=tuple(_parse_fraction(c) for c in obj["b"]),
            spokes=tuple(
                tuple(_parse_fraction(c) for c in obj["vertices"][str(i)])
                for i in labels
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "Realization":
        return cls.from_json_obj(json.loads(text))


def _as_point(p: Iterable) -> Point:
    x, y = p
    return (Fraction(x), Fraction(y))


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(str(text))


def orient(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of the triangle p, q, r (exact)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Strict open-segment intersection; zero orientations are degenerate."""
    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if 0 in (o1, o2, o3, o4):
        raise GeneralPositionError("collinear segment endpoints in crossing test")
    return (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0)


def validate_general_position(r: Realization) -> None:
    """Reject configurations that break the angular protocol or predicates.

    Checks: distinct apexes, distinct points, no spoke on the line ab, and
    no two spokes collinear with either apex.  Collinear triples made of
    spokes alone never affect K_{2,n} edges (spokes are never adjacent), so
    they are not rejected.
    """
    if r.a == r.b:
        raise GeneralPositionError("apexes coincide")
    pts = [r.a, r.b, *r.spokes]
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("coincident points")
    for i, p in enumerate(r.spokes, start=1):
        if orient(r.b, r.a, p) == 0:
            raise GeneralPositionError(f"spoke {i} lies on the line through the apexes")
    for apex_name, apex in (("b", r.b), ("a", r.a)):
        for i in range(1, r.n + 1):
            for j in range(i + 1, r.n + 1):
                if orient(apex, r.spoke(i), r.spoke(j)) == 0:
                    raise GeneralPositionError(
                        f"spokes {i} and {j} are collinear with apex {apex_name}"
                    )


# ---------------------------------------------------------------------------
# the template


def _b_fan(k: int) -> Fraction:
    """Cotangent of the k-th b-ray: positive, strictly decreasing in k,
    so the angle grows with the label."""
    return Fraction(7, 4 * k + 1)


def _a_fan(m: int) -> Fraction:
    """Cotangent of the rank-m a-ray: negative, strictly increasing in m.

    The two tables are deliberately not mirror images; a symmetric choice
    puts every fixed point of the word at the same x coordinate and lines
    up spoke triples.  With these denominators no three spokes are
    collinear in any template through n = 7 (checked exhaustively).
    """
    return -Fraction(9, 5 * m + 2)


def build_realization(p: Permutation) -> Realization:
    """The template drawing of K_{2,n} for the word p.

    b sits at the origin and a at (100, 0).  The k-th b-ray leaves b with a
    positive cotangent (angle increasing in k); the rank-m a-ray leaves a
    with a negative one, so every b-ray meets every a-ray above the axis.
    Vertex i is placed where b-ray i meets the a-ray whose rank is the
    position of i in the word, making the crossing set of the drawing equal
    the inversion set of p.
    """
    n = p.n
    pos = p.positions()
    b: Point = (Fraction(0), Fraction(0))
    a: Point = (Fraction(100), Fraction(0))
    spokes = []
    for i in range(1, n + 1):
        cb = _b_fan(i)
        ca = _a_fan(pos[i - 1])
        y = Fraction(100) / (cb - ca)
        spokes.append((y * cb, y))
    return Realization(a=a, b=b, spokes=tuple(spokes))


# ---------------------------------------------------------------------------
# crossings


def crossing_pairs(r: Realization) -> list[Pair]:
    """All (i, j) with the edge b-i crossing the edge a-j, any label order."""
    validate_general_position(r)
    out = []
    for i in range(1, r.n + 1):
        for j in range(1, r.n + 1):
            if i == j:
                continue
            if _segments_cross(r.b, r.spoke(i), r.a, r.spoke(j)):
                out.append((i, j))
    return sorted(out)


def crossings(r: Realization) -> PairSet:
    """Crossing pairs (i, j), i < j, of b-edge i with a-edge j.

    With labels in the angular order used by the construction and the
    recovery protocol, every crossing has i < j; a crossing the other way
    means the labels do not follow that order, which is reported loudly
    instead of being silently dropped.
    """
    pairs = crossing_pairs(r)
    bad = [(i, j) for i, j in pairs if i > j]
    if bad:
        raise ValueError(
            f"edge b-{bad[0][0]} crosses a-{bad[0][1]}: labels are not in angular "
            "order; relabel via recover_permutation first"
        )
    return PairSet(r.n, frozenset(pairs))


# ---------------------------------------------------------------------------
# recovery


def _angular_order(apex: Point, toward: Point, points: list[tuple[int, Point]]) -> list[int]:
    """Labels sorted by increasing angle at ``apex`` measured from the ray
    toward ``toward``; all points must lie strictly off that base line."""
    d = (toward[0] - apex[0], toward[1] - apex[1])
    keyed = []
    for label, pt in points:
        v = (pt[0] - apex[0], pt[1] - apex[1])
        cross = d[0] * v[1] - d[1] * v[0]
        dot = d[0] * v[0] + d[1] * v[1]
        if cross == 0:
            raise GeneralPositionError(f"vertex {label} lies on the apex line")
        # angle in (0, pi) on either side; cot is strictly decreasing there
        keyed.append((-dot / abs(cross), label))
    keyed.sort()
    if any(keyed[k][0] == keyed[k + 1][0] for k in range(len(keyed) - 1)):
        raise GeneralPositionError("two vertices at equal angle")
    return [label for _, label in keyed]


def recover_with_relabeling(
    r: Realization, positive_side_first: bool = True
) -> tuple[Permutation, dict[int, int]]:
    """Run the relabeling protocol and read off the induced permutation.

    Spokes on the chosen side of the line ab get labels 1..t by increasing
    angle at b, the rest t+1..n likewise; the word lists, block by block,
    the new labels in increasing order of angle at a.  Returns the
    permutation together with the old-label -> new-label map.
    """
    validate_general_position(r)
    sides: dict[bool, list[tuple[int, Point]]] = {True: [], False: []}
    for label in range(1, r.n + 1):
        pt = r.spoke(label)
        sides[orient(r.b, r.a, pt) > 0].append((label, pt))
    first = sides[positive_side_first]
    second = sides[not positive_side_first]

    relabel: dict[int, int] = {}
    word: list[int] = []
    next_label = 1
    for block in (first, second):
        if not block:
            continue
        by_b = _angular_order(r.b, r.a, block)
        for old in by_b:
            relabel[old] = next_label
            next_label += 1
        by_a = _angular_order(r.a, r.b, block)
        word.extend(relabel[old] for old in by_a)
    return Permutation(tuple(word)), relabel


def recover_permutation(r: Realization, positive_side_first: bool = True) -> Permutation:
    return recover_with_relabeling(r, positive_side_first)[0]


def relabeled(r: Realization, relabel: dict[int, int]) -> Realization:
    """The same drawing with spoke labels renamed by a full bijection."""
    if sorted(relabel) != list(range(1, r.n + 1)) or sorted(
        relabel.values()
    ) != list(range(1, r.n + 1)):
        raise ValueError("relabeling must be a bijection on 1..n")
    spokes = [r.spokes[0]] * r.n
    for old, new in relabel.items():
        spokes[new - 1] = r.spoke(old)
    return Realization(a=r.a, b=r.b, spokes=tuple(spokes))


def transformed(
    r: Realization, cos: Fraction, sin: Fraction, dx: Fraction = Fraction(0), dy: Fraction = Fraction(0)
) -> Realization:
    """Rotate by a rational point on the unit circle, then translate."""
    cos, sin, dx, dy = Fraction(cos), Fraction(sin), Fraction(dx), Fraction(dy)
    if cos * cos + sin * sin != 1:
        raise ValueError("cos^2 + sin^2 must equal 1 for an exact rotation")

    def move(p: Point) -> Point:
        return (cos * p[0] - sin * p[1] + dx, sin * p[0] + cos * p[1] + dy)

    return Realization(
        a=move(r.a), b=move(r.b), spokes=tuple(move(p) for p in r.spokes)
    )


# ---------------------------------------------------------------------------
# rendering


def render_svg(r: Realization, width: int = 640, height: int = 480) -> str:
    """A plain SVG picture of the drawing with crossings marked."""
    pts = [r.a, r.b, *r.spokes]
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span_x = (x1 - x0) or 1.0
    span_y = (y1 - y0) or 1.0
    margin = 30.0

    def sx(q) -> float:
        return margin + (float(q) - x0) / span_x * (width - 2 * margin)

    def sy(q) -> float:
        return height - margin - (float(q) - y0) / span_y * (height - 2 * margin)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
    ]
    for apex, color in ((r.a, "#1f77b4"), (r.b, "#d62728")):
        for p in r.spokes:
            lines.append(
                f'<line x1="{sx(apex[0]):.2f}" y1="{sy(apex[1]):.2f}" '
                f'x2="{sx(p[0]):.2f}" y2="{sy(p[1]):.2f}" stroke="{color}" stroke-width="1"/>'
            )
    for i, j in crossing_pairs(r):
        # intersection point of segment b-i with segment a-j
        x = _intersection(r.b, r.spoke(i), r.a, r.spoke(j))
        lines.append(
            f'<circle cx="{sx(x[0]):.2f}" cy="{sy(x[1]):.2f}" r="4" '
            'fill="none" stroke="#2ca02c" stroke-width="1.5"/>'
        )
    for label, p in enumerate(r.spokes, start=1):
        lines.append(
            f'<circle cx="{sx(p[0]):.2f}" cy="{sy(p[1]):.2f}" r="3" fill="#333"/>'
        )
        lines.append(
            f'<text x="{sx(p[0]) + 5:.2f}" y="{sy(p[1]) - 5:.2f}" font-size="11">{label}</text>'
        )
    for name, p in (("a", r.a), ("b", r.b)):
        lines.append(
            f'<circle cx="{sx(p[0]):.2f}" cy="{sy(p[1]):.2f}" r="4" fill="#000"/>'
        )
        lines.append(
            f'<text x="{sx(p[0]) + 6:.2f}" y="{sy(p[1]) + 12:.2f}" font-size="13">{name}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines)


def _intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    dp = (p2[0] - p1[0], p2[1] - p1[1])
    dq = (q2[0] - q1[0], q2[1] - q1[1])
    denom = dp[0] * dq[1] - dp[1] * dq[0]
    t = ((q1[0] - p1[0]) * dq[1] - (q1[1] - p1[1]) * dq[0]) / denom
    return (p1[0] + t * dp[0], p1[1] + t * dp[1])
