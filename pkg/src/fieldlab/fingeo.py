"""Linear, affine and projective geometry over a finite field.

Vectors are handled internally as tuples of element indices (see
:mod:`fieldlab.gfield`) and arithmetic goes through the field's cached
operation tables; :class:`FVector` is the public wrapper.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import LimitExceeded
from .gfield import FieldElem, FieldSpec, build_op_tables

MAX_SPACE = 10 ** 4
MAX_PLANE_Q = 11


@dataclass(frozen=True, order=True)
class FVector:
    coords: tuple[FieldElem, ...]

    @property
    def spec(self) -> FieldSpec:
        return self.coords[0].spec

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def vector(spec: FieldSpec, key) -> FVector:
    return FVector(tuple(spec.elem(i) for i in key))


def _check_space(spec, n):
    if spec.order ** n > MAX_SPACE:
        raise LimitExceeded(f"F_{spec.order}^{n} has more than {MAX_SPACE} vectors")


class _Arith:
    def __init__(self, spec):
        t = build_op_tables(spec)
        self.q = spec.order
        self.add = t.add
        self.mul = t.mul

    def combine(self, a, u, b, w):
        """a*u + b*w for index vectors u, w."""
        A, M = self.add, self.mul
        return tuple(A[M[a][x]][M[b][y]] for x, y in zip(u, w))

    def span_with(self, space, v):
        """Span of a subspace (frozenset of index vectors) and one more vector."""
        q = self.q
        return frozenset(self.combine(1, u, c, v) for u in space for c in range(q))


def _span_subspaces(spec, n, d):
    ar = _Arith(spec)
    zero = (0,) * n
    vectors = list(itertools.product(range(spec.order), repeat=n))
    layer = {frozenset([zero])}
    for _ in range(d):
        nxt = set()
        for space in layer:
            for v in vectors:
                if v not in space:
                    nxt.add(ar.span_with(space, v))
        layer = nxt
    return layer


def _as_sorted(spec, spaces):
    out = [tuple(vector(spec, k) for k in sorted(s)) for s in spaces]
    # canonical representative: least nonzero member; the zero space sorts first
    out.sort(key=lambda s: tuple(v.key for v in s[1:2]) + (len(s),))
    return out


def subspaces_of_dim(spec: FieldSpec, n: int, d: int) -> list[tuple[FVector, ...]]:
    """Every d-dimensional subspace of F_q^n, each as a sorted tuple of vectors.

    Built by spanning: each (d-1)-dimensional subspace is extended by every
    vector outside it, and the spans are de-duplicated.
    """
    _check_space(spec, n)
    if not 0 <= d <= n:
        raise ValueError(f"dimension {d} not in [0, {n}]")
    return _as_sorted(spec, _span_subspaces(spec, n, d))


def one_dim_subspaces(spec: FieldSpec, n: int) -> list[tuple[FVector, ...]]:
    return subspaces_of_dim(spec, n, 1)


def count_bases(spec: FieldSpec, n: int = 2) -> int:
    """Ordered bases of F_q^2, by testing every pair for independence."""
    if n != 2:
        raise ValueError("count_bases is implemented for dimension 2")
    _check_space(spec, 2)
    ar = _Arith(spec)
    q = spec.order
    vectors = list(itertools.product(range(q), repeat=2))
    count = 0
    for u in vectors:
        if u == (0, 0):
            continue
        line = {tuple(ar.mul[c][x] for x in u) for c in range(q)}
        count += sum(1 for w in vectors if w not in line)
    return count


# planes --------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple[str, ...]
    lines: tuple[tuple[int, ...], ...]
    kind: str = "generic"

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lines", tuple(tuple(sorted(l)) for l in self.lines))
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate point labels")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("duplicate lines")
        v = len(self.points)
        for line in self.lines:
            if any(not 0 <= x < v for x in line) or len(set(line)) != len(line):
                raise ValueError(f"line {line} has invalid point indices")
        if self.kind not in ("affine", "projective", "generic"):
            raise ValueError(f"unknown kind {self.kind!r}")

    def lines_through(self, point: int) -> list[int]:
        return [k for k, line in enumerate(self.lines) if point in line]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "points": list(self.points),
                "lines": [list(l) for l in self.lines]}

    @classmethod
    def from_dict(cls, d) -> IncidenceStructure:
        return cls(tuple(d["points"]), tuple(tuple(l) for l in d["lines"]),
                   d.get("kind", "generic"))


def _check_plane_q(spec):
    if spec.order > MAX_PLANE_Q:
        raise LimitExceeded(f"planes limited to q <= {MAX_PLANE_Q}, got {spec.order}")


def _affine_parts(spec):
    """Points, and lines grouped as (slope label, [point-index lists])."""
    _check_plane_q(spec)
    q = spec.order
    t = build_op_tables(spec)
    names = [str(spec.elem(i)) for i in range(q)]
    points = [f"({names[a]},{names[b]})" for a in range(q) for b in range(q)]
    idx = lambda x, y: x * q + y
    classes = []
    for m in range(q):
        lines = [[idx(x, t.add[t.mul[m][x]][c]) for x in range(q)] for c in range(q)]
        classes.append((f"inf({names[m]})", lines))
    classes.append(("inf(vert)", [[idx(c, y) for y in range(q)] for c in range(q)]))
    return points, classes


def affine_plane(spec: FieldSpec) -> IncidenceStructure:
    """Points F_q^2; lines y = m x + c, then the verticals x = c."""
    points, classes = _affine_parts(spec)
    lines = [line for _, group in classes for line in group]
    return IncidenceStructure(tuple(points), tuple(lines), "affine")


def projective_plane(spec: FieldSpec) -> IncidenceStructure:
    """Affine plane plus one point at infinity per parallel class.

    Each line gets the infinite point of its slope, and a final line at
    infinity holds exactly the q + 1 infinite points.
    """
    points, classes = _affine_parts(spec)
    lines = []
    at_infinity = []
    for label, group in classes:
        k = len(points)
        points.append(label)
        at_infinity.append(k)
        lines.extend(line + [k] for line in group)
    lines.append(at_infinity)
    return IncidenceStructure(tuple(points), tuple(lines), "projective")


class PlaneViolation(NamedTuple):
    rule: str
    witness: tuple
    detail: str

    def __str__(self):
        return f"{self.rule}: {self.detail}"


def verify_plane_axioms(s: IncidenceStructure) -> list[PlaneViolation]:
    out = []
    sizes = sorted({len(l) for l in s.lines})
    if len(sizes) > 1:
        k = next(i for i, l in enumerate(s.lines) if len(l) != len(s.lines[0]))
        out.append(PlaneViolation("uniform-line-size", (0, k),
                                  f"lines 0 and {k} have {len(s.lines[0])} and {len(s.lines[k])} points"))
    sets = [set(l) for l in s.lines]
    for a, b in itertools.combinations(range(len(sets)), 2):
        meet = len(sets[a] & sets[b])
        if meet != 1:
            out.append(PlaneViolation("lines-meet-once", (a, b),
                                      f"lines {a} and {b} share {meet} points"))
            break
    for x, y in itertools.combinations(range(len(s.points)), 2):
        on = sum(1 for l in sets if x in l and y in l)
        if on != 1:
            out.append(PlaneViolation("points-on-one-line", (x, y),
                                      f"points {s.points[x]} and {s.points[y]} lie on {on} lines"))
            break
    return out
