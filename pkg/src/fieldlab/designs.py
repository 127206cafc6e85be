"""Block designs: t-design verification, designs from planes, resolutions,
and the exhaustive check that k = t designs force lambda = 1.

Points are the integers 0..v-1.  The replication number of t-subsets is
called ``lam`` throughout; in the (v, t, r) notation it is r.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DesignError, LimitExceeded
from .fingeo import IncidenceStructure

MAX_T_SUBSETS = 10 ** 5
MAX_RESOLUTION_BLOCKS = 64
# k_equals_t_designs walks all 2**C(v, t) block sets
MAX_KT_SUBSETS = 21


def _normalize_blocks(v, blocks):
    if v < 1:
        raise DesignError(f"need at least one point, got v={v}")
    out = []
    for b in blocks:
        s = tuple(sorted(b))
        if len(set(s)) != len(s):
            raise DesignError(f"block {list(b)} repeats a point")
        if any(not 0 <= x < v for x in s):
            raise DesignError(f"block {list(b)} has points outside [0, {v})")
        out.append(s)
    if not out:
        raise DesignError("a design needs at least one block")
    if len({len(b) for b in out}) != 1:
        raise DesignError("blocks have different sizes")
    if len(set(out)) != len(out):
        raise DesignError("repeated blocks are not allowed")
    return out


class Imbalance(NamedTuple):
    """Two t-subsets lying in different numbers of blocks."""

    subset_a: tuple
    count_a: int
    subset_b: tuple
    count_b: int


def t_subset_counts(v: int, blocks, t: int) -> dict[tuple, int]:
    blocks = _normalize_blocks(v, blocks)
    if t < 1:
        raise DesignError(f"strength t must be >= 1, got {t}")
    if math.comb(v, t) > MAX_T_SUBSETS:
        raise LimitExceeded(f"C({v}, {t}) exceeds {MAX_T_SUBSETS}")
    sets = [set(b) for b in blocks]
    return {T: sum(1 for b in sets if b.issuperset(T))
            for T in itertools.combinations(range(v), t)}


def design_imbalance(v: int, blocks, t: int) -> Imbalance | None:
    """Witness that the blocks do not form a t-design, or None."""
    counts = t_subset_counts(v, blocks, t)
    items = list(counts.items())
    first, c0 = items[0]
    for T, c in items:
        if c != c0:
            return Imbalance(first, c0, T, c)
    if c0 < 1:
        return Imbalance(first, c0, first, c0)
    return None


def verify_design(v: int, blocks, t: int) -> int | None:
    """lambda if every t-subset lies in the same number (>= 1) of blocks."""
    counts = set(t_subset_counts(v, blocks, t).values())
    if len(counts) == 1 and min(counts) >= 1:
        return counts.pop()
    return None


@dataclass(frozen=True)
class BlockDesign:
    v: int
    blocks: tuple[tuple[int, ...], ...]
    t: int
    lam: int

    def __post_init__(self):
        blocks = tuple(_normalize_blocks(self.v, self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if not self.t <= self.k <= self.v:
            raise DesignError(f"need t <= k <= v, got t={self.t}, k={self.k}, v={self.v}")
        lam = verify_design(self.v, blocks, self.t)
        if lam is None or lam != self.lam:
            raise DesignError(f"blocks are not a {self.t}-design with lambda={self.lam}")

    @classmethod
    def from_blocks(cls, v, blocks, t) -> BlockDesign:
        lam = verify_design(v, blocks, t)
        if lam is None:
            w = design_imbalance(v, blocks, t)
            raise DesignError(
                f"not a {t}-design: {list(w.subset_a)} lies in {w.count_a} blocks, "
                f"{list(w.subset_b)} in {w.count_b}")
        return cls(v, tuple(blocks), t, lam)

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def b(self) -> int:
        return len(self.blocks)

    def parameters(self) -> str:
        return f"{self.t}-({self.v},{self.k},{self.lam}), b={self.b}"

    def to_dict(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, d, t: int = 2) -> BlockDesign:
        return cls.from_blocks(d["v"], [tuple(b) for b in d["blocks"]], d.get("t", t))


def design_from_plane(s: IncidenceStructure) -> BlockDesign:
    if len({len(line) for line in s.lines}) != 1:
        raise DesignError("lines do not all have the same number of points")
    return BlockDesign.from_blocks(len(s.points), list(s.lines), 2)


class DesignCounts(NamedTuple):
    b: int
    point_replication: int


def design_counts(d: BlockDesign) -> DesignCounts:
    reps = {x: 0 for x in range(d.v)}
    for block in d.blocks:
        for x in block:
            reps[x] += 1
    values = set(reps.values())
    if len(values) != 1:
        raise DesignError(f"point replication is not uniform: {sorted(values)}")
    r = values.pop()
    if d.b * d.k != d.v * r:
        raise DesignError(f"b*k = {d.b * d.k} but v*r = {d.v * r}")
    return DesignCounts(d.b, r)


@dataclass(frozen=True)
class Resolution:
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def validate(self, d: BlockDesign):
        used = [b for cls in self.classes for b in cls]
        if sorted(used) != sorted(d.blocks):
            raise DesignError("classes do not partition the blocks")
        for cls in self.classes:
            pts = sorted(x for b in cls for x in b)
            if pts != list(range(d.v)):
                raise DesignError(f"class {cls} does not partition the points")


def find_resolution(d: BlockDesign) -> Resolution | None:
    """Split the blocks into parallel classes, or None if impossible.

    Backtracking: the lowest point not yet covered by the open class picks
    the candidate blocks.  Every class holds exactly one block through
    point 0, so a new class always starts with the first unused such block.
    """
    if d.b > MAX_RESOLUTION_BLOCKS:
        raise LimitExceeded(f"resolution search limited to {MAX_RESOLUTION_BLOCKS} blocks")
    if d.v % d.k:
        return None
    per_class = d.v // d.k
    if d.b % per_class:
        return None
    blocks = [frozenset(b) for b in d.blocks]
    free = [True] * len(blocks)
    classes: list[list[int]] = []

    def search(current, covered):
        if len(current) == per_class:
            classes.append(current)
            if not any(free) or search([], frozenset()):
                return True
            classes.pop()
            return False
        target = min(x for x in range(d.v) if x not in covered)
        for i, blk in enumerate(blocks):
            if not free[i] or target not in blk or blk & covered:
                continue
            free[i] = False
            if search(current + [i], covered | blk):
                return True
            free[i] = True
            if not current:
                break
        return False

    if not search([], frozenset()):
        return None
    res = Resolution(tuple(tuple(d.blocks[i] for i in cls) for cls in classes))
    res.validate(d)
    return res


def k_equals_t_designs(v: int, t: int) -> list[BlockDesign]:
    """Every t-design on v points whose blocks have size k = t.

    All nonempty sets of t-subsets are tried as block sets.  Containment
    counts for a whole batch of candidate sets come from one matrix
    product, and every hit is rebuilt through :class:`BlockDesign`.
    """
    if v < 1 or not 1 <= t <= v:
        raise DesignError(f"need 1 <= t <= v, got v={v}, t={t}")
    subsets = list(itertools.combinations(range(v), t))
    m = len(subsets)
    if v > 8 or t > 3 or m > MAX_KT_SUBSETS:
        raise LimitExceeded(f"k = t search over 2^{m} block sets is too large")
    # contains[j, i]: candidate block j contains t-subset i
    contains = np.array([[set(B).issuperset(T) for T in subsets] for B in subsets],
                        dtype=np.int32)
    bits = np.arange(m, dtype=np.int64)
    found = []
    chunk = 1 << 16
    for lo in range(1, 1 << m, chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << m), dtype=np.int64)
        chosen = ((masks[:, None] >> bits) & 1).astype(np.int32)
        counts = chosen @ contains
        ok = (counts == counts[:, :1]).all(axis=1) & (counts[:, 0] >= 1)
        for mask in masks[ok]:
            blocks = [subsets[j] for j in range(m) if mask >> j & 1]
            found.append(BlockDesign.from_blocks(v, blocks, t))
    return found


def parse_design_json(data: dict, t: int) -> BlockDesign:
    if "v" not in data or "blocks" not in data:
        raise DesignError('design files need "v" and "blocks"')
    return BlockDesign.from_blocks(int(data["v"]), [tuple(b) for b in data["blocks"]], t)
