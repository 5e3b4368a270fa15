"""Blocks in Z^3 and verified coverings of planar shapes.

A block is a set of four points of Z^3 that can be ordered v1, v2, v3, v4 so
that the step vectors {v2-v1, v3-v2, v4-v3} are exactly a prescribed triple
of vectors, as a multiset and without negation.  The triple is a "family
member"; the two kinds used here are

    axis member   (m*e1, e2, e3)            unit steps plus a column jump m
    skew member   (m*e1, e2 - m*e1, e3)     the row step leans back m columns

A covering of a planar shape S at height h is a partition of the slab
S x {1..h} into family blocks.  This module ships a small catalog of base
coverings over tiny shapes, an algebra to assemble larger ones (translate,
stretch_e1, replicate_height, compose), and the rectangle and notched
rectangle coverings the layer builders consume.

Every producing operation re-verifies its result before returning it, so an
invalid covering cannot escape this module; verify_covering itself never
trusts stored block orderings and re-derives them from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise, permutations

from .core import InternalInconsistency, Verdict

Point3 = tuple[int, int, int]
Vec3 = tuple[int, int, int]
Cell = tuple[int, int]
Member = tuple[Vec3, Vec3, Vec3]
Family = tuple[Member, ...]

E1: Vec3 = (1, 0, 0)
E2: Vec3 = (0, 1, 0)
E3: Vec3 = (0, 0, 1)


def axis_family(m: int) -> Family:
    """One-member family (m*e1, e2, e3)."""
    if m < 1:
        raise ValueError("column stride must be positive")
    return (((m, 0, 0), E2, E3),)


def skew_family(p: int, q: int) -> Family:
    """Family {(m*e1, e2 - m*e1, e3) : m in {p, q}}; one member when p == q."""
    if p < 1 or q < 1:
        raise ValueError("column strides must be positive")
    members = []
    for m in (p, q):
        member = ((m, 0, 0), (-m, 1, 0), E3)
        if member not in members:
            members.append(member)
    return tuple(members)


@dataclass(frozen=True)
class Block:
    """Four ordered points plus the family member they instantiate.

    The stored order is a convenience; verification re-derives an ordering
    with is_block and never trusts this one.  member is None for blocks read
    back from JSON, where it is not recorded.
    """

    points: tuple[Point3, Point3, Point3, Point3]
    member: Member | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        if len(self.points) != 4:
            raise ValueError(f"a block has exactly 4 points, got {len(self.points)}")

    def diffs(self) -> tuple[Vec3, Vec3, Vec3]:
        return tuple(_sub(b, a) for a, b in pairwise(self.points))


@dataclass(frozen=True)
class Covering:
    """A shape, a height, the blocks partitioning shape x {1..height}, and
    the family the blocks are drawn from."""

    cells: frozenset[Cell]
    height: int
    blocks: tuple[Block, ...]
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(tuple(c) for c in self.cells))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "family", tuple(self.family))
        if self.height < 1:
            raise ValueError("covering height must be positive")
        if not self.family:
            raise ValueError("covering needs a nonempty family")


def is_block(points, member: Member) -> tuple[Point3, ...] | None:
    """Search for an ordering of the four points whose consecutive step
    vectors are a permutation of the member triple, matched exactly.

    Returns the ordering, or None when no ordering works.  Points must be
    four distinct triples; anything else raises ValueError.
    """
    pts = {tuple(p) for p in points}
    if len(pts) != 4:
        raise ValueError(f"is_block needs exactly 4 distinct points, got {len(pts)}")
    for start in sorted(pts):
        for perm in sorted(set(permutations(member))):
            walk = [start]
            for step in perm:
                walk.append(_add(walk[-1], step))
            if set(walk) == pts:
                return tuple(walk)
    return None


def verify_covering(covering: Covering, family: Family | None = None) -> Verdict:
    """Accept iff every block is a family block and the blocks partition
    cells x {1..height} exactly.

    Checks run in the fixed order block validity, overlap, coverage; the
    verdict's witness is the offending block index or point.  Candidates
    assembled from untrusted JSON yield a reject, never an exception.
    """
    if family is None:
        family = covering.family
    for index, block in enumerate(covering.blocks):
        if len(set(block.points)) != 4:
            return Verdict(False, "block", index)
        if not any(is_block(block.points, member) for member in family):
            return Verdict(False, "block", index)
    seen: set[Point3] = set()
    for block in covering.blocks:
        for point in block.points:
            if point in seen:
                return Verdict(False, "overlap", point)
            seen.add(point)
    target = {(x, y, z) for x, y in covering.cells for z in range(1, covering.height + 1)}
    if seen != target:
        return Verdict(False, "coverage", min(seen ^ target))
    return Verdict(True)


def _certified(covering: Covering) -> Covering:
    verdict = verify_covering(covering)
    if not verdict:
        raise InternalInconsistency(f"covering failed self-check, {verdict.message()}")
    return covering


# ---------- base covering catalog ----------
#
# Shapes use 1-based coordinates; cell (x, y) spans heights z = 1..h.  The
# block lists are fixed data, one block per line; changing any point breaks
# the partition and is caught by the constructor self-check.

_AXIS: Member = (E1, E2, E3)
_SKEW: Member = (E1, (-1, 1, 0), E3)


def _box(w: int, h: int) -> frozenset[Cell]:
    return frozenset((x, y) for x in range(1, w + 1) for y in range(1, h + 1))


_BASE: dict[str, tuple[frozenset[Cell], int, Member, tuple]] = {
    "S1": (frozenset({(1, 1), (1, 2), (2, 2)}), 4, _AXIS, (
        ((1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)),
        ((1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 3)),
        ((1, 1, 3), (1, 1, 4), (1, 2, 4), (2, 2, 4)),
    )),
    "S2": (frozenset({(1, 1), (2, 1), (2, 2)}), 4, _AXIS, (
        ((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)),
        ((1, 1, 2), (2, 1, 2), (2, 1, 3), (2, 2, 3)),
        ((1, 1, 3), (1, 1, 4), (2, 1, 4), (2, 2, 4)),
    )),
    "S4_2x4": (_box(2, 4), 5, _AXIS, (
        ((1, 1, 1), (2, 1, 1), (2, 1, 2), (2, 2, 2)),
        ((1, 2, 1), (2, 2, 1), (2, 3, 1), (2, 3, 2)),
        ((1, 3, 1), (1, 4, 1), (2, 4, 1), (2, 4, 2)),
        ((1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 3)),
        ((1, 3, 2), (1, 4, 2), (1, 4, 3), (2, 4, 3)),
        ((1, 1, 3), (2, 1, 3), (2, 1, 4), (2, 2, 4)),
        ((1, 3, 3), (2, 3, 3), (2, 3, 4), (2, 4, 4)),
        ((1, 1, 4), (1, 1, 5), (2, 1, 5), (2, 2, 5)),
        ((1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5)),
        ((1, 3, 4), (1, 4, 4), (1, 4, 5), (2, 4, 5)),
    )),
    "S5": (_box(2, 4) | {(3, 1), (3, 2)}, 4, _AXIS, (
        ((1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)),
        ((1, 2, 1), (2, 2, 1), (2, 3, 1), (2, 3, 2)),
        ((2, 1, 1), (3, 1, 1), (3, 2, 1), (3, 2, 2)),
        ((1, 3, 1), (1, 4, 1), (2, 4, 1), (2, 4, 2)),
        ((2, 1, 2), (3, 1, 2), (3, 1, 3), (3, 2, 3)),
        ((1, 3, 2), (1, 4, 2), (1, 4, 3), (2, 4, 3)),
        ((1, 1, 3), (1, 1, 4), (1, 2, 4), (2, 2, 4)),
        ((1, 2, 3), (2, 2, 3), (2, 3, 3), (2, 3, 4)),
        ((2, 1, 3), (2, 1, 4), (3, 1, 4), (3, 2, 4)),
        ((1, 3, 3), (1, 3, 4), (1, 4, 4), (2, 4, 4)),
    )),
    "S6": (_box(2, 4) | {(3, 4)}, 4, _AXIS, (
        ((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)),
        ((1, 2, 1), (1, 2, 2), (1, 3, 2), (2, 3, 2)),
        ((1, 3, 1), (1, 4, 1), (1, 4, 2), (2, 4, 2)),
        ((2, 3, 1), (2, 4, 1), (3, 4, 1), (3, 4, 2)),
        ((1, 1, 2), (2, 1, 2), (2, 1, 3), (2, 2, 3)),
        ((1, 1, 3), (1, 1, 4), (2, 1, 4), (2, 2, 4)),
        ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)),
        ((1, 3, 3), (1, 4, 3), (1, 4, 4), (2, 4, 4)),
        ((2, 3, 3), (2, 4, 3), (3, 4, 3), (3, 4, 4)),
    )),
    "T1": (frozenset({(1, 1), (1, 2), (2, 1)}), 4, _SKEW, (
        ((1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 2, 2)),
        ((1, 1, 2), (2, 1, 2), (2, 1, 3), (1, 2, 3)),
        ((1, 1, 3), (1, 1, 4), (2, 1, 4), (1, 2, 4)),
    )),
    "T2": (frozenset({(1, 2), (2, 1), (2, 2)}), 4, _SKEW, (
        ((2, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)),
        ((2, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 3)),
        ((2, 1, 3), (2, 1, 4), (1, 2, 4), (2, 2, 4)),
    )),
    "T3": (frozenset({(1, 2), (1, 3), (2, 1), (2, 2)}), 2, _SKEW, (
        ((2, 1, 1), (2, 1, 2), (1, 2, 2), (2, 2, 2)),
        ((1, 2, 1), (2, 2, 1), (1, 3, 1), (1, 3, 2)),
    )),
    "T4": (_box(2, 2), 2, _SKEW, (
        ((1, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 2)),
        ((2, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2)),
    )),
    "T5": (frozenset({(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)}), 2, _SKEW, (
        ((1, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 2)),
        ((2, 1, 1), (3, 1, 1), (3, 1, 2), (2, 2, 2)),
        ((1, 2, 1), (2, 2, 1), (1, 3, 1), (1, 3, 2)),
    )),
}

BASE_IDS: tuple[str, ...] = tuple(_BASE)


def base_covering(name: str) -> Covering:
    """One of the catalog coverings, by id; see BASE_IDS."""
    try:
        cells, height, member, blocks = _BASE[name]
    except KeyError:
        raise ValueError(f"unknown base covering {name!r}, expected one of {BASE_IDS}") from None
    return _certified(Covering(cells, height, tuple(Block(b, member) for b in blocks), (member,)))


# ---------- covering algebra ----------

def translate(covering: Covering, dx: int, dy: int) -> Covering:
    """Rigid shift in the plane; height and family are unchanged."""
    cells = frozenset((x + dx, y + dy) for x, y in covering.cells)
    blocks = tuple(
        Block(tuple((x + dx, y + dy, z) for x, y, z in blk.points), blk.member)
        for blk in covering.blocks)
    return _certified(Covering(cells, covering.height, blocks, covering.family))


def stretch_e1(covering: Covering, w: int) -> Covering:
    """Scale every x coordinate by w, mapping an (m*e1, ...) family to
    (w*m*e1, ...); rows and heights are untouched."""
    if w < 1:
        raise ValueError("stretch factor must be positive")

    def vec(v: Vec3) -> Vec3:
        return (w * v[0], v[1], v[2])

    cells = frozenset((w * x, y) for x, y in covering.cells)
    family = tuple(tuple(vec(v) for v in member) for member in covering.family)
    blocks = tuple(
        Block(tuple((w * x, y, z) for x, y, z in blk.points),
              None if blk.member is None else tuple(vec(v) for v in blk.member))
        for blk in covering.blocks)
    return _certified(Covering(cells, covering.height, blocks, family))


def replicate_height(covering: Covering, height: int) -> Covering:
    """Stack height / h(covering) vertical copies; height must be a multiple."""
    if height == covering.height:
        return covering
    if height < 1 or height % covering.height:
        raise ValueError(
            f"target height {height} is not a multiple of covering height {covering.height}")
    blocks = []
    for k in range(height // covering.height):
        dz = k * covering.height
        blocks += [
            Block(tuple((x, y, z + dz) for x, y, z in blk.points), blk.member)
            for blk in covering.blocks]
    return _certified(Covering(covering.cells, height, tuple(blocks), covering.family))


def compose(coverings) -> Covering:
    """Disjoint union of coverings of equal height; families are merged.

    Overlapping cells or mismatched heights raise ValueError naming the
    offending pair of components.
    """
    coverings = list(coverings)
    if not coverings:
        raise ValueError("compose needs at least one covering")
    height = coverings[0].height
    for i, cov in enumerate(coverings):
        if cov.height != height:
            raise ValueError(f"components 0 and {i} differ in height: {height} vs {cov.height}")
    owner: dict[Cell, int] = {}
    for i, cov in enumerate(coverings):
        for cell in sorted(cov.cells):
            if cell in owner:
                raise ValueError(f"components {owner[cell]} and {i} overlap at cell {cell}")
            owner[cell] = i
    family: list[Member] = []
    for cov in coverings:
        for member in cov.family:
            if member not in family:
                family.append(member)
    cells = frozenset(owner)
    blocks = tuple(blk for cov in coverings for blk in cov.blocks)
    return _certified(Covering(cells, height, blocks, tuple(family)))


# ---------- composed rectangle coverings ----------

def covering_S3() -> Covering:
    """The [3] x [2] rectangle at height 4: S1 next to a shifted S2."""
    return compose([base_covering("S1"), translate(base_covering("S2"), 1, 0)])


def covering_S4(k: int) -> Covering:
    """The [k] x [4] rectangle at height 20, for k >= 2.

    Even k is filled with [2] x [4] columns (native height 5); odd k uses two
    stacked copies of the [3] x [2] rectangle for the first three columns and
    [2] x [4] columns after that.  Everything is replicated to height 20 so
    the pieces compose.
    """
    if k < 2:
        raise ValueError(f"rectangle width must be at least 2, got {k}")
    two_wide = base_covering("S4_2x4")
    pieces = []
    start = 0
    if k % 2:
        three = covering_S3()
        pieces.append(replicate_height(compose([three, translate(three, 0, 2)]), 20))
        start = 3
    pieces += [
        replicate_height(translate(two_wide, start + 2 * i, 0), 20)
        for i in range((k - start) // 2)]
    return compose(pieces)


def covering_S7(k: int) -> Covering:
    """The [k] x [4] rectangle plus the extra cell (k+1, 4), at height 20.

    The last columns come from a notched base piece (S6 for even k, an S5
    plus S1 assembly for odd k); the remaining width is filled with
    [2] x [4] columns.
    """
    if k < 2:
        raise ValueError(f"notched rectangle width must be at least 2, got {k}")
    two_wide = base_covering("S4_2x4")
    if k % 2 == 0:
        tail, tail_width = base_covering("S6"), 2
    else:
        tail = compose([base_covering("S5"), translate(base_covering("S1"), 2, 2)])
        tail_width = 3
    pieces = [
        replicate_height(translate(two_wide, 2 * i, 0), 20)
        for i in range((k - tail_width) // 2)]
    pieces.append(replicate_height(translate(tail, k - tail_width, 0), 20))
    return compose(pieces)


# ---------- JSON wire format ----------

def covering_to_json(covering: Covering) -> dict:
    """Schema: {"cells": [[x, y], ...], "height": h,
    "family": [[[dx, dy, dz]] * 3 per member], "blocks": [[[x, y, z]] * 4, ...]}."""
    return {
        "cells": [list(c) for c in sorted(covering.cells)],
        "height": covering.height,
        "family": [[list(v) for v in member] for member in covering.family],
        "blocks": [[list(p) for p in blk.points] for blk in covering.blocks],
    }


def covering_from_json(obj) -> Covering:
    """Inverse of covering_to_json; raises ValueError on schema violations.

    The result is *not* auto-verified: feed it to verify_covering to judge it.
    """
    if not isinstance(obj, dict):
        raise ValueError("covering JSON must be an object")
    try:
        raw_cells = obj["cells"]
        height = obj["height"]
        raw_family = obj["family"]
        raw_blocks = obj["blocks"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"covering JSON missing field: {exc}") from None
    if not isinstance(height, int):
        raise ValueError("height must be an integer")
    cells = frozenset(_point(c, 2) for c in raw_cells)
    family = tuple(_member(m) for m in raw_family)
    blocks = tuple(Block(tuple(_point(p, 3) for p in b)) for b in raw_blocks)
    return Covering(cells, height, blocks, family)


def _point(values, arity: int) -> tuple[int, ...]:
    if (not isinstance(values, (list, tuple)) or len(values) != arity
            or any(not isinstance(v, int) for v in values)):
        raise ValueError(f"expected {arity} integers, got {values!r}")
    return tuple(values)


def _member(values) -> Member:
    if not isinstance(values, (list, tuple)) or len(values) != 3:
        raise ValueError(f"a family member is 3 vectors, got {values!r}")
    return tuple(_point(v, 3) for v in values)


def _add(a: Point3, v: Vec3) -> Point3:
    return (a[0] + v[0], a[1] + v[1], a[2] + v[2])


def _sub(b: Point3, a: Point3) -> Vec3:
    return (b[0] - a[0], b[1] - a[1], b[2] - a[2])
