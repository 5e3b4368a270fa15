"""End-to-end construction of interval tilings with gaps (p, q, r).

For gaps normalized to p <= q the builder picks one of two layer regimes:

  big   (q >= 2p): the width-q rectangle layer and its notched variant,
        sizes n1 = 4q and n2 = 4q + 1, multiplier d = 1, valid once
        r >= 4q * (4q - 1).

  small (q <= 2p): layers built at the reduced strides (p/d, q/d) with
        d = gcd(p, q), sizes n1 = (5p + 4q)/d and n2 = (4p + 3q)/d, valid
        once r >= (5p + 4q - d) * (4p + 3q - d) / d.

In both regimes gcd(n1, n2) = 1, so by the two-coin bound every s with
(n1 - 1)(n2 - 1) <= s <= (r - 1 + d)/d is a nonnegative combination
s = count1 * n1 + count2 * n2; the upper end of that window is exactly the
injectivity bound of the flattening map.  Stacking that combination of the
two layers and flattening it tiles

    T(s) = union_j (d * {1..s} + (j - 1) * r),    j = 1..l

by parts with gaps {p, q, r}.  Write s = floor(r/d) and r' = r mod d; the
d translates T(s + [i <= r']) + i for i = 1..d are pairwise disjoint and
their union is exactly the interval [d + 1, l*r + d], which is what tile()
returns after running the verifier over it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .blocks3d import Covering
from .core import GapSequence, InternalInconsistency, Part, Tiling, \
    UnsupportedParameters, verify_tiling
from .flatten import LayerStack, flatten_blocks
from .layers import NiceLayer, layer_x1, layer_x2, layer_y1, layer_y2


@dataclass(frozen=True)
class PlanParameters:
    """Everything tile() needs once the branch is chosen.

    layer1/layer2 are the two (NiceLayer, Covering) building blocks;
    stride1/stride2 the column strides handed to the flattener (the reduced
    gaps in the small branch).  s_min is the lower end of the good window,
    r_rem the remainder r mod d that decides how many copies are enlarged.
    """

    p: int
    q: int
    r: int
    branch: str
    d: int
    r1: int
    r2: int
    n1: int
    n2: int
    height: int
    s_min: int
    r_rem: int
    layer1: tuple[NiceLayer, Covering]
    layer2: tuple[NiceLayer, Covering]
    stride1: int
    stride2: int


def _bound_big(q: int) -> int:
    return 4 * q * (4 * q - 1)


def _bound_small(p: int, q: int) -> int:
    d = math.gcd(p, q)
    return (5 * p + 4 * q - d) * (4 * p + 3 * q - d) // d


def threshold(p: int, q: int) -> int:
    """Least r0 such that tile(p, q, r) succeeds for every r >= r0."""
    p, q = sorted((p, q))
    if p < 1:
        raise ValueError(f"gaps must be positive integers, got ({p}, {q})")
    bounds = []
    if q >= 2 * p:
        bounds.append(_bound_big(q))
    if q <= 2 * p:
        bounds.append(_bound_small(p, q))
    return min(bounds)


def decompose_good(s: int, n1: int, n2: int) -> tuple[int, int]:
    """Write s = count1 * n1 + count2 * n2 with nonnegative counts and the
    smallest possible count2.

    n1 and n2 must be coprime; any s at or above (n1 - 1)(n2 - 1) is
    representable, smaller s may raise ValueError.
    """
    if n1 < 1 or n2 < 1 or math.gcd(n1, n2) != 1:
        raise ValueError(f"layer sizes must be coprime positive integers, got {n1}, {n2}")
    for count2 in range(n1):
        rest = s - count2 * n2
        if rest >= 0 and rest % n1 == 0:
            return rest // n1, count2
    raise ValueError(f"{s} is not a nonnegative combination of {n1} and {n2}")


def plan(p: int, q: int, r: int) -> PlanParameters:
    """Choose the regime for gaps (p, q, r) and prebuild its two layers.

    Raises UnsupportedParameters when r is below threshold(p, q).  At the
    regime boundary q = 2p both branches apply and the one with the smaller
    threshold wins.
    """
    p, q = sorted((p, q))
    if p < 1 or r < 1:
        raise ValueError(f"gaps must be positive integers, got ({p}, {q}, {r})")
    r0 = threshold(p, q)
    if r < r0:
        raise UnsupportedParameters(
            f"r={r} is below the guaranteed threshold {r0} for gaps ({p}, {q})",
            threshold=r0)
    use_big = q > 2 * p or (q == 2 * p and _bound_big(q) <= _bound_small(p, q))
    if use_big:
        branch, d = "big", 1
        r1, r2 = 4 * q, 4 * q + 1
        stride1, stride2 = p, q
        layer1, layer2 = layer_x1(p, q), layer_x2(p, q)
    else:
        branch, d = "small", math.gcd(p, q)
        r1, r2 = 5 * p + 4 * q, 4 * p + 3 * q
        stride1, stride2 = p // d, q // d
        layer1, layer2 = layer_y1(stride1, stride2), layer_y2(stride1, stride2)
    n1, n2 = r1 // d, r2 // d
    if math.gcd(n1, n2) != 1 or n1 != layer1[0].size or n2 != layer2[0].size:
        raise InternalInconsistency(f"layer sizes {n1}, {n2} violate the plan's assumptions")
    height = math.lcm(layer1[1].height, layer2[1].height)
    return PlanParameters(
        p=p, q=q, r=r, branch=branch, d=d, r1=r1, r2=r2, n1=n1, n2=n2,
        height=height, s_min=(n1 - 1) * (n2 - 1), r_rem=r % d,
        layer1=layer1, layer2=layer2, stride1=stride1, stride2=stride2)


def build_stack(params: PlanParameters, s: int) -> LayerStack:
    """The stack of slice size s: the canonical combination of the plan's
    two layers."""
    count1, count2 = decompose_good(s, params.n1, params.n2)
    pairs = [params.layer1] * count1 + [params.layer2] * count2
    return LayerStack.build(pairs, params.d)


def build_T(params: PlanParameters, s: int, shift: int) -> list[Part]:
    """Parts tiling T(s) + shift = union_j (d * {1..s} + (j-1) * r + shift).

    s must lie in the good window [s_min, (r - 1 + d)/d]; the upper end is
    the flattener's injectivity bound.
    """
    if not (params.s_min <= s and params.d * s <= params.r - 1 + params.d):
        raise ValueError(
            f"s={s} outside the good window [{params.s_min}, (r-1+d)/d] for r={params.r}")
    parts = flatten_blocks(build_stack(params, s), params.r, params.stride1, params.stride2)
    if shift:
        parts = [part.translated(shift) for part in parts]
    return parts


def tile(p: int, q: int, r: int) -> Tiling:
    """A verified tiling of [d + 1, l*r + d] by parts with gaps {p, q, r}.

    p and q are sorted ascending; r always plays the third gap.  Requires
    r >= threshold(p, q), else UnsupportedParameters.  The result has passed
    verify_tiling; a failure there is an InternalInconsistency.
    """
    p, q = sorted((p, q))
    params = plan(p, q, r)
    s, r_rem = divmod(r, params.d)
    parts: list[Part] = []
    for i in range(1, params.d + 1):
        parts += build_T(params, s + 1 if i <= r_rem else s, i)
    parts.sort(key=lambda part: part.elements)
    tiling = Tiling(params.d + 1, params.height * r + params.d, tuple(parts))
    verdict = verify_tiling(tiling, GapSequence((p, q, r)))
    if not verdict:
        raise InternalInconsistency(f"constructed tiling failed, {verdict.message()}")
    return tiling
