"""Shared fixtures, golden data and independent oracles.

The oracles here deliberately avoid the library's algorithms: roof
membership is evaluated straight from its defining condition (every axis
ray eventually enters the cone), and region containment of a tile is
probed by dense rational sampling of the triangle.  Tests compare the
implementation against these, never against itself.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tritile import ConjUpSet, QPoint, SlantTile, inverse_embed, vertices
from tritile.cones import minimalize

# The six-tile closed walk around the three-peak pit, in walk order.
HEX_GENS = (QPoint(1, 1, 0), QPoint(0, 1, 1), QPoint(1, 0, 1))
HEX_WALK = ("1,1,0:31", "1,0,1:21", "1,0,1:23", "0,1,1:13", "0,1,1:12", "1,1,0:32")
DECODE_DUDUDD = ("1,1,0:31", "1,0,1:21", "1,0,1:23", "0,1,1:13", "0,1,1:12", "1,1,1:21")


@pytest.fixture
def hexcone() -> ConjUpSet:
    return ConjUpSet(HEX_GENS)


def rand_antichain(rng: random.Random, box: int, npts: int) -> tuple[QPoint, ...]:
    pts = {
        QPoint(rng.randrange(-box, box + 1), rng.randrange(-box, box + 1), rng.randrange(-box, box + 1))
        for _ in range(npts)
    }
    return minimalize(pts)


def pit(c: QPoint) -> list[QPoint]:
    """The three peaks one step under a common center: the basic closed-orbit maker."""
    return [
        QPoint(c[0] - 1, c[1], c[2]),
        QPoint(c[0], c[1] - 1, c[2]),
        QPoint(c[0], c[1], c[2] - 1),
    ]


_EDGE_OFFSETS = (
    QPoint(0, 1, -1), QPoint(1, 0, -1), QPoint(1, -1, 0),
    QPoint(0, -1, 1), QPoint(-1, 0, 1), QPoint(-1, 1, 0),
)


def rand_pit_gens(rng: random.Random, extra_pits: int) -> list[QPoint]:
    """Generators of one pit plus optional neighbours sharing peaks."""
    c = QPoint(rng.randrange(-2, 3), rng.randrange(-2, 3), rng.randrange(-2, 3))
    centers = [c]
    for _ in range(extra_pits):
        base = rng.choice(centers)
        off = rng.choice(_EDGE_OFFSETS)
        centers.append(QPoint(base[0] + off[0], base[1] + off[1], base[2] + off[2]))
    return [g for cc in centers for g in pit(cc)]


# -- independent oracles -----------------------------------------------------

def brute_conj_roof_member(points, q) -> bool:
    """Roof membership from the definition: for each axis some generator
    lies below q in the other two coordinates."""
    idx = {1: (1, 2), 2: (0, 2), 3: (0, 1)}
    return all(
        any(a[i] <= q[i] and a[j] <= q[j] for a in points) for i, j in idx.values()
    )


def brute_std_roof_member(points, q) -> bool:
    """Same condition evaluated on doubled l-coordinates."""
    dq = inverse_embed(q)
    dps = [inverse_embed(p) for p in points]
    idx = {1: (1, 2), 2: (0, 2), 3: (0, 1)}
    return all(
        any(a[i] <= dq[i] and a[j] <= dq[j] for a in dps) for i, j in idx.values()
    )


def tile_samples(s: SlantTile, denom: int = 16):
    """Barycentric rational grid over the tile, in doubled l-coordinates."""
    va, vb, vc = (inverse_embed(v) for v in vertices(s))
    pts = []
    for i in range(denom + 1):
        for j in range(denom + 1 - i):
            k = denom - i - j
            pts.append(
                tuple(
                    Fraction(i * va[t] + j * vb[t] + k * vc[t], denom) for t in range(3)
                )
            )
    return pts


def sample_in_closed(dgens, p) -> bool:
    return any(all(p[t] >= g[t] for t in range(3)) for g in dgens)


def sample_in_open(dgens, p) -> bool:
    return any(all(p[t] > g[t] for t in range(3)) for g in dgens)
