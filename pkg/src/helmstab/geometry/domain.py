"""Discretized domains: disks and polygons with rounded corners."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist

from helmstab.diagnostics import codes
from helmstab.errors import ConfigError

logger = logging.getLogger(__name__)

MIN_DISK_NODES = 16
FILLET_FRACTION = 1e-2
ARC_NODES = 8


@dataclass(frozen=True, eq=False)
class Domain:
    """Boundary of Omega sampled as nodes with outward normals and arc-length weights."""

    nodes: np.ndarray
    normals: np.ndarray
    weights: np.ndarray
    perimeter: float
    diameter: float
    origin_radius: float
    description: dict = field(default_factory=dict)

    @property
    def node_count(self) -> int:
        return int(self.weights.size)

    def contains(self, points: np.ndarray) -> np.ndarray:
        """Even-odd ray casting against the sampled boundary polyline."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        a = self.nodes
        b = np.roll(self.nodes, -1, axis=0)
        px = pts[:, 0][:, None]
        py = pts[:, 1][:, None]
        straddles = (a[None, :, 1] > py) != (b[None, :, 1] > py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = a[None, :, 0] + (py - a[None, :, 1]) * (b[None, :, 0] - a[None, :, 0]) / (
                b[None, :, 1] - a[None, :, 1]
            )
        hits = straddles & (px < x_cross)
        return np.count_nonzero(hits, axis=1) % 2 == 1

    def boundary_distance(self, points: np.ndarray) -> np.ndarray:
        """Distance from each point to the boundary.

        Exact for disks; otherwise the distance to the closed polyline through
        the nodes, segments included.
        """
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        if self.description.get("kind") == "disk":
            return np.abs(self.origin_radius - np.linalg.norm(pts, axis=1))
        a = self.nodes
        edge = np.roll(self.nodes, -1, axis=0) - a
        rel = pts[:, None, :] - a[None, :, :]
        t = np.einsum("pni,ni->pn", rel, edge) / np.einsum("ni,ni->n", edge, edge)
        foot = a[None, :, :] + np.clip(t, 0.0, 1.0)[..., None] * edge[None, :, :]
        return np.linalg.norm(pts[:, None, :] - foot, axis=2).min(axis=1)


def make_disk(radius: float, node_count: int) -> Domain:
    """Disk of the given radius centered at the origin, uniform angular nodes."""
    if not radius > 0:
        raise ConfigError(f"disk radius must be positive, got {radius}")
    if node_count < MIN_DISK_NODES:
        raise ConfigError(
            f"disk needs at least {MIN_DISK_NODES} boundary nodes, got {node_count}"
        )
    theta = 2.0 * np.pi * np.arange(node_count) / node_count
    normals = np.column_stack([np.cos(theta), np.sin(theta)])
    perimeter = 2.0 * np.pi * radius
    return Domain(
        nodes=radius * normals,
        normals=normals,
        weights=np.full(node_count, perimeter / node_count),
        perimeter=perimeter,
        diameter=2.0 * radius,
        origin_radius=float(radius),
        description={"kind": "disk", "radius": float(radius), "nodes": int(node_count)},
    )


def _signed_area(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _segments_cross(p1, p2, q1, q2) -> bool:
    def orient(a, b, c) -> float:
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def _check_simple(v: np.ndarray) -> None:
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if _segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]):
                raise ConfigError(
                    f"polygon edges {i} and {j} intersect",
                    code=codes.SELF_INTERSECTING_POLYGON,
                )


def make_polygon(vertices: Sequence[Sequence[float]], nodes_per_edge: int) -> Domain:
    """Counterclockwise simple polygon with corners rounded by small circular fillets.

    Fillet radius is 1e-2 times the shortest edge. Nodes are evenly spaced in
    arc length on each straight piece and each fillet; weights are half the
    arc length to the neighbouring nodes, so they sum to the exact length of
    the rounded curve.
    """
    v = np.asarray(vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
        raise ConfigError("polygon needs at least 3 vertices given as (x, y) pairs")
    if nodes_per_edge < 2:
        raise ConfigError(f"nodes_per_edge must be at least 2, got {nodes_per_edge}")
    _check_simple(v)
    if _signed_area(v) <= 0:
        raise ConfigError("polygon vertices must be listed counterclockwise")

    n = len(v)
    edges = np.roll(v, -1, axis=0) - v
    lengths = np.linalg.norm(edges, axis=1)
    if lengths.min() <= 0:
        raise ConfigError("polygon has repeated vertices")
    rho = FILLET_FRACTION * lengths.min()

    # Per vertex: tangent points on the incoming/outgoing edges and the fillet arc.
    corners = []
    for i in range(n):
        prev_pt, vert, next_pt = v[i - 1], v[i], v[(i + 1) % n]
        a = (prev_pt - vert) / np.linalg.norm(prev_pt - vert)
        b = (next_pt - vert) / np.linalg.norm(next_pt - vert)
        theta = float(np.arccos(np.clip(np.dot(a, b), -1.0, 1.0)))
        tangent = rho / np.tan(0.5 * theta)
        bis = (a + b) / np.linalg.norm(a + b)
        center = vert + (rho / np.sin(0.5 * theta)) * bis
        d_in, d_out = vert - prev_pt, next_pt - vert
        turn = d_in[0] * d_out[1] - d_in[1] * d_out[0]
        corners.append(
            {
                "t_in": vert + tangent * a,
                "t_out": vert + tangent * b,
                "center": center,
                "sweep": np.pi - theta,
                "sign": 1.0 if turn > 0 else -1.0,
            }
        )

    points, normals, arclen = [], [], []
    s = 0.0
    for i in range(n):
        c = corners[i]
        # fillet at vertex i
        phi0 = np.arctan2(*(c["t_in"] - c["center"])[::-1])
        arc_len = rho * c["sweep"]
        for j in range(ARC_NODES):
            phi = phi0 + c["sign"] * c["sweep"] * j / ARC_NODES
            radial = np.array([np.cos(phi), np.sin(phi)])
            points.append(c["center"] + rho * radial)
            normals.append(c["sign"] * radial)
            arclen.append(s + arc_len * j / ARC_NODES)
        s += arc_len
        # straight piece from vertex i to vertex i+1
        start = c["t_out"]
        end = corners[(i + 1) % n]["t_in"]
        seg = end - start
        seg_len = float(np.linalg.norm(seg))
        outward = np.array([seg[1], -seg[0]]) / seg_len
        for j in range(nodes_per_edge):
            points.append(start + seg * j / nodes_per_edge)
            normals.append(outward)
            arclen.append(s + seg_len * j / nodes_per_edge)
        s += seg_len

    perimeter = s
    arclen_arr = np.asarray(arclen)
    after = np.roll(arclen_arr, -1)
    after[-1] += perimeter
    before = np.roll(arclen_arr, 1)
    before[0] -= perimeter
    weights = 0.5 * (after - before)

    nodes = np.asarray(points)
    diameter = float(pdist(nodes).max())
    logger.debug("polygon with %d nodes, perimeter %.6f", len(nodes), perimeter)
    return Domain(
        nodes=nodes,
        normals=np.asarray(normals),
        weights=weights,
        perimeter=perimeter,
        diameter=diameter,
        origin_radius=float(np.linalg.norm(nodes, axis=1).max()),
        description={
            "kind": "polygon",
            "vertices": [[float(x), float(y)] for x, y in v],
            "nodes_per_edge": int(nodes_per_edge),
        },
    )
