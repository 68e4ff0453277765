"""Circle packings of planar triangulations.

Radii are found by the classical relaxation: sweep the interior
vertices, and for each one replace its radius so that its neighbor
circles would wrap around it with total angle exactly 2*pi.  Tangent
neighbors use the closed-form update through the representative radius;
packings with prescribed overlap angles (used for the primal-dual
packing, where circles of a vertex and an incident face must cross at
pi/2) update the radius by bisection on the monotone angle sum.

Centers are then laid out by triangle-to-triangle propagation from a
seed edge on the x-axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .geometry import Circle
from .graph import GraphError, PlanarGraph


class PackingError(RuntimeError):
    """The relaxation failed to converge or the layout is inconsistent."""


@dataclass
class CirclePacking:
    """A laid-out packing: one circle per triangulation vertex.

    ``tangency`` holds, for every edge with overlap angle 0, the point
    where its two circles touch.
    """

    circles: dict[str, Circle]
    tangency: dict = field(default_factory=dict)
    outer_face: int = -1
    centers: dict[str, complex] = field(default_factory=dict)


@dataclass
class PrimalDualPacking:
    """Orthogonal primal-dual circle representation of a polyhedral graph."""

    vertex_circles: dict[str, Circle]
    face_circles: dict[str, Circle]
    crossing: dict  # primal edge tag -> the common crossing/tangency point
    kite: PlanarGraph
    kite_packing: CirclePacking
    # the puncture circle of the flat layout (a vertex or face name);
    # its disk is the exterior of the drawn circle
    hub: str = ""


def neighbor_angle(r_v: float, r_u: float, r_w: float) -> float:
    """Angle at circle v's center in the tangent triangle with circles u, w."""
    return _angle(r_v + r_u, r_v + r_w, r_u + r_w)


def edge_length(r1: float, r2: float, cos_overlap: float) -> float:
    return math.sqrt(r1 * r1 + r2 * r2 + 2 * r1 * r2 * cos_overlap)


def _angle(lv_u: float, lv_w: float, l_uw: float) -> float:
    """Triangle angle at the vertex whose adjacent sides are lv_u, lv_w."""
    c = (lv_u * lv_u + lv_w * lv_w - l_uw * l_uw) / (2 * lv_u * lv_w)
    return math.acos(min(1.0, max(-1.0, c)))


class _Relaxer:
    def __init__(self, g: PlanarGraph, overlap: dict | None):
        self.g = g
        self.overlap = overlap or {}
        # adjacency tag lookup for consecutive-neighbor edges
        self._tag_of: dict[tuple[str, str], object] = {}
        for t in g.edges:
            u, w = g.endpoints(t)
            self._tag_of[(u, w)] = t
            self._tag_of[(w, u)] = t

    def cos_ov(self, u: str, w: str) -> float:
        t = self._tag_of.get((u, w))
        if t is None:
            raise PackingError(
                f"consecutive neighbors {u!r},{w!r} are not adjacent: not a triangulation"
            )
        return math.cos(self.overlap.get(t, 0.0))

    def length(self, radii, u, w) -> float:
        return edge_length(radii[u], radii[w], self.cos_ov(u, w))

    def angle_sum(self, radii, v: str, rv: float | None = None) -> float:
        rv = radii[v] if rv is None else rv
        nbr = self.g.neighbors(v)
        k = len(nbr)
        total = 0.0
        for i in range(k):
            u, w = nbr[i], nbr[(i + 1) % k]
            lu = edge_length(rv, radii[u], self.cos_ov(v, u))
            lw = edge_length(rv, radii[w], self.cos_ov(v, w))
            total += _angle(lu, lw, self.length(radii, u, w))
        return total

    def angle_sum_d(self, radii, v: str, rv: float) -> tuple[float, float]:
        """Angle sum at v for radius rv, and its derivative in rv."""
        nbr = self.g.neighbors(v)
        k = len(nbr)
        total = 0.0
        dtotal = 0.0
        for i in range(k):
            u, w = nbr[i], nbr[(i + 1) % k]
            ru, rw = radii[u], radii[w]
            cu, cw = self.cos_ov(v, u), self.cos_ov(v, w)
            lu = edge_length(rv, ru, cu)
            lw = edge_length(rv, rw, cw)
            l = self.length(radii, u, w)
            cos_a = (lu * lu + lw * lw - l * l) / (2 * lu * lw)
            cos_a = min(1.0, max(-1.0, cos_a))
            total += math.acos(cos_a)
            sin_a = math.sqrt(max(0.0, 1.0 - cos_a * cos_a))
            if sin_a > 1e-12:
                dlu = (rv + ru * cu) / lu
                dlw = (rv + rw * cw) / lw
                dc_du = (lu * lu - lw * lw + l * l) / (2 * lu * lu * lw)
                dc_dw = (lw * lw - lu * lu + l * l) / (2 * lw * lw * lu)
                dtotal += -(dc_du * dlu + dc_dw * dlw) / sin_a
        return total, dtotal


def pack_triangulation(
    g: PlanarGraph,
    boundary: dict[str, float],
    tol: float = 1e-10,
    max_iter: int = 1000000,
    overlap: dict | None = None,
) -> dict[str, float]:
    """Relax interior radii until every interior angular defect is ≤ tol.

    ``boundary`` vertices keep their given radii; every other vertex is
    swept in fixed input order and its radius replaced so that its
    neighbors close up around it (angle sum 2*pi).
    """
    rel = _Relaxer(g, overlap)
    radii = {v: 1.0 for v in g.vertices}
    radii.update(boundary)
    interior = [v for v in g.vertices if v not in boundary]
    use_closed_form = not overlap
    two_pi = 2 * math.pi
    worst = math.inf
    for _ in range(max_iter):
        worst = 0.0
        for v in interior:
            theta = rel.angle_sum(radii, v)
            worst = max(worst, abs(theta - two_pi))
            if use_closed_form:
                k = len(g.rot[v])
                s = math.sin(theta / (2 * k))
                rho = radii[v] * s / (1 - s)
                s_target = math.sin(math.pi / k)
                radii[v] = rho * (1 - s_target) / s_target
            else:
                radii[v] = _solve_radius(rel, radii, v, theta)
        if worst <= tol:
            return radii
    raise PackingError(f"packing did not converge within {max_iter} sweeps (defect {worst:.3e})")


def _solve_radius(rel: _Relaxer, radii, v: str, theta_now: float) -> float:
    """Radius making the angle sum at v equal 2*pi (monotone decreasing in r).

    Newton iteration safeguarded by a geometric bracket: the bracket is
    grown/shrunk by doubling first, then Newton steps are clipped to it.
    """
    two_pi = 2 * math.pi
    r = radii[v]
    lo = hi = r
    if theta_now > two_pi:  # grow the radius to shrink the angle sum
        for _ in range(200):
            hi *= 2.0
            if rel.angle_sum(radii, v, hi) <= two_pi:
                break
            lo = hi
        else:
            raise PackingError("radius update failed to bracket")
    elif theta_now < two_pi:
        for _ in range(200):
            lo *= 0.5
            if rel.angle_sum(radii, v, lo) >= two_pi:
                break
            hi = lo
        else:
            raise PackingError("radius update failed to bracket")
    else:
        return r
    x = math.sqrt(lo * hi)
    for _ in range(40):
        theta, dtheta = rel.angle_sum_d(radii, v, x)
        err = theta - two_pi
        if abs(err) <= 1e-14 * two_pi:
            break
        if err > 0:
            lo = x
        else:
            hi = x
        if dtheta < 0:
            step = x - err / dtheta
        else:
            step = math.sqrt(lo * hi)
        x = step if lo < step < hi else math.sqrt(lo * hi)
        if hi - lo <= 1e-15 * hi:
            break
    return x


def layout_centers(
    g: PlanarGraph,
    radii: dict[str, float],
    outer_face: int,
    overlap: dict | None = None,
) -> CirclePacking:
    """Propagate circle centers face by face from a seed edge on the x-axis.

    The outer face (a triangle of the triangulation) is skipped; the
    first edge of its walk is the seed: its circles go on the x-axis
    tangent (or at their prescribed distance) at the origin, the first
    centered at (-r, 0).
    """
    rel = _Relaxer(g, overlap)
    faces = g.faces()
    if any(len(f) != 3 for i, f in enumerate(faces) if i != outer_face):
        raise GraphError("layout requires a triangulation (all inner faces of size 3)")
    walk = faces[outer_face]
    d0 = walk[0]
    u0, v0 = d0[0], g.head(d0)
    seed: dict[str, complex] = {}
    seed[u0] = complex(-radii[u0], 0.0)
    seed[v0] = seed[u0] + rel.length(radii, u0, v0)

    # try both face orientations; keep the one with consistent edge lengths
    def run(sign: float) -> dict[str, complex] | None:
        pos = dict(seed)
        pending = [i for i in range(len(faces)) if i != outer_face]
        progress = True
        while pending and progress:
            progress = False
            rest = []
            for fi in pending:
                vs = [d[0] for d in faces[fi]]
                if all(v in pos for v in vs):
                    continue
                done = False
                for r in range(3):
                    a, b, c = vs[r % 3], vs[(r + 1) % 3], vs[(r + 2) % 3]
                    if a in pos and b in pos and c not in pos:
                        alpha = _angle(
                            rel.length(radii, a, c),
                            rel.length(radii, a, b),
                            rel.length(radii, b, c),
                        )
                        dab = pos[b] - pos[a]
                        dab /= abs(dab)
                        pos[c] = pos[a] + rel.length(radii, a, c) * dab * cmath.exp(1j * sign * alpha)
                        done = True
                        break
                if done:
                    progress = True
                else:
                    rest.append(fi)
            pending = rest
        if pending:
            return None
        scale = max(radii.values())
        for t in g.edges:
            x, y = g.endpoints(t)
            if abs(abs(pos[x] - pos[y]) - rel.length(radii, x, y)) > 1e-6 * scale:
                return None
        return pos

    for sign in (1.0, -1.0):
        pos = run(sign)
        if pos is not None:
            break
    else:
        raise PackingError("layout failed: no orientation yields consistent edge lengths")

    circles = {v: Circle(pos[v], radii[v]) for v in g.vertices if radii[v] > 0}
    tangency = {}
    ov = overlap or {}
    for t in g.edges:
        if ov.get(t, 0.0) == 0.0:
            x, y = g.endpoints(t)
            d = pos[y] - pos[x]
            tangency[t] = pos[x] + radii[x] * d / abs(d)
    return CirclePacking(circles=circles, tangency=tangency, outer_face=outer_face, centers=dict(pos))


def pack_and_layout(
    g: PlanarGraph,
    boundary: dict[str, float],
    outer_face: int,
    tol: float = 1e-10,
    max_iter: int = 1000000,
    overlap: dict | None = None,
) -> CirclePacking:
    """pack_triangulation followed by layout_centers, with sanity checks."""
    walk = g.faces()[outer_face]
    if len(walk) != 3:
        raise GraphError("outer face must be a triangle")
    if set(boundary) != {d[0] for d in walk}:
        raise GraphError("boundary radii must be given exactly for the outer face vertices")
    radii = pack_triangulation(g, boundary, tol=tol, max_iter=max_iter, overlap=overlap)
    return layout_centers(g, radii, outer_face, overlap=overlap)


def packing_defects(g: PlanarGraph, packing: CirclePacking, overlap: dict | None = None) -> dict:
    """Max residuals of the laid-out packing: edge lengths and tangencies."""
    rel = _Relaxer(g, overlap)
    radii = {v: packing.circles[v].radius for v in g.vertices}
    worst_len = 0.0
    for t in g.edges:
        x, y = g.endpoints(t)
        d = abs(packing.circles[x].center - packing.circles[y].center)
        worst_len = max(worst_len, abs(d - rel.length(radii, x, y)))
    worst_contact = 0.0
    for t, p in packing.tangency.items():
        x, y = g.endpoints(t)
        for v in (x, y):
            c = packing.circles[v]
            worst_contact = max(worst_contact, abs(abs(p - c.center) - c.radius))
    return {"edge_length": worst_len, "tangency": worst_contact}


# ---------------------------------------------------------------------------
# Primal-dual orthogonal packing via the flag-kite subdivision


def kite_triangulation(g: PlanarGraph) -> tuple[PlanarGraph, dict, dict, dict]:
    """Split a polyhedral graph into one right kite triangle per flag.

    Vertices: the original vertices, one vertex per face ('f<i>'), and
    one vertex per edge ('x<k>') at the point where the four circles of
    the edge meet.  Each (vertex, edge, face) flag becomes the triangle
    (vertex, edge point, face); edge-point circles have radius zero, so
    every vertex-face side crosses at pi/2 while the two legs of each
    triangle are tangencies with a point circle.

    Returns (kite graph, overlap angles, face names, edge-point names).
    """
    faces = g.faces()
    fidx = g.face_of()
    fname = {i: f"f{i}" for i in range(len(faces))}
    xname = {t: f"x{k}" for k, t in enumerate(g.edges)}
    overlap: dict = {}
    rot: dict[str, list] = {}
    for v in g.vertices:
        k = g.degree(v)
        order = []
        for i in range(k):
            e = g.dart_tag((v, i))
            # corner between edges i and i+1: the face whose walk enters
            # v along edge i (equivalently contains the dart (v, i+1))
            fi = fidx[(v, (i + 1) % k)]
            order.append(("vx", v, e))
            order.append(("vf", v, fi))
            overlap[("vx", v, e)] = 0.0
            overlap[("vf", v, fi)] = math.pi / 2
        rot[v] = order
    for j, walk in enumerate(faces):
        order = []
        for d in walk:
            e = g.dart_tag(d)
            order.append(("vf", d[0], j))
            order.append(("fx", j, e))
            overlap[("fx", j, e)] = 0.0
        rot[fname[j]] = list(reversed(order))
    darts_of_tag: dict = {}
    for d in g.darts():
        darts_of_tag.setdefault(g.dart_tag(d), []).append(d)
    for e in g.edges:
        du, dw = darts_of_tag[e]
        rot[xname[e]] = [
            ("vx", du[0], e),
            ("fx", fidx[du], e),
            ("vx", dw[0], e),
            ("fx", fidx[dw], e),
        ]
    kite = PlanarGraph(rot)
    kite.check_planar()
    if any(len(f) != 3 for f in kite.faces()):
        raise GraphError("flag subdivision is not a triangulation")
    return kite, overlap, fname, xname


def primal_dual_pack(
    g: PlanarGraph,
    tol: float = 1e-10,
    max_iter: int = 1000000,
    outer_face: int = 0,
) -> PrimalDualPacking:
    """Simultaneous orthogonal circle packing of a polyhedral graph and its dual.

    The flag-kite subdivision is packed with overlap angles (pi/2 on
    vertex-face sides, tangency on the point-circle legs).  Edge-point
    circles are pinned at radius zero: their angle sum is identically
    2*pi (four right angles) and their centers are exactly the points
    where an edge's four circles meet.

    The boundary is a "hub" triple: the three vertex circles of a
    triangular face (the designated outer face if it is one), or dually
    the three face circles around a degree-3 vertex; one of the two
    always exists in a 3-connected planar graph.  The triple is pinned
    at radius 1, every other circle closes up at 2*pi -- including the
    hub itself, whose circle is laid out last by trilateration from its
    already-placed neighbors.
    """
    kite, overlap, fname, xname = kite_triangulation(g)
    faces = g.faces()
    fidx = g.face_of()
    hub, triple = None, None
    if len(faces[outer_face]) == 3:
        hub, triple = fname[outer_face], g.face_vertices(outer_face)
    else:
        for i, walk in enumerate(faces):
            if len(walk) == 3:
                hub, triple = fname[i], g.face_vertices(i)
                break
        else:
            for v in g.vertices:
                if g.degree(v) == 3:
                    hub = v
                    triple = [fname[fidx[(v, s)]] for s in range(3)]
                    break
    if hub is None:
        raise GraphError("no triangular face and no degree-3 vertex")
    boundary = {xname[t]: 0.0 for t in g.edges}
    for b in triple:
        boundary[b] = 1.0
    radii = pack_triangulation(kite, boundary, tol=tol, max_iter=max_iter, overlap=overlap)

    # lay out the kite complex punctured at the hub (its star of flag
    # triangles covers the same region as the rest of the complex, so
    # the full sphere triangulation cannot be laid out flat directly)
    sub = kite.subgraph([v for v in kite.vertices if v != hub])
    hub_nbrs = set(kite.neighbors(hub))
    sub_faces = sub.faces()
    ring = [
        i
        for i, f in enumerate(sub_faces)
        if len(f) == len(hub_nbrs) and {d[0] for d in f} == hub_nbrs
    ]
    if len(ring) != 1:
        raise PackingError("ambiguous boundary ring after removing the hub")
    packing = layout_centers(sub, {v: radii[v] for v in sub.vertices}, ring[0], overlap=overlap)

    rel = _Relaxer(kite, overlap)
    hub_center = _trilaterate(
        [
            (packing.centers[u], rel.length(radii, hub, u))
            for u in kite.neighbors(hub)
        ]
    )
    centers = dict(packing.centers)
    centers[hub] = hub_center
    circles = dict(packing.circles)
    circles[hub] = Circle(hub_center, radii[hub])
    vertex_circles = {v: circles[v] for v in g.vertices}
    face_circles = {fname[i]: circles[fname[i]] for i in fname}
    crossing = {t: centers[xname[t]] for t in g.edges}
    full = CirclePacking(
        circles=circles, tangency=dict(packing.tangency), outer_face=-1, centers=centers
    )
    return PrimalDualPacking(
        vertex_circles=vertex_circles,
        face_circles=face_circles,
        crossing=crossing,
        kite=kite,
        kite_packing=full,
        hub=hub,
    )


def _trilaterate(constraints: list[tuple[complex, float]]) -> complex:
    """The point at given distances from given points (least ambiguity wins).

    Uses the first two constraints to get the two circle-intersection
    candidates and the remaining ones to pick between them.
    """
    (p1, d1), (p2, d2) = constraints[0], constraints[1]
    d = abs(p2 - p1)
    if d == 0:
        raise PackingError("degenerate trilateration base")
    a = (d * d + d1 * d1 - d2 * d2) / (2 * d)
    h2 = d1 * d1 - a * a
    h = math.sqrt(max(0.0, h2))
    u = (p2 - p1) / d
    base = p1 + a * u
    cands = [base + 1j * h * u, base - 1j * h * u]

    def err(c: complex) -> float:
        return max(abs(abs(c - p) - dist) for p, dist in constraints)

    return min(cands, key=err)
