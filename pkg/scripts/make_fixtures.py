#!/usr/bin/env python3
"""Generate the rotation-system fixture files in fixtures/.

Each fixture is a text file with one line per vertex: the vertex name
followed by its neighbors in clockwise order.  Rotation systems are
derived from a networkx planar embedding, so this script needs the
``fixtures`` extra installed; the generated files are committed so the
test suite itself has no networkx dependency.

Run from the repository root:  python3 scripts/make_fixtures.py
"""

from __future__ import annotations

import itertools
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def rotations(g: nx.Graph) -> str:
    """Serialize a planar graph as a clockwise rotation system."""
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise ValueError("graph is not planar")
    lines = []
    for v in sorted(g.nodes, key=str):
        nbrs = list(emb.neighbors_cw_order(v))
        lines.append(" ".join([str(v)] + [str(u) for u in nbrs]))
    return "\n".join(lines) + "\n"


def cube() -> nx.Graph:
    g = nx.Graph()
    for i in range(4):
        g.add_edge(f"c{i}", f"c{(i + 1) % 4}")
        g.add_edge(f"c{i + 4}", f"c{(i + 1) % 4 + 4}")
        g.add_edge(f"c{i}", f"c{i + 4}")
    return g


def dodecahedron() -> nx.Graph:
    return nx.relabel_nodes(nx.dodecahedral_graph(), lambda v: f"v{v:02d}")


def truncated_icosahedron() -> nx.Graph:
    """Vertex-truncate the icosahedron: one vertex per dart, edges to the
    twin dart and to the rotation successor around the origin vertex."""
    ico = nx.icosahedral_graph()
    ok, emb = nx.check_planarity(ico)
    assert ok
    g = nx.Graph()
    name = {}
    for u in ico.nodes:
        for v in ico.neighbors(u):
            name[(u, v)] = f"t{u:02d}_{v:02d}"
    for u in ico.nodes:
        ring = list(emb.neighbors_cw_order(u))
        for i, v in enumerate(ring):
            w = ring[(i + 1) % len(ring)]
            g.add_edge(name[(u, v)], name[(u, w)])
            g.add_edge(name[(u, v)], name[(v, u)])
    assert g.number_of_nodes() == 60 and all(d == 3 for _, d in g.degree)
    return g


# Two copies of K4 minus an edge, joined in series at the missing
# edges' endpoints: the SPQR tree is one S node (a 4-cycle skeleton
# alternating real and virtual edges) with two R nodes.
TWO_K4E = """\
xa xc xd ya
xb xc yb xd
xc xa xb xd
xd xb xa xc
ya yc xa yd
yb xb yc yd
yc yb ya yd
yd ya yb yc
"""

# Two claws joined by a two-edge bridge path.
DOUBLE_CLAW = """\
c1 a1 b1 m1
a1 c1
b1 c1
m1 c1 m2
m2 m1 c2
c2 m2 a2 b2
a2 c2
b2 c2
"""

# Two K4 blocks, each with one edge subdivided, joined by a bridge
# between the subdivision vertices.
TWO_BLOCKS_BRIDGE = """\
a1 b1 c1 d1
b1 c1 a1 x1
c1 a1 b1 d1
d1 a1 c1 x1
x1 b1 d1 y1
a2 b2 c2 d2
b2 c2 a2 x2
c2 a2 b2 d2
d2 a2 c2 x2
x2 b2 d2 y1
y1 x1 x2
"""


def irregular69() -> nx.Graph:
    """A 69-vertex connected planar graph of maximum degree 3 mixing
    every structural case: a 3-connected block with a long subdivided
    edge, a 2-connected block needing series decomposition, cycles with
    one and several bridge hubs, bridges, and degree-1 and degree-2
    vertices.  The bridge tree is kept shallow: long chains of
    degree-2 vertices live inside the 2-edge-connected pieces, where
    they cost no gluing steps, because every bridge-gluing inversion
    compounds scale contrast and deep chains exhaust double precision.
    """
    g = cube()
    # subdivide one cube edge into a long chain; several of its interior
    # vertices host bridges to the other pieces
    g.remove_edge("c0", "c1")
    nx.add_path(g, ["c0"] + [f"s{i}" for i in range(1, 9)] + ["c1"])
    # the series-glued double (K4 - e) block with one subdivided edge
    k4e = nx.parse_adjlist(TWO_K4E.splitlines())
    g = nx.union(g, k4e)
    g.remove_edge("xa", "ya")
    nx.add_path(g, ["xa", "t1", "t2", "ya"])
    # cycle pieces of assorted sizes and hub counts
    nx.add_cycle(g, ["a1", "a2", "a3"])
    nx.add_cycle(g, ["q1", "q2", "q3", "q4"])
    nx.add_cycle(g, ["r1", "r2", "r3", "r4", "r5"])
    nx.add_cycle(g, [f"u{i:02d}" for i in range(1, 13)])
    nx.add_cycle(g, [f"n{i:02d}" for i in range(1, 14)])
    # bridges joining the pieces into a tree centered on the large
    # cycles, whose stubs have healthy local scale; the block chains
    # host a single bridge each (small junction stubs there magnify
    # inversion contrast)
    for u, w in [
        ("u01", "s1"),
        ("u04", "t1"),
        ("u07", "n01"),
        ("n05", "q1"),
        ("n09", "r1"),
        ("q3", "a1"),
    ]:
        g.add_edge(u, w)
    # degree-1 leaves
    for leaf, anchor in [
        ("l1", "u10"),
        ("l2", "n11"),
        ("l3", "a2"),
        ("l4", "q2"),
        ("l5", "r3"),
        ("l6", "t2"),
    ]:
        g.add_edge(leaf, anchor)
    assert g.number_of_nodes() == 69, g.number_of_nodes()
    assert max(d for _, d in g.degree) == 3
    assert nx.is_connected(g)
    return g


def g18() -> nx.Graph:
    """An 18-vertex 4-regular planar graph whose two quadrilateral faces
    share an opposite vertex pair (and which is therefore 2-connected
    but not 3-connected: removing that pair disconnects it).

    The six core vertices a..f form K_{2,4} (a and f joined to each of
    b, c, d, e); each pair of middle vertices is completed to degree 4
    by a six-vertex gadget found by exhaustive search over internal
    edge sets with degree sequence (3,3,3,3,4,4).
    """
    core = nx.Graph()
    for m in "bcde":
        core.add_edge("a", m)
        core.add_edge("f", m)

    pairs = list(itertools.combinations(range(6), 2))
    for edges in itertools.combinations(pairs, 10):
        deg = [0] * 6
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d > 4 for d in deg):
            continue
        ext = [4 - d for d in deg]
        if sum(ext) != 4 or any(e > 2 for e in ext):
            continue
        slots = [i for i, e in enumerate(ext) for _ in range(e)]
        for csel in set(itertools.combinations(range(4), 2)):
            cv = [slots[i] for i in csel]
            dv = [slots[i] for i in range(4) if i not in csel]
            if len(set(cv)) < 2 or len(set(dv)) < 2:
                continue
            trial = nx.Graph()
            trial.add_edges_from((f"g{u}", f"g{v}") for u, v in edges)
            for i in cv:
                trial.add_edge("c", f"g{i}")
            for i in dv:
                trial.add_edge("d", f"g{i}")
            trial.add_edge("c", "d")  # forces the hosts onto a common face
            if not nx.check_planarity(trial)[0]:
                continue
            g = core.copy()
            for side, (p1, p2) in (("g", ("c", "d")), ("h", ("e", "b"))):
                for u, v in edges:
                    g.add_edge(f"{side}{u}", f"{side}{v}")
                for i in cv:
                    g.add_edge(p1, f"{side}{i}")
                for i in dv:
                    g.add_edge(p2, f"{side}{i}")
            if not all(d == 4 for _, d in g.degree):
                continue
            if nx.check_planarity(g)[0]:
                assert g.number_of_nodes() == 18
                return g
    raise RuntimeError("no planar gadget found")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    literal = {
        "k4": "a b c d\nb c a d\nc a b d\nd a c b\n",
        "two_k4e": TWO_K4E,
        "double_claw": DOUBLE_CLAW,
        "two_blocks_bridge": TWO_BLOCKS_BRIDGE,
    }
    for name, text in literal.items():
        (OUT / f"{name}.txt").write_text(text)
    generated = {
        "cube": cube(),
        "octahedron": nx.relabel_nodes(nx.octahedral_graph(), lambda v: f"o{v}"),
        "dodecahedron": dodecahedron(),
        "frucht": nx.relabel_nodes(nx.frucht_graph(), lambda v: f"f{v:02d}"),
        "tutte": nx.relabel_nodes(nx.tutte_graph(), lambda v: f"u{v:02d}"),
        "truncated_icosahedron": truncated_icosahedron(),
        "irregular69": irregular69(),
        "g18": g18(),
    }
    for name, g in generated.items():
        (OUT / f"{name}.txt").write_text(rotations(g))
    print("wrote", len(literal) + len(generated), "fixtures to", OUT)


if __name__ == "__main__":
    main()
