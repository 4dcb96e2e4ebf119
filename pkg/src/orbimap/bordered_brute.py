"""Exhaustive enumeration of quotient maps on bordered surfaces.

A quotient map may carry four kinds of edges: complete interior edges
(two darts), dangling semiedges (one dart, end at a future index-2 branch
point), halfedges (one dart, free end on the boundary) and boundary edges
(one dart, lying inside the boundary).  The underlying compact surface and
its boundary are not inputs: they are computed from the combinatorial data.

Everything is realized as a closed flag system on an augmented map: each
boundary circle is laid out as a cyclic sequence of items (vertices and
halfedge tips) joined by connectors (real boundary edges or phantom "arc"
edges covering the free stretches), and then capped with a distinguished
face.  The closed system determines Euler characteristic, orientability and
faces; canonical BFS codes over typed flags give isomorphism classes and
automorphism groups.

This module is a test oracle.  It is exponential and meant for a handful of
darts only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .flagmaps import SizeLimitError

# Edge types in the augmented system.
COMPLETE, SEMI, HALF, BDRY, ARC = "c", "s", "h", "b", "a"


@dataclass(frozen=True)
class BorderedClass:
    """One bordered map up to isomorphism."""

    n_darts: int
    semiedges: int
    euler_genus: int  # cross-cap count of the bordered surface (2g if orientable)
    boundary: int
    orientable: bool
    interior_cells: int  # interior vertices + faces avoiding free boundary arcs
    aut: int
    canon: tuple
    # (vertex-degree profile etc. for family extraction)
    vs_objects: tuple  # ((k, b_ahead, b_behind) -> count) of (vertex, side) orbits
    real_flags: int

    @property
    def rooted_count(self) -> int:
        return self.real_flags // self.aut


def _compose_flags(darts, rotation, pairing, semis):
    """Build the three involutions on flags (dart, side) -> 2*d + side."""
    total = 2 * len(darts)
    t2 = [0] * total
    t1 = [0] * total
    t0 = [0] * total
    index = {d: i for i, d in enumerate(darts)}
    for d in darts:
        i = index[d]
        t2[2 * i] = 2 * i + 1
        t2[2 * i + 1] = 2 * i
    # corners: (d, 1) <-> (sigma(d), 0)
    for d, nxt in rotation.items():
        i, j = index[d], index[nxt]
        t1[2 * i + 1] = 2 * j
        t1[2 * j] = 2 * i + 1
    # edges
    for (d, e, sign) in pairing:
        i, j = index[d], index[e]
        if sign > 0:
            t0[2 * i] = 2 * j + 1
            t0[2 * j + 1] = 2 * i
            t0[2 * i + 1] = 2 * j
            t0[2 * j] = 2 * i + 1
        else:
            t0[2 * i] = 2 * j
            t0[2 * j] = 2 * i
            t0[2 * i + 1] = 2 * j + 1
            t0[2 * j + 1] = 2 * i + 1
    for d in semis:
        i = index[d]
        t0[2 * i] = 2 * i + 1
        t0[2 * i + 1] = 2 * i
    return t0, t1, t2


def _orbits(n, perms):
    seen = [-1] * n
    orbit_id = 0
    for start in range(n):
        if seen[start] >= 0:
            continue
        stack = [start]
        seen[start] = orbit_id
        while stack:
            f = stack.pop()
            for p in perms:
                g = p[f]
                if seen[g] < 0:
                    seen[g] = orbit_id
                    stack.append(g)
        orbit_id += 1
    return seen, orbit_id


def _bfs_code(n, perms, colors, start):
    label = [-1] * n
    order = [start]
    label[start] = 0
    nxt = 1
    code = [colors[start]]
    idx = 0
    while idx < len(order):
        f = order[idx]
        idx += 1
        for p in perms:
            g = p[f]
            if label[g] < 0:
                label[g] = nxt
                nxt += 1
                order.append(g)
                code.append(colors[g])
            code.append(label[g])
    return tuple(code), label


def _bipartite(n, perms):
    color = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            f = stack.pop()
            for p in perms:
                g = p[f]
                if color[g] < 0:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    return False
    return True


def _cyclic_arrangements(items):
    """Distinct cyclic orders of a list of distinguishable items."""
    if not items:
        return [()]
    first, rest = items[0], list(items[1:])
    return [(first, *p) for p in permutations(rest)]


def _structures(n_darts):
    """Yield raw labeled bordered structures with n_darts real darts."""
    for nc in range(n_darts // 2 + 1):
        for ns in range(n_darts - 2 * nc + 1):
            for nh in range(n_darts - 2 * nc - ns + 1):
                nb = n_darts - 2 * nc - ns - nh
                yield from _structures_typed(nc, ns, nh, nb)


def _structures_typed(nc, ns, nh, nb):
    # End labels.  Interior-type ends can sit at interior or boundary vertices.
    ends = [("c", i, side) for i in range(nc) for side in (0, 1)]
    ends += [("s", i, 0) for i in range(ns)]
    ends += [("h", i, 0) for i in range(nh)]
    tips = [("t", i) for i in range(nh)]
    bdry_edges = list(range(nb))

    # Partition interior-type ends into interior vertices (cyclic fans) and
    # boundary vertices (linear fans), then build circles.
    for assignment in _fan_assignments(ends, 2 * nb):
        interior_fans, boundary_fans = assignment
        yield from _with_circles(nc, ns, nh, nb, interior_fans, boundary_fans, tips, bdry_edges)


def _fan_assignments(ends, max_bare: int):
    """Split ends into interior cyclic fans and boundary linear fans.

    Boundary vertices may have empty fans (their incidences are boundary
    edges), up to the number of available boundary edge ends.
    """
    n = len(ends)
    for vi in range(0, n + 1):
        for vb in range(0, n - vi + max_bare + 1):
            yield from _distribute(ends, vi, vb)


def _distribute(ends, vi, vb):
    """All ways to place ends into vi cyclic fans (each nonempty) and vb
    ordered fans (possibly empty)."""
    n = len(ends)
    if vi == 0:
        yield from _linear_part([], ends, vb)
        return
    # choose the subset/arrangement recursively: put ends into vi nonempty
    # groups (unordered groups -> canonicalized later, enumerate all).
    def rec(remaining, fans):
        if len(fans) == vi:
            yield from _linear_part(fans, remaining, vb)
            return
        if not remaining:
            return
        # First remaining end anchors a new fan to avoid duplicate group orders.
        first, rest = remaining[0], remaining[1:]
        for size in range(0, len(rest) + 1):
            for combo_ids in _choose(len(rest), size):
                chosen = [rest[i] for i in combo_ids]
                others = [rest[i] for i in range(len(rest)) if i not in combo_ids]
                for perm in permutations(chosen):
                    yield from rec(others, fans + [(first, *perm)])

    yield from rec(ends, [])


@lru_cache(maxsize=None)
def _choose(n, k):
    if k == 0:
        return [()]
    if k > n:
        return []
    out = []
    for last in range(k - 1, n):
        for head in _choose(last, k - 1):
            out.append(head + (last,))
    return out


def _linear_part(interior_fans, remaining, vb):
    """Distribute the remaining ends into vb ordered (linear) fans."""
    if vb == 0:
        if remaining:
            return
        yield interior_fans, []
        return

    def rec(rem, fans):
        if len(fans) == vb:
            if not rem:
                yield interior_fans, fans
            return
        for size in range(0, len(rem) + 1):
            for combo_ids in _choose(len(rem), size):
                chosen = [rem[i] for i in combo_ids]
                others = [rem[i] for i in range(len(rem)) if i not in combo_ids]
                for perm in permutations(chosen):
                    yield from rec(others, fans + [tuple(perm)])

    yield from rec(remaining, [])


def _with_circles(nc, ns, nh, nb, interior_fans, boundary_fans, tips, bdry_edges):
    """Attach boundary vertices and tips to circles in all ways."""
    b_items = [("v", i) for i in range(len(boundary_fans))] + tips
    if not b_items and nb > 0:
        return
    # partition items into circles (each nonempty), cyclic order per circle,
    # and a connector (arc or a specific boundary edge) between neighbors.
    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for size in range(0, len(rest) + 1):
            for combo_ids in _choose(len(rest), size):
                chosen = [rest[i] for i in combo_ids]
                others = [rest[i] for i in range(len(rest)) if i not in combo_ids]
                for arrangement in _cyclic_arrangements([first] + chosen):
                    for more in partitions(others):
                        yield [arrangement] + more

    for circles in partitions(b_items):
        if not circles and (boundary_fans or tips):
            continue
        # connectors per circle: gaps between consecutive items (cyclically);
        # a single-item circle has one self-gap.
        gap_slots = []
        for cidx, circ in enumerate(circles):
            m = len(circ)
            for g in range(m):
                gap_slots.append((cidx, g))
        # assign each boundary edge to a distinct gap; leftover gaps = arcs;
        # tips must have arcs on both sides.
        for edge_gaps in _injections(bdry_edges, gap_slots):
            ok = True
            for (cidx, g), _edge in edge_gaps:
                circ = circles[cidx]
                m = len(circ)
                left_item = circ[g]
                right_item = circ[(g + 1) % m]
                if left_item[0] == "t" or right_item[0] == "t":
                    ok = False
                    break
            if ok:
                yield nc, ns, nh, nb, interior_fans, boundary_fans, tips, circles, dict(
                    ((cidx, g), e) for (cidx, g), e in edge_gaps
                )


def _injections(objs, slots):
    if not objs:
        yield []
        return
    first, rest = objs[0], objs[1:]
    for i, slot in enumerate(slots):
        for sub in _injections(rest, slots[:i] + slots[i + 1 :]):
            yield [(slot, first)] + sub


def _realize(structure, signs):
    """Build the augmented closed flag system; return None if disconnected."""
    nc, ns, nh, nb, interior_fans, boundary_fans, tips, circles, edge_at_gap = structure

    darts = []
    rotation = {}
    pairing = []
    semis = []
    dart_type = {}

    def add_dart(d, typ):
        darts.append(d)
        dart_type[d] = typ

    # interior-type end darts
    for fan in interior_fans:
        for e in fan:
            add_dart(("e", e), {"c": COMPLETE, "s": SEMI, "h": HALF}[e[0]])
        m = len(fan)
        for i, e in enumerate(fan):
            rotation[("e", e)] = ("e", fan[(i + 1) % m])
    # boundary connector darts: per circle gap, two darts (one on each item)
    gap_darts = {}
    for cidx, circ in enumerate(circles):
        m = len(circ)
        for g in range(m):
            typ = BDRY if (cidx, g) in edge_at_gap else ARC
            dL = ("g", cidx, g, 0)
            dR = ("g", cidx, g, 1)
            add_dart(dL, typ)
            add_dart(dR, typ)
            pairing.append((dL, dR, 1))
            gap_darts[(cidx, g)] = (dL, dR)
    # boundary vertex rotations: (incoming gap end, fan..., outgoing gap end)
    for cidx, circ in enumerate(circles):
        m = len(circ)
        for pos, item in enumerate(circ):
            prev_gap = (cidx, (pos - 1) % m)
            next_gap = (cidx, pos)
            inc = gap_darts[prev_gap][1]
            out = gap_darts[next_gap][0]
            if item[0] == "v":
                fan = boundary_fans[item[1]]
                cycle = [inc] + [("e", e) for e in fan] + [out]
            else:
                tip_idx = item[1]
                cycle = [inc, ("t", ("t", tip_idx)), out]
                add_dart(("t", ("t", tip_idx)), HALF)
            for i, d in enumerate(cycle):
                rotation[d] = cycle[(i + 1) % len(cycle)]
    # also register interior-type end darts of boundary fans (not added yet)
    for fan in boundary_fans:
        for e in fan:
            if ("e", e) not in dart_type:
                add_dart(("e", e), {"c": COMPLETE, "s": SEMI, "h": HALF}[e[0]])
    # edge pairings
    for i in range(nc):
        pairing.append((("e", ("c", i, 0)), ("e", ("c", i, 1)), signs[i]))
    for i in range(nh):
        pairing.append((("e", ("h", i, 0)), ("t", ("t", i)), signs[nc + i]))
    for i in range(ns):
        semis.append(("e", ("s", i, 0)))

    # sanity: all darts must have a rotation entry
    if set(rotation) != set(darts):
        return None
    return darts, rotation, pairing, semis, dart_type, circles, gap_darts, boundary_fans


def _real_graph_connected(structure):
    """Connectivity of the actual map graph (vertices + real edges)."""
    nc, ns, nh, nb, interior_fans, boundary_fans, tips, circles, edge_at_gap = structure
    nodes = [("iv", i) for i in range(len(interior_fans))] + [("bv", i) for i in range(len(boundary_fans))]
    owner = {}
    for i, fan in enumerate(interior_fans):
        for e in fan:
            owner[e] = ("iv", i)
    for i, fan in enumerate(boundary_fans):
        for e in fan:
            owner[e] = ("bv", i)
    adj = {v: set() for v in nodes}
    for i in range(nc):
        a, b = owner[("c", i, 0)], owner[("c", i, 1)]
        adj[a].add(b)
        adj[b].add(a)
    # boundary edges join circle-adjacent vertices
    for cidx, circ in enumerate(circles):
        m = len(circ)
        for g in range(m):
            if (cidx, g) in edge_at_gap:
                a = circ[g]
                b = circ[(g + 1) % m]
                va = ("bv", a[1])
                vb = ("bv", b[1])
                adj[va].add(vb)
                adj[vb].add(va)
    if not nodes:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


_TYPE_COLOR = {COMPLETE: 0, SEMI: 1, HALF: 2, BDRY: 3, ARC: 4}


def enumerate_bordered(n_darts: int) -> tuple[BorderedClass, ...]:
    if n_darts < 1 or n_darts > 5:
        raise SizeLimitError("bordered brute force supports 1..5 darts")
    return _enumerate_bordered_cached(n_darts)


@lru_cache(maxsize=None)
def _enumerate_bordered_cached(n_darts: int) -> tuple[BorderedClass, ...]:
    found: dict[tuple, BorderedClass] = {}
    for structure in _structures(n_darts):
        nc, ns, nh, nb = structure[0], structure[1], structure[2], structure[3]
        if not _real_graph_connected(structure):
            continue
        for signs in product((1, -1), repeat=nc + nh):
            realized = _realize(structure, signs)
            if realized is None:
                continue
            cls = _analyze_bordered(n_darts, realized)
            if cls is not None:
                found.setdefault(cls.canon, cls)
    return tuple(found.values())


def _analyze_bordered(n_darts, realized):
    darts, rotation, pairing, semis, dart_type, circles, gap_darts, boundary_fans = realized
    index = {d: i for i, d in enumerate(darts)}
    t0, t1, t2 = _compose_flags(darts, rotation, pairing, semis)
    total = 2 * len(darts)
    perms = [t0, t1, t2]

    comp, ncomp = _orbits(total, perms)
    if ncomp != 1:
        return None

    # faces and caps
    face_of, nfaces = _orbits(total, [t0, t1])
    cap_faces = set()
    for (cidx, g), (dL, dR) in gap_darts.items():
        # the cap side of the connector: flag (dL, 1) by the layout convention
        cap_faces.add(face_of[2 * index[dL] + 1])
    if len(cap_faces) != len(circles):
        return None  # a cap walk merged with another face: inconsistent layout

    # all connector flags on the cap side must belong to cap faces, and the
    # other side must not (otherwise the capping is degenerate)
    arc_flags = set()
    for d in darts:
        if dart_type[d] in (ARC, BDRY):
            arc_flags.add(2 * index[d])
            arc_flags.add(2 * index[d] + 1)
    # vertices
    vert_of, nverts = _orbits(total, [t1, t2])

    # cap faces must consist purely of connector flags (the circle walk);
    # anything else means the layout is not a genuine boundary capping
    connector_flags = set()
    for d in darts:
        if dart_type[d] in (ARC, BDRY):
            connector_flags.add(2 * index[d])
            connector_flags.add(2 * index[d] + 1)
    for f in range(total):
        if face_of[f] in cap_faces and f not in connector_flags:
            return None

    # Euler characteristic of the capped surface.  A semiedge is neutral:
    # its dangling endpoint is a 0-cell cancelling the 1-cell.
    edge_count = (len(darts) - len(semis)) // 2
    chi_capped = nverts_count(vert_of) - edge_count + nfaces
    orientable = _bipartite(total, perms)

    h = len(circles)
    chi = chi_capped - h
    eps = 2 - chi - h
    if eps < 0:
        return None

    # Quotient-map face condition: a face unfolds to a disk upstairs only if
    # its walk meets at most one free boundary arc (doubling a disk along two
    # or more arcs is not a disk).
    arcs_of_face = [0] * nfaces
    for d in darts:
        if dart_type[d] == ARC:
            i = index[d]
            for s in (0, 1):
                f = 2 * i + s
                if face_of[f] not in cap_faces:
                    arcs_of_face[face_of[f]] += 1
    # each arc edge contributes two interior-side flags to its face
    if any(cnt > 2 for cnt in arcs_of_face):
        return None

    # interior cells: interior vertices + faces that avoid arc flags entirely
    boundary_vertex_flags = set()
    for (cidx, g), (dL, dR) in gap_darts.items():
        for d in (dL, dR):
            boundary_vertex_flags.add(vert_of[2 * index[d]])
    interior_vertices = 0
    seen_verts = set()
    for d in darts:
        if dart_type[d] in (ARC, BDRY):
            continue
        v = vert_of[2 * index[d]]
        if v in seen_verts:
            continue
        seen_verts.add(v)
        if v not in boundary_vertex_flags:
            interior_vertices += 1
    # a tip is a vertex too but always on the boundary, so not counted
    face_has_arc = [False] * nfaces
    for d in darts:
        if dart_type[d] == ARC:
            face_has_arc[face_of[2 * index[d]]] = True
            face_has_arc[face_of[2 * index[d] + 1]] = True
    interior_faces = sum(
        1 for f in range(nfaces) if f not in cap_faces and not face_has_arc[f]
    )
    cells = interior_vertices + interior_faces

    # canonical code over typed flags (type + cap-side marker)
    colors = [0] * total
    for d in darts:
        i = index[d]
        base = _TYPE_COLOR[dart_type[d]] * 4
        if d[0] == "t":
            base = 5 * 4  # tip ends are phantom, distinct from real half ends
        for s in (0, 1):
            f = 2 * i + s
            cap_side = 1 if (face_of[f] in cap_faces) else 0
            colors[f] = base + cap_side

    codes = {}
    for f in range(total):
        codes[f], _ = _bfs_code(total, perms, colors, f)
    canon = min(codes.values())
    ref = codes[0]
    aut = sum(1 for f in range(total) if codes[f] == ref)

    # real flags: all flags except arc flags, tip-end flags, and the cap-side
    # flags of boundary edges
    real = 0
    for d in darts:
        i = index[d]
        typ = dart_type[d]
        if typ == ARC:
            continue
        if typ == HALF and d[0] == "t":
            continue
        for s in (0, 1):
            f = 2 * i + s
            if typ == BDRY and face_of[f] in cap_faces:
                continue
            real += 1
    if real != 2 * n_darts:
        raise AssertionError("flag bookkeeping is off")

    # (vertex, side) objects for boundary vertices, classified by
    # (interior degree, bit ahead, bit behind)
    explicit_auts = _explicit_automorphisms(total, perms, colors, codes)
    vs_counter: dict[tuple[int, int, int], int] = {}
    vs_objects = []
    for cidx, circ in enumerate(circles):
        m = len(circ)
        for pos, item in enumerate(circ):
            if item[0] != "v":
                continue
            fan = boundary_fans[item[1]]
            k = len(fan)
            prev_gap = (cidx, (pos - 1) % m)
            next_gap = (cidx, pos)
            b_prev = 1 if dart_type[gap_darts[prev_gap][0]] == BDRY else 0
            b_next = 1 if dart_type[gap_darts[next_gap][0]] == BDRY else 0
            # two sides: ahead = next (side 0) or ahead = prev (side 1)
            # anchor each side by a specific flag: the cap-側 flag of the
            # incoming connector dart at this vertex
            inc = gap_darts[prev_gap][1]
            out = gap_darts[next_gap][0]
            f_side0 = 2 * index[out]      # looking "ahead" along the circle
            f_side1 = 2 * index[inc] + 1  # looking "behind"
            vs_objects.append(((k, b_next, b_prev), f_side0))
            vs_objects.append(((k, b_prev, b_next), f_side1))
    # orbit-reduce the anchors under explicit automorphisms
    anchor_orbit = {}
    for params, f in vs_objects:
        if f in anchor_orbit:
            continue
        orbit = {f}
        for a in explicit_auts:
            orbit.add(a[f])
        rep = min(orbit)
        for g in orbit:
            anchor_orbit[g] = rep
    seen_reps = set()
    for params, f in vs_objects:
        rep = anchor_orbit[f]
        if (params, rep) in seen_reps:
            continue
        seen_reps.add((params, rep))
        vs_counter[params] = vs_counter.get(params, 0) + 1

    return BorderedClass(
        n_darts=n_darts,
        semiedges=len(semis),
        euler_genus=eps,
        boundary=h,
        orientable=orientable,
        interior_cells=cells,
        aut=aut,
        canon=canon,
        vs_objects=tuple(sorted(vs_counter.items())),
        real_flags=real,
    )


def nverts_count(vert_of):
    return len(set(vert_of))


def _explicit_automorphisms(total, perms, colors, codes):
    ref_code, ref_label = codes[0], None
    _, ref_label = _bfs_code(total, perms, colors, 0)
    auts = []
    for g in range(total):
        code_g, label_g = _bfs_code(total, perms, colors, g)
        if code_g != codes[0]:
            continue
        # transport: flag with ref-label L maps to flag with label_g == L
        inv_g = [0] * total
        for f in range(total):
            inv_g[label_g[f]] = f
        a = [0] * total
        for f in range(total):
            a[f] = inv_g[ref_label[f]]
        auts.append(a)
    return auts
