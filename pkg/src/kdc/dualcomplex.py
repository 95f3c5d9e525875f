"""Global dual complexes glued from admissible strata.

A cell is an admissible stratum together with one of its neutral levels.
For n up to 4 the level is determined by the chart, from n = 5 on a few
charts admit two levels and the same stratum spans two cells, so cell
identifiers carry an ``@k=`` suffix exactly when that happens.

Incidence is the covering relation of the face order restricted to a
fixed neutral level; gluing between top cells falls out of canonical
stratum keys identifying shared faces.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import polytope
from . import strata as st
from .errors import InvariantError
from .linechart import Classification, classify

SCHEMA_VERSION = "kdc-1"


@dataclass(frozen=True)
class Cell:
    """One cell of the dual complex."""

    id: str
    stratum: st.Stratum
    k: int
    dim: int
    cls: Classification
    lattice_shape: Tuple[int, int, int]  # chart vertices (on, above, below) 2k

    @property
    def b(self) -> int:
        return self.stratum.b


def _lattice_shape(chart, k: int) -> Tuple[int, int, int]:
    on = sum(1 for v in chart.vertices if v.y == 2 * k)
    above = sum(1 for v in chart.vertices if v.y > 2 * k)
    below = sum(1 for v in chart.vertices if v.y < 2 * k)
    return (on, above, below)


def _make_cell(s: st.Stratum, k: int, cid: str) -> Cell:
    chart = st.chart_of(s)
    cls = classify(chart, k)
    shape = _lattice_shape(chart, k)
    dim = st.cell_dimension(s)
    expected = shape[0] - 1 if cls is Classification.NARROW else sum(shape) - 2
    if dim != expected:
        raise InvariantError(
            "cell dimension %d does not match lattice shape %r" % (dim, shape)
        )
    return Cell(cid, s, k, dim, cls, shape)


@dataclass(frozen=True)
class DualComplex:
    n: int
    N: int
    cells: Tuple[Cell, ...]
    incidence: FrozenSet[Tuple[str, str]]  # (face id, cell id), dims differ by 1

    @cached_property
    def by_id(self) -> Dict[str, Cell]:
        return {c.id: c for c in self.cells}

    @cached_property
    def by_dim(self) -> Dict[int, Tuple[Cell, ...]]:
        out: Dict[int, List[Cell]] = {}
        for c in self.cells:
            out.setdefault(c.dim, []).append(c)
        return {d: tuple(cs) for d, cs in out.items()}

    @cached_property
    def up(self) -> Dict[str, Tuple[str, ...]]:
        out: Dict[str, List[str]] = {c.id: [] for c in self.cells}
        for lo, hi in sorted(self.incidence):
            out[lo].append(hi)
        return {i: tuple(v) for i, v in out.items()}

    @cached_property
    def down(self) -> Dict[str, Tuple[str, ...]]:
        out: Dict[str, List[str]] = {c.id: [] for c in self.cells}
        for lo, hi in sorted(self.incidence):
            out[hi].append(lo)
        return {i: tuple(v) for i, v in out.items()}

    def f_vector(self) -> Tuple[int, ...]:
        top = max((c.dim for c in self.cells), default=-1)
        counts = [0] * (top + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))


@functools.lru_cache(maxsize=None)
def build(n: int, N: int) -> DualComplex:
    """Assemble the dual complex of all admissible cells at (n, N)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if N < 1:
        raise ValueError("need N >= 1")
    flat = st._admissible_flat(n, N)
    pairs: List[Tuple[st.Stratum, int]] = []
    multi = set()
    for s in flat:
        levels = st.valid_levels(s)
        if len(levels) > 1:
            multi.add(st.canonical_key(s))
        for k in levels:
            pairs.append((s, k))

    index: Dict[Tuple[tuple, int], str] = {}
    cells = []
    for s, k in pairs:
        cid = st.format_stratum(s)
        if st.canonical_key(s) in multi:
            cid += "@k=%d" % k
        index[(st.canonical_key(s), k)] = cid
        cells.append(_make_cell(s, k, cid))

    incidence = set()
    for s, k in pairs:
        cid = index[(st.canonical_key(s), k)]
        d = st.cell_dimension(s)
        for face, fk in st.face_items(s, k):
            if st.cell_dimension(face) != d - 1:
                continue
            fid = index.get((st.canonical_key(face), fk))
            if fid is None:
                raise InvariantError(
                    "face %s missing from enumeration" % st.format_stratum(face)
                )
            incidence.add((fid, cid))

    cells.sort(key=lambda c: c.id)
    return DualComplex(n, N, tuple(cells), frozenset(incidence))


# ---------------------------------------------------------------------------
# local complexes of a single deepest stratum


class LocalComplex:
    """Closed cell of one deepest stratum with its face lattice.

    ``poset`` is the abstract face lattice on chart vertex supports and
    ``cells`` maps each support to the stratum cell it represents.
    """

    def __init__(self, top: Cell, poset: polytope.FacePoset, cells):
        self.top = top
        self.poset = poset
        self.cells = dict(cells)

    def f_vector(self) -> Tuple[int, ...]:
        return self.poset.f_vector()

    def cells_of_dim(self, d: int) -> Tuple[Cell, ...]:
        out = [self.cells[f] for f in self.poset.faces if self.poset.dim_of(f) == d]
        return tuple(sorted(out, key=lambda c: c.id))


def delta_K(top: st.Stratum, k: Optional[int] = None) -> LocalComplex:
    """Face lattice of the closed cell of a deepest stratum.

    Faces correspond bijectively to chart vertex subsets valid at the
    chosen neutral level; the lattice is isomorphic to the slice of a
    simplex cut by the neutral line.
    """
    if top.b != top.n:
        raise ValueError("need a deepest stratum (b = n)")
    levels = st.valid_levels(top)
    if not levels:
        raise ValueError("stratum is not admissible")
    if k is None:
        if len(levels) > 1:
            raise ValueError("neutral level is ambiguous, pass k explicitly")
        k = levels[0]
    elif k not in levels:
        raise ValueError("k=%d is not a neutral level of this stratum" % k)

    chart = st.chart_of(top)
    verts = chart.vertices
    v = len(verts)
    dims = {}
    cells = {}
    for mask in range(1, 1 << v):
        kept = [i for i in range(v) if mask >> i & 1]
        ys = [verts[i].y for i in kept]
        lo, hi = min(ys), max(ys)
        wide = lo < 2 * k < hi
        if not (wide or lo == 2 * k == hi):
            continue
        support = frozenset((verts[i].x, verts[i].y) for i in kept)
        dims[support] = len(kept) - 2 if wide else len(kept) - 1
        if mask == (1 << v) - 1:
            face, fk = top, k
        else:
            dropped = [top.b + 1 - i for i in range(v) if not mask >> i & 1]
            face = st.Stratum(
                top.n, top.N, top.b - len(dropped),
                [st.PointLabel(p.tau, st._collapse(p.x, dropped)) for p in top.points],
            )
            first = verts[kept[0]]
            fk = k + (first.x - first.y) // 2
        cells[support] = _make_cell(face, fk, st.format_stratum(face))
    local = LocalComplex(_make_cell(top, k, st.format_stratum(top)),
                         polytope.FacePoset(dims), cells)
    if len({c.id for c in local.cells.values()}) != len(local.cells):
        raise InvariantError("face strata of a single cell must be distinct")
    return local


# ---------------------------------------------------------------------------
# n = 3 specifics: stars, disk verification, row growth


def _is_type4(s: st.Stratum) -> bool:
    return len({p.x for p in s.points}) == 1


@dataclass(frozen=True)
class StarReport:
    """Closed star of a vertex cell in an n = 3 complex."""

    center: Cell
    triangles: Tuple[str, ...]
    edges: Tuple[str, ...]
    vertices: Tuple[str, ...]
    boundary_edges: Tuple[str, ...]  # star edges on the global boundary
    distinct_taus: int


def local_chart(v: st.Stratum) -> StarReport:
    """Closed star of a type-4 vertex (all x equal) in its n = 3 complex."""
    if v.n != 3:
        raise ValueError("local charts are defined for n = 3")
    if not _is_type4(v):
        raise ValueError("not a type-4 vertex: x-values differ")
    if not st.is_admissible(v) or st.cell_dimension(v) != 0:
        raise ValueError("not an admissible vertex stratum")
    cx = build(3, v.N)
    cid = st.format_stratum(v)
    if cid not in cx.by_id:
        raise InvariantError("vertex missing from its own complex")
    tris = sorted({t for e in cx.up[cid] for t in cx.up[e]})
    edges = sorted({e for t in tris for e in cx.down[t]})
    vertices = sorted({u for e in edges for u in cx.down[e]})
    boundary = tuple(e for e in edges if len(cx.up[e]) == 1)
    return StarReport(
        center=cx.by_id[cid],
        triangles=tuple(tris),
        edges=tuple(edges),
        vertices=tuple(vertices),
        boundary_edges=boundary,
        distinct_taus=len({p.tau for p in v.points}),
    )


@dataclass(frozen=True)
class DiskReport:
    """Result of checking an n = 3 complex against the disk axioms."""

    connected: bool
    pure: bool
    edge_degrees_ok: bool
    vertex_links_ok: bool
    boundary_ok: bool
    euler: int
    boundary_cycle: Tuple[str, ...]
    verdict: str

    @property
    def ok(self) -> bool:
        return self.verdict == "combinatorial disk"

    def summary(self) -> str:
        lines = [
            "connected:        %s" % ("yes" if self.connected else "no"),
            "pure 2-dim:       %s" % ("yes" if self.pure else "no"),
            "edge degrees 1|2: %s" % ("yes" if self.edge_degrees_ok else "no"),
            "vertex links ok:  %s" % ("yes" if self.vertex_links_ok else "no"),
            "boundary cycle:   %s" % ("yes" if self.boundary_ok else "no"),
            "euler:            %d" % self.euler,
            "verdict:          %s" % self.verdict,
        ]
        return "\n".join(lines)


def verify_disk(cx: DualComplex) -> DiskReport:
    """Check connectivity, purity, link and boundary conditions, and Euler."""
    if cx.n != 3:
        raise ValueError("disk verification applies to n = 3 complexes")
    vertices = [c.id for c in cx.by_dim.get(0, ())]
    edges = [c.id for c in cx.by_dim.get(1, ())]
    tris = [c.id for c in cx.by_dim.get(2, ())]

    adj: Dict[str, set] = {c.id: set() for c in cx.cells}
    for lo, hi in cx.incidence:
        adj[lo].add(hi)
        adj[hi].add(lo)
    connected = True
    if cx.cells:
        seen = {cx.cells[0].id}
        queue = [cx.cells[0].id]
        while queue:
            for nb in adj[queue.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        connected = len(seen) == len(cx.cells)

    pure = all(cx.up[e] for e in edges) and all(cx.up[v] for v in vertices)
    edge_degrees_ok = all(len(cx.up[e]) in (1, 2) for e in edges)

    links_ok = True
    for v in vertices:
        star_edges = list(cx.up[v])
        deg: Dict[str, int] = {e: 0 for e in star_edges}
        link: Dict[str, List[str]] = {e: [] for e in star_edges}
        for t in {t for e in star_edges for t in cx.up[e]}:
            through = [e for e in cx.down[t] if e in deg]
            if len(through) != 2:
                links_ok = False
                break
            a, b = through
            link[a].append(b)
            link[b].append(a)
            deg[a] += 1
            deg[b] += 1
        else:
            if any(d > 2 for d in deg.values()):
                links_ok = False
            ends = [e for e, d in deg.items() if d == 1]
            if len(ends) not in (0, 2):
                links_ok = False
            if star_edges:
                comp = {star_edges[0]}
                queue = [star_edges[0]]
                while queue:
                    for nb in link[queue.pop()]:
                        if nb not in comp:
                            comp.add(nb)
                            queue.append(nb)
                if len(comp) != len(star_edges):
                    links_ok = False
            continue
        break

    boundary_edges = [e for e in edges if len(cx.up[e]) == 1]
    boundary_ok = True
    cycle: Tuple[str, ...] = ()
    if boundary_edges:
        bnext: Dict[str, List[str]] = {}
        for e in boundary_edges:
            ends = cx.down[e]
            if len(ends) != 2:
                boundary_ok = False
                break
            bnext.setdefault(ends[0], []).append(ends[1])
            bnext.setdefault(ends[1], []).append(ends[0])
        if boundary_ok:
            if any(len(v) != 2 for v in bnext.values()):
                boundary_ok = False
            else:
                start = min(bnext)
                walk = [start]
                prev = None
                while True:
                    here = walk[-1]
                    step = [w for w in bnext[here] if w != prev]
                    nxt = step[0] if step else bnext[here][0]
                    if nxt == start:
                        break
                    prev = here
                    walk.append(nxt)
                    if len(walk) > len(bnext):
                        boundary_ok = False
                        break
                if boundary_ok and len(walk) != len(bnext):
                    boundary_ok = False  # more than one cycle
                if boundary_ok:
                    cycle = tuple(walk)
    else:
        boundary_ok = False  # a disk has nonempty boundary

    euler = cx.euler_characteristic()
    good = (
        connected
        and pure
        and edge_degrees_ok
        and links_ok
        and boundary_ok
        and euler == 1
    )
    return DiskReport(
        connected=connected,
        pure=pure,
        edge_degrees_ok=edge_degrees_ok,
        vertex_links_ok=links_ok,
        boundary_ok=boundary_ok,
        euler=euler,
        boundary_cycle=cycle,
        verdict="combinatorial disk" if good else "not a combinatorial disk",
    )


# ---------------------------------------------------------------------------
# row growth of type-4 centers

_X_OF_KIND = {"A1": 0, "B1+": 1, "B1-": -1}


@dataclass(frozen=True)
class RowCenter:
    """One type-4 center in the triangular row layout."""

    row: int
    pos: int
    kind: str  # "A1", "B1+", "B1-"
    taus: Tuple[int, int, int]  # integer coordinates before reduction mod N
    stratum: st.Stratum


def _row_start(k: int) -> Tuple[str, Tuple[int, int, int]]:
    q, r = divmod(k, 3)
    if r == 0:
        return "A1", (-q, -q, 2 * q)
    if r == 1:
        return "B1-", (-q, -q, 2 * q + 1)
    q = (k + 1) // 3
    return "B1+", (-q, -q, 2 * q - 1)


def _right_neighbor(kind: str, taus: Tuple[int, int, int]):
    a, b, c = taus
    if kind == "B1+":
        return "A1", (a, b + 1, c)
    if kind == "A1":
        return "B1-", (a, b + 1, c)
    return "B1+", (a - 1, b, c - 1)


def grow_rows(N: int) -> List[List[RowCenter]]:
    """Type-4 centers laid out row by row, rows 0..N with k+1 entries.

    Row starts and right-neighbor steps follow the three-periodic
    pattern; every produced center is checked to be admissible and to
    satisfy tau3 - tau1 = row.
    """
    if N < 1:
        raise ValueError("N must be positive")
    rows: List[List[RowCenter]] = []
    for k in range(N + 1):
        kind, taus = _row_start(k)
        row = []
        for pos in range(k + 1):
            x = _X_OF_KIND[kind]
            s = st.Stratum(
                3, N, 0 if kind == "A1" else 1,
                [st.PointLabel(t, x) for t in taus],
            )
            if not st.is_admissible(s):
                raise InvariantError(
                    "row growth produced an inadmissible center %s at row %d"
                    % (st.format_stratum(s), k)
                )
            if taus[2] - taus[0] != k:
                raise InvariantError("row coordinate drifted at row %d" % k)
            row.append(RowCenter(k, pos, kind, taus, s))
            kind, taus = _right_neighbor(kind, taus)
        rows.append(row)
    return rows


def type4_vertices(cx: DualComplex) -> Tuple[Cell, ...]:
    """Vertex cells whose stratum has a single repeated x-value."""
    if cx.n != 3:
        raise ValueError("type-4 vertices live in n = 3 complexes")
    return tuple(c for c in cx.by_dim.get(0, ()) if _is_type4(c.stratum))


# ---------------------------------------------------------------------------
# automorphisms of n = 3 complexes


def _triangulation_tables(cx: DualComplex):
    tri_verts = {}
    for t in cx.by_dim.get(2, ()):
        vs = sorted({v for e in cx.down[t.id] for v in cx.down[e]})
        if len(vs) != 3:
            raise ValueError("triangle %s is not on three vertices" % t.id)
        tri_verts[t.id] = tuple(vs)
    edge_by_pair = {}
    for e in cx.by_dim.get(1, ()):
        ends = frozenset(cx.down[e.id])
        if len(ends) != 2 or ends in edge_by_pair:
            raise ValueError("complex is not a simple triangulation")
        edge_by_pair[ends] = e.id
    return tri_verts, edge_by_pair


def has_automorphism(cx: DualComplex, order: int) -> bool:
    """Search for an incidence automorphism of the given exact order.

    Works on n = 3 simple triangulations: a map of one triangle onto
    another propagates uniquely across shared edges, so all candidates
    can be enumerated from seed correspondences.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    tri_verts, edge_by_pair = _triangulation_tables(cx)
    tris = sorted(tri_verts)
    if not tris:
        return False
    t0 = tris[0]

    for t1 in tris:
        for image in itertools.permutations(tri_verts[t1]):
            vmap = dict(zip(tri_verts[t0], image))
            tmap = {t0: t1}
            queue = [t0]
            good = True
            while queue and good:
                t = queue.pop()
                ti = tmap[t]
                for pair in itertools.combinations(tri_verts[t], 2):
                    e = edge_by_pair[frozenset(pair)]
                    ipair = frozenset(vmap[v] for v in pair)
                    ei = edge_by_pair.get(ipair)
                    if ei is None or len(cx.up[e]) != len(cx.up[ei]):
                        good = False
                        break
                    nbrs = [x for x in cx.up[e] if x != t]
                    inbrs = [x for x in cx.up[ei] if x != ti]
                    if not nbrs:
                        continue
                    tn, tni = nbrs[0], inbrs[0]
                    third = next(v for v in tri_verts[tn] if v not in pair)
                    ithird = next(v for v in tri_verts[tni] if v not in ipair)
                    if third in vmap:
                        if vmap[third] != ithird:
                            good = False
                            break
                    elif ithird in vmap.values():
                        good = False
                        break
                    else:
                        vmap[third] = ithird
                    if tn in tmap:
                        if tmap[tn] != tni:
                            good = False
                            break
                    else:
                        tmap[tn] = tni
                        queue.append(tn)
            if not good or len(tmap) != len(tris):
                continue
            if len(set(vmap.values())) != len(vmap):
                continue
            if _permutation_order(vmap) == order:
                return True
    return False


def _permutation_order(perm: Dict[str, str]) -> int:
    order = 1
    seen = set()
    for start in perm:
        if start in seen:
            continue
        length = 0
        here = start
        while here not in seen:
            seen.add(here)
            here = perm[here]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


# ---------------------------------------------------------------------------
# export and parsing


def _layout(cx: DualComplex, seed: int) -> Dict[str, Tuple[float, float]]:
    """Boundary on the unit circle, interior by averaging to a fixed point."""
    report = verify_disk(cx)
    if not report.ok:
        raise ValueError("layout needs a verified combinatorial disk")
    cycle = report.boundary_cycle
    m = len(cycle)
    pos: Dict[str, Tuple[float, float]] = {}
    for i, vid in enumerate(cycle):
        angle = 2.0 * math.pi * (i + seed) / m
        pos[vid] = (math.cos(angle), math.sin(angle))
    neighbors: Dict[str, set] = {c.id: set() for c in cx.by_dim.get(0, ())}
    for e in cx.by_dim.get(1, ()):
        a, b = cx.down[e.id]
        neighbors[a].add(b)
        neighbors[b].add(a)
    interior = sorted(v for v in neighbors if v not in pos)
    for v in interior:
        pos[v] = (0.0, 0.0)
    for _ in range(100000):
        worst = 0.0
        for v in interior:
            xs = [pos[u][0] for u in neighbors[v]]
            ys = [pos[u][1] for u in neighbors[v]]
            nx, ny = sum(xs) / len(xs), sum(ys) / len(ys)
            worst = max(worst, abs(nx - pos[v][0]), abs(ny - pos[v][1]))
            pos[v] = (nx, ny)
        if worst < 1e-9:
            break
    return pos


def to_json_dict(cx: DualComplex) -> dict:
    cells = []
    for c in sorted(cx.cells, key=lambda c: c.id):
        cells.append(
            {
                "id": c.id,
                "dim": c.dim,
                "class": str(c.cls),
                "b": c.b,
                "points": [{"tau": p.tau, "x": p.x} for p in c.stratum.points],
            }
        )
    return {
        "version": SCHEMA_VERSION,
        "n": cx.n,
        "N": cx.N,
        "cells": cells,
        "incidence": [list(pair) for pair in sorted(cx.incidence)],
    }


def _export_json(cx: DualComplex) -> bytes:
    return (json.dumps(to_json_dict(cx), indent=2) + "\n").encode("ascii")


def _export_dot(cx: DualComplex) -> bytes:
    lines = ["graph dual_complex {", "  node [shape=point];"]
    for c in cx.by_dim.get(0, ()):
        lines.append('  "%s";' % c.id)
    for e in cx.by_dim.get(1, ()):
        ends = sorted(cx.down[e.id])
        if len(ends) == 2:
            lines.append('  "%s" -- "%s";' % (ends[0], ends[1]))
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("ascii")


def _export_off(cx: DualComplex, seed: int) -> bytes:
    pos = _layout(cx, seed)
    vids = sorted(pos)
    index = {v: i for i, v in enumerate(vids)}
    tris = sorted(cx.by_dim.get(2, ()), key=lambda c: c.id)
    edges = cx.by_dim.get(1, ())
    lines = ["OFF", "%d %d %d" % (len(vids), len(tris), len(edges))]
    for v in vids:
        lines.append("%.9f %.9f 0" % pos[v])
    for t in tris:
        vs = sorted({v for e in cx.down[t.id] for v in cx.down[e]})
        lines.append("3 %d %d %d" % tuple(index[v] for v in vs))
    return ("\n".join(lines) + "\n").encode("ascii")


def _export_tikz(cx: DualComplex, seed: int, labels: bool) -> bytes:
    pos = _layout(cx, seed)
    lines = ["\\begin{tikzpicture}[scale=4]"]
    for e in sorted(cx.by_dim.get(1, ()), key=lambda c: c.id):
        a, b = sorted(cx.down[e.id])
        lines.append(
            "  \\draw (%.6f,%.6f) -- (%.6f,%.6f);"
            % (pos[a][0], pos[a][1], pos[b][0], pos[b][1])
        )
    if labels:
        for v in sorted(pos):
            lines.append(
                "  \\node[font=\\tiny] at (%.6f,%.6f) {%s};"
                % (pos[v][0], pos[v][1], v)
            )
    lines.append("\\end{tikzpicture}")
    return ("\n".join(lines) + "\n").encode("ascii")


def export(cx: DualComplex, fmt: str, layout_seed: int = 0, labels: bool = False) -> bytes:
    """Serialize a complex; off and tikz need an n = 3 verified disk."""
    if fmt == "json":
        return _export_json(cx)
    if fmt == "dot":
        return _export_dot(cx)
    if fmt == "off":
        return _export_off(cx, layout_seed)
    if fmt == "tikz":
        return _export_tikz(cx, layout_seed, labels)
    raise ValueError("unknown export format %r" % fmt)


_ID_RE = re.compile(r"^(?P<literal>X\{.*\})(?:@k=(?P<k>-?\d+))?$")


def parse_complex(data) -> DualComplex:
    """Rebuild a DualComplex from its JSON export."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema version %r" % data.get("version"))
    n, N = int(data["n"]), int(data["N"])
    cells = []
    ids = set()
    for entry in data["cells"]:
        match = _ID_RE.match(entry["id"])
        if not match:
            raise ValueError("bad cell id %r" % entry["id"])
        s = st.Stratum(
            n, N, int(entry["b"]),
            [st.PointLabel(int(p["tau"]), int(p["x"])) for p in entry["points"]],
        )
        if match.group("literal") != st.format_stratum(s):
            raise ValueError("cell id %r does not match its points" % entry["id"])
        if match.group("k") is not None:
            k = int(match.group("k"))
        else:
            levels = st.valid_levels(s)
            if len(levels) != 1:
                raise ValueError(
                    "cell id %r needs an explicit neutral level" % entry["id"]
                )
            k = levels[0]
        cell = _make_cell(s, k, entry["id"])
        if cell.dim != int(entry["dim"]) or str(cell.cls) != entry["class"]:
            raise ValueError("cell metadata mismatch for %r" % entry["id"])
        if cell.id in ids:
            raise ValueError("duplicate cell id %r" % cell.id)
        ids.add(cell.id)
        cells.append(cell)
    incidence = set()
    for lo, hi in data["incidence"]:
        if lo not in ids or hi not in ids:
            raise ValueError("incidence references unknown cell")
        incidence.add((lo, hi))
    cells.sort(key=lambda c: c.id)
    return DualComplex(n, N, tuple(cells), frozenset(incidence))
