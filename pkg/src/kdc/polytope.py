"""Abstract face lattices: simplices, products, cones, and slices.

Everything here is purely combinatorial.  A face is a nonempty frozenset
of generator labels and carries an explicit dimension; the order is
support inclusion.  The empty face stays implicit (dimension -1), it only
participates in cone building.  No coordinates, no hulls.
"""

from __future__ import annotations

import itertools
from typing import Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Tuple

Face = FrozenSet[Hashable]


def _face_key(face: Face) -> Tuple:
    return (len(face), sorted(repr(x) for x in face))


class FacePoset:
    """Finite graded poset of faces ordered by inclusion of supports."""

    def __init__(self, dims: Mapping[Face, int]):
        self._dims: Dict[Face, int] = {}
        for face, d in dims.items():
            face = frozenset(face)
            if not face:
                raise ValueError("the empty face is implicit, do not list it")
            self._dims[face] = int(d)
        self._faces: Tuple[Face, ...] = tuple(sorted(self._dims, key=_face_key))

    @property
    def faces(self) -> Tuple[Face, ...]:
        return self._faces

    def dim_of(self, face: Face) -> int:
        return self._dims[frozenset(face)]

    @property
    def dim(self) -> int:
        return max(self._dims.values(), default=-1)

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, face: Face) -> bool:
        return frozenset(face) in self._dims

    def f_vector(self) -> Tuple[int, ...]:
        """Face counts by dimension, from 0 up to the top dimension."""
        counts = [0] * (self.dim + 1)
        for d in self._dims.values():
            counts[d] += 1
        return tuple(counts)

    def euler_sum(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def maximal_faces(self) -> Tuple[Face, ...]:
        out = []
        for f in self._faces:
            if not any(f < g for g in self._faces):
                out.append(f)
        return tuple(out)

    def has_unique_max(self) -> bool:
        return len(self.maximal_faces()) == 1

    def covers(self) -> Tuple[Tuple[Face, Face], ...]:
        """All (lower, upper) pairs with inclusion and dimension gap one."""
        out = []
        for f in self._faces:
            df = self._dims[f]
            for g in self._faces:
                if self._dims[g] == df + 1 and f < g:
                    out.append((f, g))
        return tuple(out)

    def is_graded(self) -> bool:
        """Operational grading check used before isomorphism testing.

        Inclusion must be strictly dimension increasing, every non-minimal
        face needs a subface one dimension down, and every non-maximal
        face a superface one dimension up.
        """
        by_dim: Dict[int, list] = {}
        for f, d in self._dims.items():
            by_dim.setdefault(d, []).append(f)
        if not self._faces:
            return True
        top = self.dim
        lo = min(self._dims.values())
        for f, d in self._dims.items():
            for g, e in self._dims.items():
                if f < g and d >= e:
                    return False
            if d > lo and not any(g < f for g in by_dim.get(d - 1, ())):
                return False
            if d < top and not any(f < g for g in by_dim.get(d + 1, ())):
                return False
        return True


EMPTY = FacePoset({})


def simplex(n: int) -> FacePoset:
    """Face lattice of the n-simplex on vertex labels ("v", 0..n)."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    labels = [("v", i) for i in range(n + 1)]
    dims = {}
    for size in range(1, n + 2):
        for sub in itertools.combinations(labels, size):
            dims[frozenset(sub)] = size - 1
    return FacePoset(dims)


def product(p: FacePoset, q: FacePoset) -> FacePoset:
    """Face lattice of the product; dimensions add.

    Supports are tagged left/right so inclusion remains componentwise.
    """
    if not p.has_unique_max() or not q.has_unique_max():
        raise ValueError("product needs factors with a unique maximal face")
    dims = {}
    for f in p.faces:
        left = frozenset(("L", a) for a in f)
        for g in q.faces:
            right = frozenset(("R", b) for b in g)
            dims[left | right] = p.dim_of(f) + q.dim_of(g)
    return FacePoset(dims)


def _next_apex_index(dims: Mapping[Face, int]) -> int:
    used = set()
    for face in dims:
        for lab in face:
            if isinstance(lab, tuple) and len(lab) == 2 and lab[0] == "apex":
                used.add(lab[1])
    return max(used) + 1 if used else 0


def cone(p: FacePoset, times: int = 1) -> FacePoset:
    """Iterated cone; each round joins one fresh apex to every face.

    The implicit empty face gives the apex itself, so coning the empty
    lattice m times produces the (m-1)-simplex.
    """
    if times < 0:
        raise ValueError("cannot cone a negative number of times")
    dims = {f: p.dim_of(f) for f in p.faces}
    start = _next_apex_index(dims)
    for t in range(times):
        apex = ("apex", start + t)
        joined = {frozenset({apex}): 0}
        for f, d in dims.items():
            joined[f | {apex}] = d + 1
        dims.update(joined)
    return FacePoset(dims)


def slice_lattice(n_plus: int, n_minus: int, n_zero: int) -> FacePoset:
    """Face lattice of a simplex sliced by a hyperplane.

    Generators split into n_plus strictly above, n_minus strictly below
    and n_zero on the cutting plane.  A support is a face when it either
    sits entirely on the plane (dimension size-1) or meets both open
    sides (dimension size-2, the slice eats one dimension).
    """
    if n_plus < 1 or n_minus < 1:
        raise ValueError("need at least one generator on each open side")
    if n_zero < 0:
        raise ValueError("n_zero must be nonnegative")
    labels = (
        [("+", i) for i in range(n_plus)]
        + [("-", i) for i in range(n_minus)]
        + [("0", i) for i in range(n_zero)]
    )
    dims = {}
    for size in range(1, len(labels) + 1):
        for sub in itertools.combinations(labels, size):
            signs = {lab[0] for lab in sub}
            if "+" in signs and "-" in signs:
                dims[frozenset(sub)] = size - 2
            elif signs == {"0"}:
                dims[frozenset(sub)] = size - 1
    return FacePoset(dims)


# keep the short name available on the module without shadowing the
# builtin inside it
slice = slice_lattice


def _cover_maps(p: FacePoset):
    up: Dict[Face, Tuple[Face, ...]] = {f: () for f in p.faces}
    down: Dict[Face, Tuple[Face, ...]] = {f: () for f in p.faces}
    for lo, hi in p.covers():
        up[lo] = up[lo] + (hi,)
        down[hi] = down[hi] + (lo,)
    return up, down


def _refine_colors(p: FacePoset, up, down) -> Dict[Face, int]:
    # Weisfeiler-Leman style refinement on the cover graph.
    color = {f: p.dim_of(f) for f in p.faces}
    while True:
        sig = {
            f: (
                color[f],
                tuple(sorted(color[g] for g in up[f])),
                tuple(sorted(color[g] for g in down[f])),
            )
            for f in p.faces
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {f: palette[sig[f]] for f in p.faces}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def iso(p: FacePoset, q: FacePoset) -> bool:
    """Graded poset isomorphism via color refinement plus backtracking.

    Label bijections are useless across constructions (a slice and a
    simplex can be isomorphic on different generator sets), so only the
    cover structure is compared.
    """
    if len(p) != len(q):
        return False
    if p.f_vector() != q.f_vector():
        return False
    if not p.is_graded() or not q.is_graded():
        raise ValueError("isomorphism testing needs graded posets")
    up_p, dn_p = _cover_maps(p)
    up_q, dn_q = _cover_maps(q)
    col_p = _refine_colors(p, up_p, dn_p)
    col_q = _refine_colors(q, up_q, dn_q)
    if sorted(col_p.values()) != sorted(col_q.values()):
        return False
    by_color: Dict[int, list] = {}
    for g, c in col_q.items():
        by_color.setdefault(c, []).append(g)
    # most constrained first
    order = sorted(p.faces, key=lambda f: (len(by_color[col_p[f]]), _face_key(f)))
    mapping: Dict[Face, Face] = {}
    used = set()

    def consistent(f: Face, g: Face) -> bool:
        for nb in up_p[f]:
            if nb in mapping and mapping[nb] not in up_q[g]:
                return False
        for nb in dn_p[f]:
            if nb in mapping and mapping[nb] not in dn_q[g]:
                return False
        return True

    def back(i: int) -> bool:
        if i == len(order):
            return True
        f = order[i]
        for g in by_color[col_p[f]]:
            if g in used or not consistent(f, g):
                continue
            mapping[f] = g
            used.add(g)
            if back(i + 1):
                return True
            del mapping[f]
            used.discard(g)
        return False

    return back(0)
