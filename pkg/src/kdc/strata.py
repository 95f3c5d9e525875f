"""Stratum labels and their admissibility.

A stratum records, for each of n points, a residue tau modulo N (which
cycle block the point sits in) and a signed level x with |x| <= b+1.
The level data alone determines a line chart (see linechart); the
stratum is admissible when some neutral level k of that chart satisfies
sum(tau_i) + k == 0 (mod N).  An independent route to the same decision
goes through the occupancy vector m and the weighted sums W_plus and
W_minus, which must cancel mod 2*N*sum(r) for some expansion tuple r of
positive integers.  Both routes live here; the test suite checks they
agree.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Iterator, Optional

from .linechart import (
    Classification,
    LineChart,
    classify,
    valid_neutral_levels,
    validate,
)


@dataclass(frozen=True)
class PointLabel:
    """One point: cycle-block residue tau and signed level x."""

    tau: int
    x: int

    def __str__(self) -> str:
        return f"({self.tau},{self.x:+d})" if self.x else f"({self.tau},0)"


def _point_key(p: PointLabel) -> tuple[int, int, int]:
    # |x| ascending, positive before negative, then tau
    return (abs(p.x), 0 if p.x >= 0 else 1, p.tau)


@dataclass(frozen=True)
class Stratum:
    """Canonical stratum label.

    Construction normalizes its input: residues are reduced mod N,
    points at the top level b+1 with negative sign flip to the positive
    side while their residue drops by one, and points are sorted.
    Validation enforces |x| <= b+1 and stability, meaning every level
    1..b carries at least one point.
    """

    n: int
    N: int
    b: int
    points: tuple[PointLabel, ...]

    def __init__(self, n: int, N: int, b: int, points) -> None:
        n, N, b = int(n), int(N), int(b)
        if N < 1:
            raise ValueError("N must be >= 1")
        if n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= b <= n:
            raise ValueError(f"b must lie in 0..n, got b={b} with n={n}")
        pts = []
        for raw in points:
            tau, x = (raw.tau, raw.x) if isinstance(raw, PointLabel) else (int(raw[0]), int(raw[1]))
            if abs(x) > b + 1:
                raise ValueError(f"level |{x}| exceeds b+1={b + 1}")
            if x == -(b + 1):
                # flip to the positive side of the top level; the cycle
                # block shifts down by one
                tau, x = tau - 1, b + 1
            pts.append(PointLabel(tau % N, x))
        if len(pts) != n:
            raise ValueError(f"expected {n} points, got {len(pts)}")
        pts.sort(key=_point_key)
        occupied = {abs(p.x) for p in pts}
        missing = [lv for lv in range(1, b + 1) if lv not in occupied]
        if missing:
            raise ValueError(f"unstable stratum, empty level(s) {missing}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "points", tuple(pts))

    @property
    def tau_sum(self) -> int:
        return sum(p.tau for p in self.points) % self.N

    def __str__(self) -> str:
        return format_stratum(self)


def canonical_key(s: Stratum):
    """Total order key; equal exactly for equal canonical labels."""
    return (s.n, s.N, s.b, tuple((p.x, p.tau) for p in s.points))


def chart_of(s: Stratum) -> LineChart:
    """Read the line chart off the level data.

    One vertex per level l = b+1 down to 1, at x = #{points with
    |x_i| >= l} and y = sum of their signs.  Level-0 points are
    invisible to the chart.  The result is canonical because stored
    top-level points are always positive.
    """
    verts = []
    for level in range(s.b + 1, 0, -1):
        tail = [p.x for p in s.points if abs(p.x) >= level]
        verts.append((len(tail), sum(1 if x > 0 else -1 for x in tail)))
    return LineChart(s.n, verts)


def _chart_classes(chart: LineChart) -> list[tuple[int, int, int]]:
    """Level-sign classes (level, sign, count) in residue consumption order.

    Order: levels 1..b gap by gap from the right, positives before
    negatives, then level 0 (sign 0), then level b+1 with sign read from
    the leftmost vertex.  Empty classes are dropped.
    """
    verts = chart.vertices
    b = len(verts) - 1
    out = []
    for i in range(b, 0, -1):
        dx = verts[i].x - verts[i - 1].x
        dy = verts[i].y - verts[i - 1].y
        level = b + 1 - i
        if (dx + dy) // 2:
            out.append((level, 1, (dx + dy) // 2))
        if (dx - dy) // 2:
            out.append((level, -1, (dx - dy) // 2))
    if chart.n - verts[-1].x:
        out.append((0, 0, chart.n - verts[-1].x))
    x0, y0 = verts[0].x, verts[0].y
    if (x0 + y0) // 2:
        out.append((b + 1, 1, (x0 + y0) // 2))
    if (x0 - y0) // 2:
        out.append((b + 1, -1, (x0 - y0) // 2))
    return out


def stratum_from_chart(chart: LineChart, tau_assignment, N: int) -> Stratum:
    """Distribute residues over a chart's level-sign classes.

    Inverse of chart_of up to shift equivalence.  tau_assignment is
    either a flat sequence of residues consumed in the class order of
    _chart_classes, or a mapping {(level, sign): residues} with sign 0
    for level-0 points; empty classes may be omitted from the mapping.
    """
    report = validate(chart)
    if not report:
        raise ValueError(f"invalid chart: {report.reason}")
    classes = _chart_classes(chart)
    b = len(chart.vertices) - 1
    points = []
    if isinstance(tau_assignment, Mapping):
        unknown = set(tau_assignment) - {(lv, sg) for lv, sg, _ in classes}
        if any(len(tuple(tau_assignment[key])) for key in unknown):
            raise ValueError(f"residues supplied for absent classes {sorted(unknown)}")
        for level, sign, count in classes:
            taus = tuple(tau_assignment.get((level, sign), ()))
            if len(taus) != count:
                raise ValueError(
                    f"class (level={level}, sign={sign:+d}) needs {count} residues, got {len(taus)}"
                )
            points += [(t, sign * level) for t in taus]
    else:
        flat = tuple(tau_assignment)
        at = 0
        for level, sign, count in classes:
            taus = flat[at : at + count]
            at += count
            if len(taus) != count:
                raise ValueError(f"need {sum(c for _, _, c in classes)} residues, got {len(flat)}")
            points += [(t, sign * level) for t in taus]
        if at != len(flat):
            raise ValueError(f"need {at} residues, got {len(flat)}")
    return Stratum(chart.n, N, b, points)


def tau_admissible(s: Stratum, k: int) -> bool:
    """Whether sum(tau_i) + k == 0 (mod N)."""
    if k not in valid_neutral_levels(chart_of(s)):
        raise ValueError(f"k={k} is not a valid neutral level of {chart_of(s)}")
    return (s.tau_sum + k) % s.N == 0


def valid_levels(s: Stratum) -> tuple[int, ...]:
    """Neutral levels of the chart that also satisfy the residue condition."""
    t = s.tau_sum
    return tuple(sorted(k for k in valid_neutral_levels(chart_of(s)) if (t + k) % s.N == 0))


def is_admissible(s: Stratum) -> bool:
    return bool(valid_levels(s))


def classify_stratum(s: Stratum, k: Optional[int] = None) -> Classification:
    """Narrow or wide; the class depends on the chart alone, not on k."""
    if k is not None:
        return classify(chart_of(s), k)
    levels = valid_levels(s)
    if not levels:
        raise ValueError("inadmissible stratum has no classification")
    return classify(chart_of(s), levels[0])


def dimension(s: Stratum, delta: int = 2) -> int:
    """delta*(n-1) + (n-b) + eps with eps = 1 iff wide."""
    if delta not in (1, 2):
        raise ValueError("delta must be 1 or 2")
    eps = 1 if classify_stratum(s) is Classification.WIDE else 0
    return delta * (s.n - 1) + (s.n - s.b) + eps


def quotient_dimension(s: Stratum, delta: int = 2) -> int:
    """delta*(n-1) - b + eps with eps = 1 iff wide."""
    if delta not in (1, 2):
        raise ValueError("delta must be 1 or 2")
    eps = 1 if classify_stratum(s) is Classification.WIDE else 0
    return delta * (s.n - 1) - s.b + eps


def cell_dimension(s: Stratum) -> int:
    """Dimension of the cell this stratum spans in the dual complex."""
    v = s.b + 1
    return v - 2 if classify_stratum(s) is Classification.WIDE else v - 1


def _toward_zero(x: int, j: int) -> int:
    if abs(x) < j:
        return x
    return x - 1 if x > 0 else x + 1


def smooth(s: Stratum, j: int, mode: str = "hilbert") -> Optional[Stratum]:
    """Smooth along level j: points at levels >= j move one step toward 0.

    Equivalently the chart loses its level-j vertex, and b drops by one.
    Residues stay attached to their points.  In kummer mode the result
    is returned only when admissible; hilbert mode always returns it.
    """
    mode = mode.lower()
    if mode not in ("hilbert", "kummer"):
        raise ValueError(f"unknown smoothing mode {mode!r}")
    if not 1 <= j <= s.b + 1:
        raise ValueError(f"smoothing level must lie in 1..{s.b + 1}, got {j}")
    if s.b == 0:
        raise ValueError("a b=0 stratum has no level left to smooth")
    out = Stratum(s.n, s.N, s.b - 1, [PointLabel(p.tau, _toward_zero(p.x, j)) for p in s.points])
    if mode == "kummer" and not is_admissible(out):
        return None
    return out


def _collapse(x: int, dropped: Sequence[int]) -> int:
    shift = sum(1 for level in dropped if level <= abs(x))
    if x > 0:
        return x - shift
    if x < 0:
        return x + shift
    return 0


def face_items(s: Stratum, k: int | None = None) -> frozenset[tuple[Stratum, int]]:
    """Proper faces of the cells this stratum spans, with inherited k.

    A face arises from a nonempty proper vertex subset of the chart
    that is still valid at one of the stratum's neutral levels k.
    Deleting a vertex collapses its level, so every point at or above
    it moves one step toward zero; residues ride along unchanged up to
    the canonical top-level flip.  The returned k is expressed in the
    face's own canonical chart.  Passing k restricts to that single
    neutral level.
    """
    if k is None:
        ks = valid_levels(s)
    elif k in valid_levels(s):
        ks = (k,)
    else:
        raise ValueError("k=%d is not a neutral level of this stratum" % k)
    chart = chart_of(s)
    verts = chart.vertices
    v = len(verts)
    items = set()
    for k in ks:
        for mask in range(1, (1 << v) - 1):
            kept = [i for i in range(v) if mask >> i & 1]
            ys = [verts[i].y for i in kept]
            lo, hi = min(ys), max(ys)
            if not (lo < 2 * k < hi or lo == 2 * k == hi):
                continue
            dropped = [s.b + 1 - i for i in range(v) if not mask >> i & 1]
            face = Stratum(
                s.n, s.N, s.b - len(dropped),
                [PointLabel(p.tau, _collapse(p.x, dropped)) for p in s.points],
            )
            first = verts[kept[0]]
            items.add((face, k + (first.x - first.y) // 2))
    return frozenset(items)


def faces(s: Stratum) -> list[Stratum]:
    """Distinct proper faces, ordered by canonical key."""
    return sorted({f for f, _ in face_items(s)}, key=canonical_key)


def specializations(s: Stratum) -> list[Stratum]:
    """Admissible strata one cell dimension up that have this one as a face.

    Covers in the face order: a wide stratum gains one chart vertex, a
    narrow one gains either one vertex at its neutral height or a pair
    straddling it, in every case with all residue distributions that
    collapse back to the given points.
    """
    if not is_admissible(s):
        raise ValueError("inadmissible stratum")
    want = cell_dimension(s) + 1
    out = []
    for t in _admissible_flat(s.n, s.N):
        if not s.b < t.b <= s.b + 2:
            continue
        if cell_dimension(t) != want:
            continue
        if any(f == s for f, _ in face_items(t)):
            out.append(t)
    return sorted(out, key=canonical_key)


# --- occupancy vectors and the weight obstruction -------------------------


@dataclass(frozen=True)
class ExpansionTuple:
    """Tuple of b+1 positive expansion lengths."""

    r: tuple[int, ...]

    def __init__(self, r) -> None:
        rr = tuple(int(v) for v in r)
        if not rr or any(v < 1 for v in rr):
            raise ValueError("expansion entries must be positive integers")
        object.__setattr__(self, "r", rr)

    @property
    def rsum(self) -> int:
        return sum(self.r)

    def __len__(self) -> int:
        return len(self.r)

    def __iter__(self):
        return iter(self.r)

    def __getitem__(self, i):
        return self.r[i]


@dataclass(frozen=True)
class OccupancyVector:
    """Point counts per cycle component, 2N consecutive blocks."""

    b: int
    N: int
    counts: tuple[int, ...]

    def __init__(self, b: int, N: int, counts) -> None:
        b, N = int(b), int(N)
        cc = tuple(int(v) for v in counts)
        if N < 1 or b < 0:
            raise ValueError("need N >= 1 and b >= 0")
        if any(v < 0 for v in cc):
            raise ValueError("counts must be nonnegative")
        if len(cc) % (2 * N) != 0 or len(cc) < 2 * N * (b + 1):
            raise ValueError(f"count vector length {len(cc)} does not fit 2N blocks of >= b+1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "counts", cc)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, i):
        return self.counts[i]


def m_vector(s: Stratum, r) -> OccupancyVector:
    """Occupancy over the 2*N*rsum cycle components under expansion r.

    A positive point at level k in block tau lands on component
    2*tau*rsum + (r_1 + ... + r_k), a negative one on
    2*tau*rsum - (r_1 + ... + r_k), indices mod 2*N*rsum.
    """
    r = r if isinstance(r, ExpansionTuple) else ExpansionTuple(r)
    if len(r) != s.b + 1:
        raise ValueError(f"expansion needs {s.b + 1} entries, got {len(r)}")
    rsum = r.rsum
    size = 2 * s.N * rsum
    rho = tuple(itertools.accumulate(r, initial=0))
    counts = [0] * size
    for p in s.points:
        offset = rho[abs(p.x)]
        idx = 2 * p.tau * rsum + (offset if p.x >= 0 else -offset)
        counts[idx % size] += 1
    return OccupancyVector(s.b, s.N, counts)


def occupancy(s: Stratum) -> OccupancyVector:
    """m_vector at the all-ones expansion, one component per level and sign."""
    return m_vector(s, (1,) * (s.b + 1))


def _counts_nb(m, N: Optional[int], b: Optional[int]) -> tuple[tuple[int, ...], int, int]:
    if isinstance(m, OccupancyVector):
        return m.counts, (m.N if N is None else N), (m.b if b is None else b)
    if N is None or b is None:
        raise ValueError("N and b are required with a bare count sequence")
    return tuple(int(v) for v in m), int(N), int(b)


def W_plus(m, r, N: Optional[int] = None, b: Optional[int] = None) -> int:
    """Sum of m[2*tau*(b+1) + k] * (2*tau*rsum + rho_k) over tau and k = 0..b.

    m must be in the all-ones indexing of length 2N(b+1); r supplies the
    weights rho_k = r_1 + ... + r_k.
    """
    counts, N, b = _counts_nb(m, N, b)
    r = r if isinstance(r, ExpansionTuple) else ExpansionTuple(r)
    if len(counts) != 2 * N * (b + 1):
        raise ValueError("counts must use the all-ones indexing of length 2N(b+1)")
    if len(r) != b + 1:
        raise ValueError(f"expansion needs {b + 1} entries, got {len(r)}")
    rsum = r.rsum
    rho = tuple(itertools.accumulate(r, initial=0))
    size = 2 * N * (b + 1)
    total = 0
    for tau in range(N):
        for k in range(b + 1):
            total += counts[(2 * tau * (b + 1) + k) % size] * (2 * tau * rsum + rho[k])
    return total


def W_minus(m, r, N: Optional[int] = None, b: Optional[int] = None) -> int:
    """Sum of m[2*tau*(b+1) - k] * (2*tau*rsum - rho_k) over tau and k = 1..b+1."""
    counts, N, b = _counts_nb(m, N, b)
    r = r if isinstance(r, ExpansionTuple) else ExpansionTuple(r)
    if len(counts) != 2 * N * (b + 1):
        raise ValueError("counts must use the all-ones indexing of length 2N(b+1)")
    if len(r) != b + 1:
        raise ValueError(f"expansion needs {b + 1} entries, got {len(r)}")
    rsum = r.rsum
    rho = tuple(itertools.accumulate(r, initial=0))
    size = 2 * N * (b + 1)
    total = 0
    for tau in range(N):
        for k in range(1, b + 2):
            total += counts[(2 * tau * (b + 1) - k) % size] * (2 * tau * rsum - rho[k])
    return total


def _weight_coefficients(counts: Sequence[int], N: int, b: int) -> list[int]:
    """Coefficients A with W_plus + W_minus == sum(A[i-1] * r_i) for every r."""
    size = 2 * N * (b + 1)
    A = [0] * (b + 1)
    for tau in range(N):
        for k in range(b + 1):
            c = counts[(2 * tau * (b + 1) + k) % size]
            if c:
                for i in range(b + 1):
                    A[i] += c * (2 * tau + (1 if i < k else 0))
        for k in range(1, b + 2):
            c = counts[(2 * tau * (b + 1) - k) % size]
            if c:
                for i in range(b + 1):
                    A[i] += c * (2 * tau - (1 if i < k else 0))
    return A


def r_exists(m, N: Optional[int] = None, b: Optional[int] = None) -> bool:
    """Decide whether some positive expansion cancels the combined weight.

    With W_plus + W_minus == sum(A_i r_i), the congruence mod 2N*rsum
    asks for an integer t with sum((A_i - 2Nt) r_i) == 0 over positive
    r_i, which has a solution iff the shifted coefficients are all zero
    or take both signs.  Only t between min(A)/2N and max(A)/2N can
    work, so the scan is finite.
    """
    counts, N, b = _counts_nb(m, N, b)
    if len(counts) != 2 * N * (b + 1):
        raise ValueError("counts must use the all-ones indexing of length 2N(b+1)")
    A = _weight_coefficients(counts, N, b)
    step = 2 * N
    for t in range(-((-min(A)) // step), max(A) // step + 1):
        shifted = [a - step * t for a in A]
        if all(v == 0 for v in shifted) or min(shifted) < 0 < max(shifted):
            return True
    return False


def find_admissible_r(
    m, bound: Optional[int] = None, N: Optional[int] = None, b: Optional[int] = None
) -> Optional[ExpansionTuple]:
    """Produce a witness expansion, or None when none exists.

    Without a bound the witness comes from the constructive argument
    behind r_exists and is verified through W_plus and W_minus before
    being returned.  With a bound the search is instead exhaustive over
    positive expansions with rsum <= bound, an independent cross-check
    that cannot certify nonexistence beyond the bound.
    """
    counts, N, b = _counts_nb(m, N, b)
    if len(counts) != 2 * N * (b + 1):
        raise ValueError("counts must use the all-ones indexing of length 2N(b+1)")
    if bound is not None:
        return _exhaustive_r(counts, N, b, bound)
    A = _weight_coefficients(counts, N, b)
    step = 2 * N
    for t in range(-((-min(A)) // step), max(A) // step + 1):
        shifted = [a - step * t for a in A]
        if all(v == 0 for v in shifted):
            witness = ExpansionTuple((1,) * (b + 1))
        elif min(shifted) < 0 < max(shifted):
            i_pos = max(range(b + 1), key=lambda i: shifted[i])
            i_neg = min(range(b + 1), key=lambda i: shifted[i])
            scale = [1] * (b + 1)
            rest = sum(shifted[i] for i in range(b + 1) if i not in (i_pos, i_neg))
            # enlarge the negative slot until the sum without i_pos drops below zero
            scale[i_neg] = max(1, -(-(rest + 1) // -shifted[i_neg]))
            partial = rest + scale[i_neg] * shifted[i_neg]
            witness = [shifted[i_pos] * scale[i] for i in range(b + 1)]
            witness[i_pos] = -partial
            witness = ExpansionTuple(witness)
        else:
            continue
        combined = W_plus(counts, witness, N, b) + W_minus(counts, witness, N, b)
        if combined % (2 * N * witness.rsum):
            raise RuntimeError("constructed witness failed the weight check")
        return witness
    return None


def _exhaustive_r(counts, N: int, b: int, bound: int) -> Optional[ExpansionTuple]:
    for rsum in range(b + 1, bound + 1):
        for cuts in itertools.combinations(range(1, rsum), b):
            parts = tuple(x - y for x, y in zip(cuts + (rsum,), (0,) + cuts))
            combined = W_plus(counts, parts, N, b) + W_minus(counts, parts, N, b)
            if combined % (2 * N * rsum) == 0:
                return ExpansionTuple(parts)
    return None


# --- enumeration -----------------------------------------------------------


def _level_splits(budget: int, levels: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Sign splits (positive, negative) per level, each totalling >= 1."""
    if levels == 0:
        yield ()
        return
    for total in range(1, budget - (levels - 1) + 1):
        for p in range(total + 1):
            head = ((p, total - p),)
            for rest in _level_splits(budget - total, levels - 1):
                yield head + rest


def _shapes(n: int, b: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...], int]]:
    """Point counts (top level, splits for levels b..1, level 0)."""
    for c_top in range(n - b + 1):
        for splits in _level_splits(n - c_top, b):
            used = c_top + sum(p + q for p, q in splits)
            yield c_top, splits, n - used


def _shape_chart(n: int, shape) -> LineChart:
    c_top, splits, _ = shape
    x = y = c_top
    verts = [(x, y)]
    for p, q in splits:
        x += p + q
        y += p - q
        verts.append((x, y))
    return LineChart(n, verts)


def _shape_classes(shape) -> list[tuple[int, int, int]]:
    c_top, splits, c0 = shape
    b = len(splits)
    out = []
    if c_top:
        out.append((b + 1, 1, c_top))
    for i, (p, q) in enumerate(splits):
        if p:
            out.append((b - i, 1, p))
        if q:
            out.append((b - i, -1, q))
    if c0:
        out.append((0, 0, c0))
    return out


def iter_strata(
    n: int, N: int, b: Optional[int] = None, admissible_only: bool = False
) -> Iterator[Stratum]:
    """All canonical stratum labels, optionally fixing b or filtering admissible."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    for bb in range(n + 1) if b is None else (b,):
        for shape in _shapes(n, bb):
            ks = valid_neutral_levels(_shape_chart(n, shape))
            if admissible_only and not ks:
                continue
            targets = {(-k) % N for k in ks}
            classes = _shape_classes(shape)
            pools = [
                itertools.combinations_with_replacement(range(N), count)
                for _, _, count in classes
            ]
            for combo in itertools.product(*pools):
                total = sum(itertools.chain.from_iterable(combo))
                if admissible_only and total % N not in targets:
                    continue
                points = [
                    (t, sign * level)
                    for (level, sign, _), taus in zip(classes, combo)
                    for t in taus
                ]
                yield Stratum(n, N, bb, points)


@functools.lru_cache(maxsize=None)
def _admissible_flat(n: int, N: int) -> tuple[Stratum, ...]:
    return tuple(sorted(iter_strata(n, N, admissible_only=True), key=canonical_key))


def enumerate_admissible(n: int, N: int) -> dict[int, tuple[Stratum, ...]]:
    """Canonical admissible strata grouped by cell dimension, top first."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if N < 1:
        raise ValueError("N must be >= 1")
    groups: dict[int, list[Stratum]] = {}
    for s in _admissible_flat(n, N):
        groups.setdefault(cell_dimension(s), []).append(s)
    return {d: tuple(groups[d]) for d in sorted(groups, reverse=True)}


# --- literals ---------------------------------------------------------------

_STRATUM_RE = re.compile(r"^X\{\s*n=(\d+)\s*;\s*N=(\d+)\s*;\s*b=(\d+)\s*;\s*\[(.*)\]\s*\}$")
_POINT_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*([+-]?\d+)\s*\)")


def parse_stratum(text: str) -> Stratum:
    """Parse a literal like X{n=3;N=2;b=1;[(0,+1),(1,+1),(0,-2)]}.

    Pairs are (tau, x).  Parsing canonicalizes, so formatting the result
    round-trips exactly on canonical literals.
    """
    m = _STRATUM_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a stratum literal: {text!r}")
    body = m.group(4)
    leftover = _POINT_RE.sub("", body).replace(",", "").strip()
    if leftover:
        raise ValueError(f"unparsed stratum content: {leftover!r}")
    pts = [(int(t), int(x)) for t, x in _POINT_RE.findall(body)]
    return Stratum(int(m.group(1)), int(m.group(2)), int(m.group(3)), pts)


def format_stratum(s: Stratum) -> str:
    body = ",".join(str(p) for p in s.points)
    return f"X{{n={s.n};N={s.N};b={s.b};[{body}]}}"
