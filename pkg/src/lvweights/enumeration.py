"""Exhaustive enumeration of distinguished weights and closed-form families.

Every distinguished weight is anti-symmetric (entry i equals minus entry
n+1-i), so the search space is the lattice of weakly decreasing nonnegative
free coordinates x_1 >= ... >= x_h >= 0 with h = floor(n/2); the mirror
half and the middle zero (odd n) are forced.  No proven entry bound exists,
so the default bound is the largest entry of the scaled-staircase family
and its sufficiency is cross-checked against the count recursion by the
test suite (with one automatic bound escalation).

The scan partitions the leading-coordinate range across worker processes;
workers are independent and side-effect free, and the merged result is
sorted, so output is identical for any degree of parallelism.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import Weight, validate_weight
from .lv_algorithm import _lv_mu
from .modular_iteration import ModularContext, _bounded_depth, distinguished_depth

__all__ = [
    "SearchBox",
    "ScatterRecord",
    "default_bound",
    "enumerate_distinguished",
    "closed_family",
    "generate_family_set",
    "scatter_records",
    "write_scatter_csv",
    "write_scatter_svg",
]


def default_bound(n: int, k: int, p: int) -> int:
    """(n-1)(p^k - 1)/(p - 1): the largest entry of the scaled staircase,
    used as the default search bound."""
    if n <= 0:
        return 0
    return (n - 1) * (p**k - 1) // (p - 1)


@dataclass(frozen=True, slots=True)
class SearchBox:
    """Search parameters: weight length n, iteration budget k, maximal
    absolute entry, and the prime."""

    n: int
    k: int
    bound: int
    p: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.bound < 0:
            raise ValueError("n, k and bound must be >= 0")
        if self.p <= self.n:
            raise ValueError(
                f"prime {self.p} must exceed the weight length {self.n}"
            )


@dataclass(frozen=True, slots=True)
class ScatterRecord:
    """Leading floor(n/2) coordinates of a distinguished weight plus its
    minimal iteration depth."""

    coords: tuple[int, ...]
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        for a, b in zip(self.coords, self.coords[1:]):
            if a < b:
                raise ValueError(f"coords not weakly decreasing: {self.coords}")
        if self.coords and self.coords[-1] < 0:
            raise ValueError(f"coords must end >= 0: {self.coords}")
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")


def _mirror(coords: tuple[int, ...], n: int) -> Weight:
    """Anti-symmetric weight from its free coordinates."""
    mid = (0,) if n % 2 else ()
    return coords + mid + tuple(-c for c in reversed(coords))


def _root_distinguished(w: Weight, k: int, p: int, memo: dict) -> bool:
    """Depth-within-k test for a candidate, without memoizing the candidate
    itself (roots never repeat; their post-division children do)."""
    if not any(w):
        return True
    if k == 0 or len(w) == 1:
        return False
    n = len(w)
    prev = w[0]
    for v in w[1:]:
        if prev - v < 2:
            break
        prev = v
    else:
        # Single-column case: subtract the staircase, then divide.
        top = n - 1
        child = []
        for i, v in enumerate(w):
            d, r = divmod(v - top + 2 * i, p)
            if r:
                return False
            child.append(d)
        cd = _bounded_depth(tuple(child), k, p, memo)
        return cd is not None and cd < k
    for part in _lv_mu(w):
        child = []
        for e in part:
            d, r = divmod(e, p)
            if r:
                return False
            child.append(d)
        cd = _bounded_depth(tuple(child), k, p, memo)
        if cd is None or cd >= k:
            return False
    return True


def _scan(n: int, k: int, p: int, bound: int, x1_lo: int, x1_hi: int) -> list[Weight]:
    """All distinguished weights whose leading coordinate lies in
    [x1_lo, x1_hi]."""
    h = n // 2
    memo: dict = {}
    found: list[Weight] = []
    coords = [0] * h

    def descend(pos: int, cap: int):
        if pos == h:
            w = _mirror(tuple(coords), n)
            if _root_distinguished(w, k, p, memo):
                found.append(w)
            return
        lo, hi = (x1_lo, min(cap, x1_hi)) if pos == 0 else (0, cap)
        for v in range(hi, lo - 1, -1):
            coords[pos] = v
            descend(pos + 1, v)

    descend(0, bound)
    return found


def _scan_args(args) -> list[Weight]:
    return _scan(*args)


def _chunk_ranges(bound: int, h: int, pieces: int) -> list[tuple[int, int]]:
    """Split [0, bound] into contiguous leading-coordinate ranges of roughly
    equal candidate mass (mass of x1 grows like (x1+1)^(h-1))."""
    weights = [(x + 1) ** max(h - 1, 0) for x in range(bound + 1)]
    total = sum(weights)
    target = total / pieces
    ranges = []
    acc, lo = 0, 0
    for x in range(bound + 1):
        acc += weights[x]
        if acc >= target and len(ranges) < pieces - 1:
            ranges.append((lo, x))
            lo, acc = x + 1, 0
    if lo <= bound:
        ranges.append((lo, bound))
    return ranges


def enumerate_distinguished(box: SearchBox, jobs: int = 1) -> list[Weight]:
    """All anti-symmetric weights with entries in [-bound, bound] whose
    distinguished depth is <= k, sorted lexicographically descending.

    ``jobs`` > 1 splits the scan across processes; the result is identical
    for any jobs value.
    """
    h = box.n // 2
    if h == 0:
        # Lengths 0 and 1 admit a single candidate each.
        return [_mirror((), box.n)]
    n, k, p, bound = box.n, box.k, box.p, box.bound
    candidates = math.comb(bound + h, h)
    if jobs <= 1 or candidates < 50_000:
        found = _scan(n, k, p, bound, 0, bound)
    else:
        ranges = _chunk_ranges(bound, h, jobs * 8)
        tasks = [(n, k, p, bound, lo, hi) for lo, hi in ranges]
        found = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_args, tasks):
                found.extend(part)
    found.sort(reverse=True)
    return found


# Closed-form families for n <= 4 ---------------------------------------------

FAMILY_IDS = {2: ("A",), 3: ("A", "B"), 4: ("F1", "F2", "F3", "F4")}
_FAMILY_ARITY = {"A": 1, "B": 1, "F1": 1, "F2": 1, "F3": 2, "F4": 2}


def _geom(p: int, m: int) -> int:
    """1 + p + ... + p^(m-1) = (p^m - 1)/(p - 1)."""
    return (p**m - 1) // (p - 1)


def _exact_div(num: int, den: int) -> int:
    d, r = divmod(num, den)
    if r:
        raise ValueError(f"non-integral closed-form value {num}/{den}")
    return d


def _family_weight(n: int, family_id: str, params: tuple[int, ...], p: int):
    """Weight and stated iteration depth for one family member."""
    if family_id not in FAMILY_IDS.get(n, ()):
        raise ValueError(f"unknown family {family_id!r} for n={n}")
    if len(params) != _FAMILY_ARITY[family_id]:
        raise ValueError(
            f"family {family_id} takes {_FAMILY_ARITY[family_id]} "
            f"parameter(s), got {params}"
        )
    if any(x < 0 for x in params):
        raise ValueError(f"family parameters must be >= 0, got {params}")
    if n == 2:
        (m,) = params
        c = _geom(p, m)
        return (c, -c), m
    if n == 3:
        (m,) = params
        if family_id == "A":
            c = 2 * _geom(p, m)
            return (c, 0, -c), m
        x = _geom(p, m + 1) + _geom(p, m)
        return (x, 0, -x), m + 1
    m = params[0]
    if family_id == "F1":
        c = _geom(p, m)
        return (3 * c, c, -c, -3 * c), m
    if family_id == "F2":
        x = _geom(p, m + 1) + 2 * _geom(p, m)
        y = _geom(p, m)
        return (x, y, -y, -x), m + 1
    k = params[1]
    if family_id == "F3":
        x = _geom(p, m + k + 1) + _geom(p, k + 1) + _geom(p, k)
        y = _geom(p, k)
        return (x, y, -y, -x), m + k + 1
    # F4: requires m >= 1; the closed form splits on the parity of m.
    if m < 1:
        raise ValueError("F4 requires m >= 1")
    den = 2 * (p - 1)
    if m % 2 == 0:
        x = _exact_div(p ** (m + k) + 2 * p ** (k + 1) + 3 * p**k - 6, den)
        y = _exact_div(p ** (m + k) + p**k - 2, den)
    else:
        x = _exact_div(p ** (m + k) + p ** (k + 1) + 4 * p**k - 6, den)
        y = _exact_div(p ** (m + k) + p ** (k + 1) - 2, den)
    return (x, y, -y, -x), m + k


def closed_family(
    n: int, family_id: str, params, ctx: ModularContext
) -> Weight:
    """One member of a closed-form family, forward-verified.

    The member's distinguished depth is recomputed by iteration and must
    equal the stated count for its parameters; parameters that fail are
    rejected rather than guessed around.
    """
    if n not in FAMILY_IDS:
        raise ValueError(f"closed families exist only for n in {{2, 3, 4}}")
    w, depth = _family_weight(n, family_id, tuple(params), ctx.p)
    actual = distinguished_depth(w, ctx, cap=depth)
    if actual != depth:
        raise ValueError(
            f"family {family_id} params {tuple(params)}: expected depth "
            f"{depth}, iteration gives {actual}"
        )
    return w


def generate_family_set(n: int, ctx: ModularContext, max_k: int) -> list[Weight]:
    """Every family member whose stated depth is <= max_k, deduplicated and
    sorted descending."""
    if max_k < 0:
        raise ValueError(f"max_k must be >= 0, got {max_k}")
    weights: set[Weight] = set()
    if n == 2:
        for m in range(max_k + 1):
            weights.add(closed_family(2, "A", (m,), ctx))
    elif n == 3:
        for m in range(max_k + 1):
            weights.add(closed_family(3, "A", (m,), ctx))
        for m in range(max_k):
            weights.add(closed_family(3, "B", (m,), ctx))
    elif n == 4:
        for m in range(max_k + 1):
            weights.add(closed_family(4, "F1", (m,), ctx))
        for m in range(max_k):
            weights.add(closed_family(4, "F2", (m,), ctx))
        for total in range(1, max_k + 1):  # depth m + k + 1 = total
            for k in range(total):
                weights.add(closed_family(4, "F3", (total - 1 - k, k), ctx))
        for total in range(1, max_k + 1):  # depth m + k = total, m >= 1
            for m in range(1, total + 1):
                weights.add(closed_family(4, "F4", (m, total - m), ctx))
    else:
        raise ValueError(f"closed families exist only for n in {{2, 3, 4}}")
    return sorted(weights, reverse=True)


# Scatter export ---------------------------------------------------------------

def scatter_records(
    weights, ctx: ModularContext, cap: int
) -> list[ScatterRecord]:
    """One record per weight: its leading floor(n/2) coordinates and its
    minimal depth.  Raises if some weight is not distinguished within cap."""
    records = []
    for w in weights:
        w = validate_weight(w)
        depth = distinguished_depth(w, ctx, cap)
        if depth is None:
            raise ValueError(
                f"weight {w} is not distinguished within cap {cap}"
            )
        records.append(ScatterRecord(w[: len(w) // 2], depth))
    return records


def write_scatter_csv(records, path, ncoords: int | None = None) -> None:
    """Canonical CSV: header x1,...,xh,depth; rows sorted descending by
    coordinates; decimal integers."""
    records = list(records)
    if ncoords is None:
        if not records:
            raise ValueError("ncoords is required for an empty record list")
        ncoords = len(records[0].coords)
    header = ",".join([f"x{i + 1}" for i in range(ncoords)] + ["depth"])
    lines = [header]
    for rec in sorted(records, key=lambda r: r.coords, reverse=True):
        if len(rec.coords) != ncoords:
            raise ValueError(
                f"record has {len(rec.coords)} coordinates, expected {ncoords}"
            )
        lines.append(",".join(str(v) for v in (*rec.coords, rec.depth)))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def write_scatter_svg(records, path, p: int, size: int = 640) -> None:
    """Scatter plot of the first two coordinates with both axes log-scaled
    base p.  Zero has no logarithm, so it is drawn in a dedicated origin
    band one slot left of/below p^0.  Presentation plumbing only; the CSV
    is the canonical artifact.
    """
    records = list(records)
    margin = 48.0
    span = size - 2 * margin

    def logp(v: int) -> float:
        return math.log(v, p) if v >= 1 else -1.0

    xs = [logp(r.coords[0]) if r.coords else -1.0 for r in records]
    ys = [logp(r.coords[1]) if len(r.coords) > 1 else -1.0 for r in records]
    top = max(xs + ys + [1.0])
    scale = span / (top + 1.0)

    def pos(v: float) -> float:
        return (v + 1.0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f"<!-- log base {p} axes; the band at the origin holds zero values, "
        "whose logarithm is undefined -->",
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{margin}" y1="{size - margin}" x2="{size - margin}" '
        f'y2="{size - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{size - margin}" stroke="black"/>',
    ]
    e = 0
    while e <= top:
        t = pos(float(e))
        x = margin + t
        y = size - margin - t
        parts.append(
            f'<line x1="{x:.2f}" y1="{size - margin}" x2="{x:.2f}" '
            f'y2="{size - margin + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{size - margin + 18}" font-size="10" '
            f'text-anchor="middle">{p}^{e}</text>'
        )
        parts.append(
            f'<line x1="{margin - 5}" y1="{y:.2f}" x2="{margin}" '
            f'y2="{y:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{margin - 8}" y="{y + 3:.2f}" font-size="10" '
            f'text-anchor="end">{p}^{e}</text>'
        )
        e += 1
    for rx, ry in zip(xs, ys):
        cx = margin + pos(rx)
        cy = size - margin - pos(ry)
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="2" fill="steelblue"/>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(parts) + "\n")
