"""Shortening machinery for availability codes.

A local check is a dual codeword of weight at most r+1; its support
minus any one coordinate is a recovering set for that coordinate.  The
greedy set builder accumulates s linearly independent local checks,
preferring checks that overlap the already-covered coordinates, and
derives a coordinate set I whose closure contains every covered
coordinate.  Plugging |I| and |Cl(I)| into generic k*/d* oracles yields
the shortening bounds on dimension and distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, List, Optional, Sequence, Set, Tuple

from .constructions import LinearCode
from .linalg import Matrix, nullspace, rref


@dataclass
class LocalCheckSet:
    """Dual codewords of weight <= r+1, deduplicated, leading entry 1."""

    field: object
    n: int
    r: int
    checks: List[Tuple]

    def supports(self) -> List[Tuple[int, ...]]:
        return [tuple(i for i, x in enumerate(h) if x != 0) for h in self.checks]


def enumerate_local_checks(code: LinearCode, r: int,
                           budget: int = 10**8) -> LocalCheckSet:
    """All dual codewords of weight <= r+1, via per-support nullspaces."""
    n, f = code.n, code.field
    w = min(r + 1, n)
    cost = comb(n, w) * (r + 1) ** 3
    if cost > budget:
        raise ValueError(f"local-check enumeration cost {cost} exceeds budget {budget}")
    G = code.generator()
    seen = set()
    checks: List[Tuple] = []
    for support in combinations(range(n), w):
        cols = Matrix.from_rows(f, [[G.data[i][j] for j in support]
                                    for i in range(G.rows)], w)
        for v in nullspace(cols):
            h = [f.zero] * n
            for j, x in zip(support, v):
                h[j] = x
            # normalize: first nonzero entry scaled to 1
            lead = next(x for x in h if x != f.zero)
            if lead != f.one:
                inv = f.inv(lead)
                h = [f.mul(inv, x) for x in h]
            key = tuple(h)
            if key not in seen:
                seen.add(key)
                checks.append(key)
    return LocalCheckSet(f, n, r, checks)


def closure(code: LinearCode, I: Sequence[int]) -> Set[int]:
    """Coordinates determined by the values on I (subcode method)."""
    I = sorted(set(I))
    f = code.field
    G = code.generator()
    if G.rows == 0:
        return set(range(code.n))
    # messages u with (uG) vanishing on I
    restricted = Matrix.from_rows(f, [[G.data[i][j] for i in range(G.rows)]
                                      for j in I], G.rows) if I else None
    if restricted is None:
        null_msgs = [list(row) for row in Matrix.identity(f, G.rows).data]
    else:
        null_msgs = nullspace(restricted)
    if not null_msgs:
        return set(range(code.n))
    sub = Matrix.from_rows(f, null_msgs, G.rows).matmul(G)
    out = set(I)
    for j in range(code.n):
        if all(sub.data[i][j] == f.zero for i in range(sub.rows)):
            out.add(j)
    return out


@dataclass
class ShorteningResult:
    X: List[Tuple]
    I: List[int]
    J: List[int]
    s: int
    s1: int
    j: int
    l: int


def build_shortening_set(checks: LocalCheckSet, s: int, n: int, r: int) -> ShorteningResult:
    """Greedy accumulation of s independent local checks and the set I.

    Checks are picked by largest overlap with the covered set (ties by
    lowest index).  A zero-overlap pick starts a fresh component: the
    step counters (s1, j) are recorded at its first occurrence.  I is
    the covered set minus the pivot columns of the accumulated check
    matrix, padded up to 1+(r-1)s coordinates; all removed coordinates
    are recoverable from I through the checks, so Cl(I) covers J.
    """
    if s < 1:
        raise ValueError("need s >= 1")
    if not checks.checks:
        raise ValueError("no local checks available")
    remaining = list(range(len(checks.checks)))
    supports = checks.supports()

    first = remaining.pop(0)
    X = [checks.checks[first]]
    J: Set[int] = set(supports[first])
    x_rank = 1
    l = 1
    i = 1
    s1 = 0
    j_rec = 0
    recorded = False

    while i < s:
        if not remaining:
            raise ValueError(f"fewer than s={s} independent local checks; "
                             "input is not a valid (r,t)-LRC dual set at this r")
        best = max(remaining, key=lambda idx: (len(J & set(supports[idx])), -idx))
        overlap = len(J & set(supports[best]))
        remaining.remove(best)
        if overlap == 0:
            if not recorded:
                j_rec = l
                s1 = i
                recorded = True
            X.append(checks.checks[best])
            J |= set(supports[best])
            x_rank += 1
            i += 1
        else:
            X.append(checks.checks[best])
            J |= set(supports[best])
            new_rank = rref(Matrix.from_rows(checks.field, list(X), checks.n))[1]
            if new_rank > x_rank:
                x_rank = new_rank
                i += 1
        l += 1

    Xmat = Matrix.from_rows(checks.field, list(X), checks.n)
    _, rk, pivots = rref(Xmat)
    assert rk == s, "accumulated checks should span an s-dimensional space"
    I = sorted(J - set(pivots))
    target = 1 + (r - 1) * s
    if len(I) < target:
        # fresh (uncovered) coordinates first so the closure keeps growing
        fresh = [c for c in range(n) if c not in J]
        fallback = [c for c in range(n) if c in J and c not in I]
        for c in fresh + fallback:
            if len(I) >= target:
                break
            I.append(c)
        I.sort()
    return ShorteningResult(X=list(X), I=I, J=sorted(J), s=s, s1=s1, j=j_rec, l=l)


# -- oracles -----------------------------------------------------------------

def singleton_k(q: int, n: int, d: int) -> int:
    return n - d + 1


def singleton_d(q: int, n: int, k: int) -> int:
    return n - k + 1


def shortened_k_bound(size_i: int, size_cl: int, n: int, d: int,
                      q: int = 2, k_oracle: Callable = singleton_k) -> int:
    """Dimension bound |I| + k*(q, n - |Cl(I)|, d)."""
    if size_cl > n - d:
        raise ValueError("need |Cl(I)| <= n - d")
    if size_i > size_cl:
        raise ValueError("need |I| <= |Cl(I)|")
    return size_i + k_oracle(q, n - size_cl, d)


@dataclass
class ShorteningBounds:
    k_upper: Optional[int]
    d_upper: Optional[int]
    k_s: Optional[int]   # minimizing s, None when no feasible s exists
    d_s: Optional[int]


def availability_shortening_bounds(n: int, k: int, d: int, r: int, q: int = 2,
                                   k_oracle: Callable = singleton_k,
                                   d_oracle: Callable = singleton_d) -> ShorteningBounds:
    """Minimize the per-s shortening bounds over all feasible s >= 1.

    Requires r >= 2 (for r = 1 the bound degenerates) and availability
    t >= 2 of the underlying code.  When no s is feasible the plain
    oracle values at (n, k, d) are returned and the minimizers are None.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    if n < 1 or k < 1 or d < 1:
        raise ValueError("n, k, d must be positive")

    k_upper, k_s = None, None
    s = 1
    while s * r + 1 <= n - d:
        np = n - 1 - s * r
        if np >= 1 and np >= d - 1:
            val = 1 + (r - 1) * s + k_oracle(q, np, d)
            if k_upper is None or val < k_upper:
                k_upper, k_s = val, s
        s += 1

    d_upper, d_s = None, None
    s = 1
    while 1 + (r - 1) * s < k:
        np = n - 1 - s * r
        kp = k - 1 - (r - 1) * s
        if np >= kp >= 1:
            val = d_oracle(q, np, kp)
            if d_upper is None or val < d_upper:
                d_upper, d_s = val, s
        s += 1

    if k_upper is None:
        k_upper = k_oracle(q, n, d)
    if d_upper is None:
        d_upper = d_oracle(q, n, k)
    return ShorteningBounds(k_upper, d_upper, k_s, d_s)
