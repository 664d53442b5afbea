"""Distance and rate bounds for (r, t)-availability codes.

Includes the Wang-Rawat and Tamo-Barg-Frolov distance bounds, the
Yaakobi alphabet-dependent bound, the Singleton-instantiated shortening
bound, the product-form rate cap, the transcendental expansion solver
for random biregular graphs, and the asymptotic rate-vs-distance curves
for all four families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log2
from typing import Callable, List, Optional

from .shortening import singleton_d


def rate_cap(r: int, t: int) -> Fraction:
    """Product-form upper bound on the rate of an (r, t)-availability code."""
    if r < 1 or t < 0:
        raise ValueError("need r >= 1 and t >= 0")
    out = Fraction(1)
    for i in range(1, t + 1):
        out *= Fraction(i * r, i * r + 1)
    return out


def wang_rawat_distance(n: int, k: int, r: int, t: int) -> int:
    """d <= n - k + 2 - ceil((t(k-1)+1) / (t(r-1)+1))."""
    if t < 1:
        raise ValueError("need t >= 1")
    return n - k + 2 - ceil(Fraction(t * (k - 1) + 1, t * (r - 1) + 1))


def tbf_distance(n: int, k: int, r: int, t: int) -> int:
    """d <= n - sum_{i=0}^{t} floor((k-1) / r^i)."""
    if t < 0:
        raise ValueError("need t >= 0")
    return n - sum((k - 1) // r**i for i in range(t + 1))


def yaakobi_distance(n: int, k: int, r: int, t: int, q: int = 2,
                     d_oracle: Callable = singleton_d) -> int:
    """Alphabet-dependent bound: minimize d*(q, n-B, k-A) over removals.

    A = sum((r-1) y_j) + x and B = sum(r y_j) + x over x removed groups
    with multiplicities y_j in [1, t]; only the sum of the y_j matters,
    so the grid collapses to (x, sum).
    """
    if t < 1:
        raise ValueError("need t >= 1")
    best = None
    x_max = ceil(Fraction(k - 1, (r - 1) * t + 1))
    for x in range(1, max(x_max, 1) + 1):
        for ysum in range(x, t * x + 1):
            a = (r - 1) * ysum + x
            b = r * ysum + x
            if a >= k or n - b < k - a:
                continue
            val = d_oracle(q, n - b, k - a)
            if best is None or val < best:
                best = val
    if best is None:
        best = d_oracle(q, n, k)
    return best


def shortening_singleton_distance(n: int, k: int, r: int) -> int:
    """d <= n - (k-1) - floor((k-2)/(r-1)), the Singleton-instantiated form."""
    if r < 2 or k < 2:
        raise ValueError("need r >= 2 and k >= 2")
    return n - (k - 1) - (k - 2) // (r - 1)


def griesmer_d(q: int, n: int, k: int) -> int:
    """Largest d with sum_{i<k} ceil(d/q^i) <= n."""
    if k < 1:
        raise ValueError("need k >= 1")
    d = 0
    while sum(-(-(d + 1) // q**i) for i in range(k)) <= n:
        d += 1
    return d


def griesmer_k(q: int, n: int, d: int) -> int:
    """Largest k with sum_{i<k} ceil(d/q^i) <= n."""
    k = 0
    total = 0
    while True:
        term = -(-d // q**k)
        if total + term > n:
            return k
        total += term
        k += 1


# ---------------------------------------------------------------------------
# expansion of random (t, r+1)-biregular graphs
# ---------------------------------------------------------------------------

def binary_entropy(x: float) -> float:
    if x < 0.0 or x > 1.0:
        raise ValueError("entropy argument outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * log2(x) - (1.0 - x) * log2(1.0 - x)


def _expansion_residual(delta: float, gamma: float, t: int, r: int) -> float:
    c = gamma * (r + 1)
    arg = min(delta * c, 1.0)
    return ((t - 1) / t * binary_entropy(delta)
            - 1.0 / (r + 1) * binary_entropy(arg)
            - delta * c * binary_entropy(min(1.0 / c, 1.0)))


def expansion_delta(gamma: float, t: int, r: int, tol: float = 1e-12) -> float:
    """Positive root delta of the biregular-ensemble expansion equation.

    For gamma at the lower endpoint 1/(r+1) the residual is positive on
    (0, 1) and vanishes only at delta = 1.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    lo_gamma = 1.0 / (r + 1)
    hi_gamma = 1.0 - 1.0 / t
    if not (lo_gamma - 1e-15 <= gamma < hi_gamma):
        raise ValueError("gamma outside [1/(r+1), 1 - 1/t)")
    f = lambda d: _expansion_residual(d, gamma, t, r)
    lo = 1e-9
    hi = 1.0
    f_hi = f(hi)
    if abs(f_hi) <= tol:
        # residual vanishes at the right endpoint (boundary gamma)
        if f((lo + hi) / 2) > 0.0:
            return 1.0
    # the delta*log(1/delta) term has a positive coefficient for any
    # admissible gamma, so the residual is positive for small enough delta;
    # shrink until the bracket opens (the root itself can be tiny)
    while f(lo) <= 0.0 and lo > 1e-280:
        lo *= 1e-4
    if f(lo) <= 0.0:
        # gamma so close to 1 - 1/t that the positive root underflows
        # double precision; 0 is the exactly-representable limit
        return 0.0
    if f_hi > tol:
        raise ValueError("no sign change bracket found (degenerate parameters)")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fm = f(mid)
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
    root = (lo + hi) / 2.0
    if abs(f(root)) > tol:
        raise ValueError("bisection failed to reach the residual tolerance")
    return root


def gamma_for_delta(delta: float, t: int, r: int) -> float:
    """Largest gamma in [1/(r+1), 1-1/t) sustaining relative distance delta."""
    if not (0.0 < delta < 1.0):
        raise ValueError("delta must lie in (0, 1)")
    lo = 1.0 / (r + 1)
    hi = (1.0 - 1.0 / t) - 1e-12

    def ok(g: float) -> bool:
        try:
            return expansion_delta(g, t, r) >= delta
        except ValueError:
            return False

    if not ok(lo):
        return lo
    if ok(hi):
        return hi
    for _ in range(80):
        mid = (lo + hi) / 2.0
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# rate-vs-distance curves
# ---------------------------------------------------------------------------

@dataclass
class CurveRow:
    delta: float
    upper_new: float
    upper_tbf: float
    lower_expander: float
    lower_concat: float
    rate_cap: float


def _clamp01(x: float) -> float:
    return 0.0 if x < 0.0 else (1.0 if x > 1.0 else x)


def expander_rate(delta: float, t: int, r: int) -> float:
    """1 - t/(r+1) - max(delta (1 - t gamma), 0) at the best sustainable gamma."""
    base = 1.0 - t / (r + 1)
    if delta <= 0.0:
        return base
    gamma = 1.0 / (r + 1) if delta >= 1.0 else gamma_for_delta(delta, t, r)
    return base - max(delta * (1.0 - t * gamma), 0.0)


def rate_curves(r: int, t: int, grid: int) -> List[CurveRow]:
    """Uniform delta grid of all four asymptotic curves plus the rate cap."""
    if grid < 2:
        raise ValueError("need at least 2 grid points")
    if r < 2 or t < 2:
        raise ValueError("need r >= 2 and t >= 2")
    cap = float(rate_cap(r, t))
    tbf_denom = sum(r**-i for i in range(t + 1))
    rows = []
    for g in range(grid):
        delta = g / (grid - 1)
        rows.append(CurveRow(
            delta=delta,
            upper_new=_clamp01((r - 1) / r * (1.0 - delta)),
            upper_tbf=_clamp01((1.0 - delta) / tbf_denom),
            lower_expander=_clamp01(expander_rate(delta, t, r)),
            lower_concat=_clamp01(r / (r + t) * (1.0 - delta)),
            rate_cap=cap,
        ))
    return rows


def concat_expander_crossover(rows: List[CurveRow]) -> Optional[float]:
    """First delta where the expander lower bound overtakes the concatenated one."""
    prev = None
    for row in rows:
        diff = row.lower_concat - row.lower_expander
        if prev is not None and prev > 0.0 >= diff:
            return row.delta
        prev = diff
    return None
