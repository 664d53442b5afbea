"""Ground-truth verification tools.

Everything here is an independent oracle: exhaustive minimum distance,
backtracking availability certification, erasure-pattern rank checks,
and seeded Monte-Carlo erasure trials against the composite decoder.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import ceil, comb
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .bounds import rate_cap
from .constructions import (CompositeCode, LinearCode, composite_erasure_decode,
                            encode_composite, survivor_rank)
from .linalg import Matrix, rref
from .shortening import enumerate_local_checks


def min_distance(code: LinearCode, max_enumeration: int = 2**22) -> int:
    """Exact minimum Hamming weight by exhaustive codeword enumeration."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if code.field.q**code.k > max_enumeration:
        raise ValueError("codeword enumeration exceeds the budget")
    z = code.field.zero
    best = None
    for cw in code.codewords():
        w = sum(1 for x in cw if x != z)
        if w and (best is None or w < best):
            best = w
    return best


@dataclass
class AvailabilityReport:
    ok: bool
    recovering_sets: Dict[int, List[Set[int]]]
    failed_coordinates: List[int]


def verify_availability(code: LinearCode, r: int, t: int,
                        budget: int = 10**8) -> AvailabilityReport:
    """Search t pairwise disjoint recovering sets of size <= r per coordinate."""
    checks = enumerate_local_checks(code, r, budget)
    z = code.field.zero
    per_coord: Dict[int, List[List[int]]] = {i: [] for i in range(code.n)}
    for h in checks.checks:
        supp = [i for i, x in enumerate(h) if x != z]
        for i in supp:
            per_coord[i].append([j for j in supp if j != i])

    report = AvailabilityReport(True, {}, [])
    for i in range(code.n):
        candidates = per_coord[i]
        found = _disjoint_sets(candidates, t)
        if found is None:
            report.ok = False
            report.failed_coordinates.append(i)
        else:
            report.recovering_sets[i] = [set(s) for s in found]
    return report


def _disjoint_sets(candidates: List[List[int]], t: int) -> Optional[List[List[int]]]:
    """Backtracking search for t pairwise disjoint candidate sets."""
    chosen: List[List[int]] = []
    used: Set[int] = set()

    def rec(start: int) -> bool:
        if len(chosen) == t:
            return True
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            if used.isdisjoint(c):
                chosen.append(c)
                used.update(c)
                if rec(idx + 1):
                    return True
                chosen.pop()
                used.difference_update(c)
        return False

    return chosen if rec(0) else None


def erasure_correctable(code: LinearCode, erased: Sequence[int]) -> bool:
    """True iff no nonzero codeword is supported inside the erased set."""
    erased = sorted(set(erased))
    if not erased:
        return True
    f = code.field
    # full-rank parity submatrix on the erased columns <=> correctable
    H = code.parity
    sub = Matrix.from_rows(f, [[H.data[i][j] for j in erased]
                               for i in range(H.rows)], len(erased))
    return rref(sub)[1] == len(erased)


def partial_block_rank_bound(e: int, r: int, t: int) -> int:
    """Lower bound on the rank of an e-column submatrix of a WZL parity."""
    if r < 2:
        raise ValueError("need r >= 2")
    if e < 0:
        raise ValueError("need e >= 0")
    if e <= t:
        return e
    return max(ceil((1 - rate_cap(r - 1, t)) * e), t)


def concatenated_dimension(n: int, d: int, r: int, t: int) -> int:
    """Guaranteed dimension of the concatenated code at target distance d."""
    n_i = comb(r + t, t)
    k_i = n_i * r // (r + t)
    if n % n_i != 0:
        raise ValueError("n must be a multiple of the inner length")
    if not (1 <= d <= n):
        raise ValueError("need 1 <= d <= n")
    full = (n - d + 1) // n_i
    e_i = (n - d + 1) % n_i
    return k_i * full + k_i - e_i + partial_block_rank_bound(e_i, r, t)


@dataclass
class ErasureTrialStats:
    trials: int
    successes: int
    min_survivor_rank: int
    seed: int
    adversarial_success: Optional[bool] = None

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0


def whole_block_pattern(code: CompositeCode, e: int) -> List[int]:
    """Adversarial pattern covering whole inner blocks first."""
    if code.inner_n is None:
        raise ValueError("not a concatenated code")
    full, rest = divmod(e, code.inner_n)
    pattern = list(range(full * code.inner_n))
    pattern += list(range(full * code.inner_n, full * code.inner_n + rest))
    return pattern


def _trial(code: CompositeCode, erased: Sequence[int], rng: random.Random,
           full_decode: bool) -> Tuple[bool, int]:
    survivors = [j for j in range(code.n) if j not in set(erased)]
    rank = survivor_rank(code, survivors)
    if not full_decode:
        return rank >= code.k, rank
    message = [code.tower.rand(rng) for _ in range(code.k)]
    cw = encode_composite(code, message)
    decoded = composite_erasure_decode(code, [(j, cw[j]) for j in survivors])
    ok = decoded is not None and decoded == message
    return ok, rank

def erasure_monte_carlo(code: CompositeCode, e: int, trials: int, seed: int,
                        decode_every: int = 25) -> ErasureTrialStats:
    """Random e-erasure trials; every decode_every-th trial runs the full
    interpolation round-trip, the rest use the survivor-rank criterion
    (which the decoder succeeds on exactly)."""
    if not (0 <= e < code.n):
        raise ValueError("need 0 <= e < n")
    rng = random.Random(seed)
    successes = 0
    min_rank = None
    for trial in range(trials):
        erased = rng.sample(range(code.n), e)
        ok, rank = _trial(code, erased, rng, full_decode=(trial % decode_every == 0))
        successes += ok
        min_rank = rank if min_rank is None else min(min_rank, rank)
    stats = ErasureTrialStats(trials, successes, min_rank if min_rank is not None else code.n,
                              seed)
    if code.kind == "concatenated":
        ok, rank = _trial(code, whole_block_pattern(code, e), rng, full_decode=True)
        stats.adversarial_success = ok
        stats.min_survivor_rank = min(stats.min_survivor_rank, rank)
    return stats
