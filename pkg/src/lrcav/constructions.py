"""Code builders: WZL inner codes, expander-based and concatenated composites.

The WZL family is realized as a subset-incidence code: coordinates are
the t-subsets of [r+t], parity checks are indexed by (t-1)-subsets, each
check covering the t-subsets that contain it.  This gives n = C(r+t, t),
dimension n*r/(r+t), distance t+1, and explicit disjoint recovering sets
for every coordinate.

Composite codes layer a Gabidulin code over a base-field linear map:
a message is Gabidulin-encoded to n_G extension symbols, then expanded
to n coordinates by a full-row-rank generator over the base field.  By
linearity every coordinate is the evaluation of the message polynomial
at a base-field combination of the original evaluation points, so
erasure decoding reduces to picking k independent surviving points and
interpolating.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .galois import BaseField, ExtElement, FieldTower
from .gabidulin import GabidulinSpec, default_spec, gab_encode, moore_interpolate
from .linalg import Gf2RankTracker, Matrix, nullspace, rank_over_base, rref


@dataclass
class LinearCode:
    """Length-n linear code given by a (possibly redundant) parity matrix."""

    field: BaseField
    n: int
    k: int
    parity: Matrix
    claimed_r: Optional[int] = None
    claimed_t: Optional[int] = None
    _generator: Optional[Matrix] = None

    @classmethod
    def from_parity(cls, f: BaseField, parity: Matrix, claimed_r=None, claimed_t=None):
        n = parity.cols
        k = n - rref(parity)[1]
        return cls(f, n, k, parity, claimed_r, claimed_t)

    def generator(self) -> Matrix:
        """Systematic (rref) generator matrix, k x n."""
        if self._generator is None:
            basis = nullspace(self.parity)
            G = Matrix.from_rows(self.field, basis, self.n) if basis else \
                Matrix.zeros(self.field, 0, self.n)
            self._generator = rref(G)[0] if basis else G
        return self._generator

    def codewords(self):
        """All q^k codewords (exhaustive; caller owns the budget)."""
        from itertools import product
        Gt = self.generator().transpose()
        for msg in product(range(self.field.q), repeat=self.k):
            yield Gt.mul_vec(list(msg))


def build_wzl(r: int, t: int, size_cap: int = 10**5) -> LinearCode:
    """Binary code with availability t and locality r via subset incidence."""
    if r < 1 or t < 1:
        raise ValueError("need r >= 1 and t >= 1")
    n = comb(r + t, t)
    if n > size_cap:
        raise ValueError(f"n = C(r+t, t) = {n} exceeds the size cap {size_cap}")
    universe = list(range(r + t))
    coords = list(combinations(universe, t))
    index = {c: i for i, c in enumerate(coords)}
    f2 = BaseField(1)
    rows = []
    for s in combinations(universe, t - 1):
        row = [0] * n
        rest = [v for v in universe if v not in s]
        for v in rest:
            row[index[tuple(sorted(s + (v,)))]] = 1
        rows.append(row)
    parity = Matrix.from_rows(f2, rows, n)
    code = LinearCode.from_parity(f2, parity, claimed_r=r, claimed_t=t)
    return code


@dataclass
class BipartiteGraph:
    """(t, r+1)-biregular bipartite graph; adjacency by left vertex."""

    n_left: int
    n_right: int
    adj: List[List[int]]

    def right_adjacency(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.n_right)]
        for v, nbrs in enumerate(self.adj):
            for c in nbrs:
                out[c].append(v)
        return out

    def neighbors(self, left_set: Sequence[int]) -> set:
        out = set()
        for v in left_set:
            out.update(self.adj[v])
        return out

    def is_simple(self) -> bool:
        return all(len(set(nbrs)) == len(nbrs) for nbrs in self.adj)

    def is_simple_girth_gt4(self) -> bool:
        """No repeated edges and no two left vertices sharing >= 2 rights."""
        sets = []
        for nbrs in self.adj:
            s = set(nbrs)
            if len(s) != len(nbrs):
                return False
            sets.append(s)
        for a, b in combinations(range(self.n_left), 2):
            if len(sets[a] & sets[b]) >= 2:
                return False
        return True


def sample_biregular(n: int, t: int, rp1: int, seed: int,
                     max_tries: int = 10**4, min_girth: int = 6) -> BipartiteGraph:
    """Configuration-model sample, rejected until simple with girth > 4.

    min_girth=6 (the default) demands no 4-cycles; min_girth=4 only
    rejects parallel edges.  Some dense parameter sets admit no 4-cycle
    free graph at all (n * C(t,2) left pair slots vs C(n_right, 2)
    distinct right pairs), which is what the relaxed setting is for.
    """
    if (n * t) % rp1 != 0:
        raise ValueError("r+1 must divide n*t")
    if min_girth not in (4, 6):
        raise ValueError("min_girth must be 4 or 6")
    n_right = n * t // rp1
    rng = random.Random(seed)
    left_stubs = [v for v in range(n) for _ in range(t)]
    right_stubs = [c for c in range(n_right) for _ in range(rp1)]
    for _ in range(max_tries):
        rng.shuffle(right_stubs)
        adj: List[List[int]] = [[] for _ in range(n)]
        for v, c in zip(left_stubs, right_stubs):
            adj[v].append(c)
        g = BipartiteGraph(n, n_right, [sorted(a) for a in adj])
        if min_girth == 6:
            if g.is_simple_girth_gt4():
                return g
        elif g.is_simple():
            return g
    raise RuntimeError(f"no girth>={min_girth} simple sample in {max_tries} tries; "
                       "parameters too dense")


def check_expansion(g: BipartiteGraph, alpha, gamma,
                    subset_budget: int = 24) -> bool:
    """Exhaustively test |Gamma(V')| > t*gamma*|V'| for all |V'| <= alpha*n."""
    max_size = int(alpha * g.n_left)
    if max_size > subset_budget:
        raise ValueError("subset size exceeds the exhaustive-check budget")
    t = len(g.adj[0]) if g.adj else 0
    for size in range(1, max_size + 1):
        for sub in combinations(range(g.n_left), size):
            if len(g.neighbors(sub)) <= t * gamma * size:
                return False
    return True


def build_expander_parity(g: BipartiteGraph, base: BaseField, seed: int) -> Matrix:
    """One row per right vertex, random nonzero entries on incident lefts."""
    rng = random.Random(seed)
    rows = []
    for nbrs in g.right_adjacency():
        row = [0] * g.n_left
        for v in nbrs:
            row[v] = base.rand_nonzero(rng)
        rows.append(row)
    return Matrix.from_rows(base, rows, g.n_left)


@dataclass
class CompositeCode:
    """Gabidulin outer code pushed through a base-field generator map."""

    kind: str  # "expander" | "concatenated"
    tower: FieldTower
    gab: GabidulinSpec
    outer_map: Matrix          # n_G x n over the base field, full row rank
    beta: List[ExtElement]     # per coordinate: combination of eval points
    inner_n: Optional[int] = None
    inner_k: Optional[int] = None
    blocks: Optional[int] = None

    @property
    def n(self) -> int:
        return self.outer_map.cols

    @property
    def k(self) -> int:
        return self.gab.k

    @property
    def n_g(self) -> int:
        return self.gab.n


def _beta_points(tower: FieldTower, outer_map: Matrix,
                 eval_points: Sequence[ExtElement]) -> List[ExtElement]:
    beta = []
    for j in range(outer_map.cols):
        acc = tower.zero
        for i in range(outer_map.rows):
            lam = outer_map.data[i][j]
            if lam:
                acc = tower.add(acc, tower.scalar_mul(lam, eval_points[i]))
        beta.append(acc)
    return beta


def assemble_expander_code(tower: FieldTower, parity: Matrix, k: int) -> CompositeCode:
    """Composite of a Gabidulin code with the code defined by an expander parity."""
    n = parity.cols
    rk = rref(parity)[1]
    if rk != parity.rows:
        raise ValueError("expander parity matrix is rank deficient")
    n_g = n - rk
    if n_g > tower.m:
        raise ValueError("n_G exceeds the extension degree m")
    if k > n_g:
        raise ValueError("k exceeds n_G")
    basis = nullspace(parity)
    outer_map = rref(Matrix.from_rows(tower.base, basis, n))[0]
    gab = default_spec(tower, n_g, k)
    beta = _beta_points(tower, outer_map, gab.eval_points)
    return CompositeCode("expander", tower, gab, outer_map, beta)


def wzl_systematic_generator(r: int, t: int) -> Tuple[Matrix, int, int]:
    """Systematic generator of the WZL(r, t) code; returns (G, n_I, k_I)."""
    code = build_wzl(r, t)
    return code.generator(), code.n, code.k


def assemble_concatenated(tower: FieldTower, r: int, t: int, blocks: int,
                          k: int) -> CompositeCode:
    """Gabidulin outer code with per-group binary WZL inner encoding."""
    if tower.base.w != 1:
        raise ValueError("concatenated construction needs a GF(2) base field")
    if blocks < 1:
        raise ValueError("need at least one block")
    g_inner, n_i, k_i = wzl_systematic_generator(r, t)
    n_g = blocks * k_i
    if n_g > tower.m:
        raise ValueError("n_G = blocks*k_I exceeds the extension degree m")
    if k > n_g:
        raise ValueError("k exceeds n_G")
    n = blocks * n_i
    f2 = tower.base
    outer = Matrix.zeros(f2, n_g, n)
    for b in range(blocks):
        for i in range(k_i):
            for j in range(n_i):
                outer.data[b * k_i + i][b * n_i + j] = g_inner.data[i][j]
    gab = default_spec(tower, n_g, k)
    beta = _beta_points(tower, outer, gab.eval_points)
    return CompositeCode("concatenated", tower, gab, outer, beta,
                         inner_n=n_i, inner_k=k_i, blocks=blocks)


def encode_composite(code: CompositeCode, message: Sequence[ExtElement]) -> List[ExtElement]:
    """Gabidulin-encode, then apply the outer map coefficient-wise."""
    tower = code.tower
    cw = gab_encode(code.gab, message)
    out = []
    for j in range(code.n):
        acc = tower.zero
        for i in range(code.n_g):
            lam = code.outer_map.data[i][j]
            if lam:
                acc = tower.add(acc, tower.scalar_mul(lam, cw[i]))
        out.append(acc)
    return out


def select_independent_survivors(code: CompositeCode,
                                 indices: Sequence[int]) -> List[int]:
    """Greedy (by index) subset of survivors with base-independent betas."""
    tower = code.tower
    chosen: List[int] = []
    if tower.base.w == 1:
        tracker = Gf2RankTracker()
        for j in indices:
            packed = sum(bit << i for i, bit in enumerate(code.beta[j]))
            if tracker.add(packed):
                chosen.append(j)
                if len(chosen) == code.k:
                    break
        return chosen
    for j in indices:
        if rank_over_base(tower, [code.beta[i] for i in chosen] + [code.beta[j]]) \
                == len(chosen) + 1:
            chosen.append(j)
            if len(chosen) == code.k:
                break
    return chosen


def survivor_rank(code: CompositeCode, indices: Sequence[int]) -> int:
    return rank_over_base(code.tower, [code.beta[j] for j in indices])


def composite_erasure_decode(code: CompositeCode,
                             received: Sequence[Tuple[int, ExtElement]]):
    """Recover the message from surviving (index, value) pairs, or None.

    Succeeds exactly when k of the surviving coordinates correspond to
    base-field independent evaluation points.
    """
    seen = set()
    for j, _ in received:
        if j in seen:
            raise ValueError(f"duplicate surviving index {j}")
        seen.add(j)
    values: Dict[int, ExtElement] = dict(received)
    order = sorted(values)
    chosen = select_independent_survivors(code, order)
    if len(chosen) < code.k:
        return None
    f = moore_interpolate(code.tower, [code.beta[j] for j in chosen],
                          [values[j] for j in chosen])
    coeffs = list(f.coeffs)
    coeffs += [code.tower.zero] * (code.k - len(coeffs))
    return coeffs
