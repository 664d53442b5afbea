"""Exact arithmetic in GF(2^w) and its degree-m extension GF((2^w)^m).

Base field elements are integers in [0, 2^w) whose bits are polynomial
coefficients over GF(2).  Extension elements are tuples of m base
elements (coordinates in the polynomial basis).  Only characteristic 2
is supported, so subtraction equals addition everywhere.

Primitive polynomials used for the base fields (one per width w):
    w=1 : x + 1
    w=2 : x^2 + x + 1
    w=3 : x^3 + x + 1
    w=4 : x^4 + x + 1
    w=8 : x^8 + x^4 + x^3 + x^2 + 1
    ... (full table below, w up to 16)
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

ExtElement = Tuple[int, ...]

# Primitive polynomials over GF(2), keyed by degree w; bit i is the
# coefficient of x^i.  With these moduli the element x (integer 2) is a
# generator of the multiplicative group, which the exp/log tables rely on.
PRIMITIVE_POLY = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class BaseField:
    """GF(2^w) with exp/log tables for multiplication and inversion."""

    def __init__(self, w: int):
        if w not in PRIMITIVE_POLY:
            raise ValueError(f"unsupported field width w={w}; need 1 <= w <= 16")
        self.w = w
        self.q = 1 << w
        self.modulus = PRIMITIVE_POLY[w]
        self.zero = 0
        self.one = 1

        self.exp: List[int] = [0] * self.q
        self.log: List[int] = [0] * self.q
        g = 2 if w > 1 else 1
        val = 1
        for i in range(self.q - 1):
            self.exp[i] = val
            self.log[val] = i
            val = self.mul_clmul(val, g)

    def mul_clmul(self, a: int, b: int) -> int:
        """Carry-less multiply mod the field polynomial (no tables)."""
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.modulus
        return p

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def elements(self):
        return range(self.q)

    def rand_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.q)

    def __eq__(self, other):
        return isinstance(other, BaseField) and other.w == self.w

    def __hash__(self):
        return hash(("BaseField", self.w))

    def __repr__(self):
        return f"BaseField(w={self.w})"


# ---------------------------------------------------------------------------
# polynomial helpers over a BaseField (dense coefficient lists, low to high)
# ---------------------------------------------------------------------------

def _poly_trim(p: List[int]) -> List[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(f: BaseField, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] ^= f.mul(ai, bj)
    return _poly_trim(out)


def _poly_mod(f: BaseField, a: Sequence[int], mod: Sequence[int]) -> List[int]:
    # mod is monic
    r = list(a)
    dm = len(mod) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        shift = len(r) - 1 - dm
        if lead:
            for i, mi in enumerate(mod):
                if mi:
                    r[shift + i] ^= f.mul(lead, mi)
        _poly_trim(r)
        if r and len(r) - 1 >= dm and r[-1] == 0:
            _poly_trim(r)
    return _poly_trim(r)


def _poly_powmod(f: BaseField, a: Sequence[int], e: int, mod: Sequence[int]) -> List[int]:
    result = [1]
    base = _poly_mod(f, a, mod)
    while e:
        if e & 1:
            result = _poly_mod(f, _poly_mul(f, result, base), mod)
        base = _poly_mod(f, _poly_mul(f, base, base), mod)
        e >>= 1
    return result


def _poly_gcd(f: BaseField, a: Sequence[int], b: Sequence[int]) -> List[int]:
    a, b = list(a), list(b)
    while b:
        # make b monic before reduction
        lead_inv = f.inv(b[-1])
        b = [f.mul(c, lead_inv) for c in b]
        a, b = b, _poly_mod(f, a, b)
    return a


def _prime_factors(m: int) -> List[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_irreducible(base: BaseField, poly: Sequence[int]) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(2^w)."""
    m = len(poly) - 1
    if m < 1 or poly[-1] != 1:
        return False
    q = base.q
    x = [0, 1]
    # x^(q^m) == x mod poly
    xqm = _poly_powmod(base, x, q**m, poly)
    if _poly_trim(list(xqm)) != [0, 1]:
        return False
    for p in _prime_factors(m):
        g = _poly_powmod(base, x, q ** (m // p), poly)
        # gcd(x^(q^(m/p)) - x, poly) must be trivial
        diff = list(g) + [0] * (2 - len(g))
        diff[1] ^= 1
        _poly_trim(diff)
        gcd = _poly_gcd(base, poly, diff)
        if len(gcd) - 1 > 0:
            return False
    return True


def find_irreducible(base: BaseField, m: int, seed: int = 0,
                     max_tries: int = 10**6) -> List[int]:
    """Seeded search for a monic irreducible degree-m polynomial."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    rng = random.Random(seed)
    if m == 1:
        return [rng.randrange(base.q), 1]
    for _ in range(max_tries):
        poly = [rng.randrange(base.q) for _ in range(m)] + [1]
        if is_irreducible(base, poly):
            return poly
    raise RuntimeError("irreducible polynomial search exhausted (internal error)")


class FieldTower:
    """The pair GF(2^w) <= GF((2^w)^m), with Frobenius support.

    Extension elements are length-m tuples of base elements (polynomial
    basis coordinates).  Immutable after construction and safe to share.
    """

    def __init__(self, base: BaseField, m: int, ext_modulus: Sequence[int] | None = None,
                 seed: int = 0):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.base = base
        self.m = m
        if ext_modulus is None:
            ext_modulus = find_irreducible(base, m, seed)
        ext_modulus = list(ext_modulus)
        if len(ext_modulus) != m + 1 or ext_modulus[-1] != 1:
            raise ValueError("extension modulus must be monic of degree m")
        if not is_irreducible(base, ext_modulus):
            raise ValueError("extension modulus is reducible")
        self.ext_modulus = tuple(ext_modulus)
        self.zero: ExtElement = (0,) * m
        self.one: ExtElement = tuple([1] + [0] * (m - 1))
        # bit-packed modulus for the fast GF(2)-base path
        self._packed_mod = None
        if base.w == 1:
            self._packed_mod = sum(c << i for i, c in enumerate(ext_modulus))

    # -- element constructors -------------------------------------------------

    def from_coords(self, coords: Sequence[int]) -> ExtElement:
        if len(coords) != self.m:
            raise ValueError("coordinate vector has wrong length")
        return tuple(coords)

    def embed_scalar(self, lam: int) -> ExtElement:
        return tuple([lam] + [0] * (self.m - 1))

    def basis_element(self, i: int) -> ExtElement:
        return tuple(1 if j == i else 0 for j in range(self.m))

    def rand(self, rng: random.Random) -> ExtElement:
        return tuple(rng.randrange(self.base.q) for _ in range(self.m))

    def rand_nonzero(self, rng: random.Random) -> ExtElement:
        while True:
            a = self.rand(rng)
            if any(a):
                return a

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: ExtElement, b: ExtElement) -> ExtElement:
        return tuple(x ^ y for x, y in zip(a, b))

    def scalar_mul(self, lam: int, a: ExtElement) -> ExtElement:
        return tuple(self.base.mul(lam, x) for x in a)

    def mul(self, a: ExtElement, b: ExtElement) -> ExtElement:
        if self._packed_mod is not None:
            return self._mul_packed(a, b)
        f = self.base
        m = self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] ^= f.mul(ai, bj)
        # reduce mod ext_modulus (monic)
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, mi in enumerate(self.ext_modulus[:-1]):
                    if mi:
                        prod[d - m + i] ^= f.mul(c, mi)
        return tuple(prod[:m])

    def _mul_packed(self, a: ExtElement, b: ExtElement) -> ExtElement:
        # base field GF(2): coordinates are bits, use integer carry-less mul
        m = self.m
        x = sum(bit << i for i, bit in enumerate(a))
        y = sum(bit << i for i, bit in enumerate(b))
        p = 0
        while y:
            if y & 1:
                p ^= x
            y >>= 1
            x <<= 1
        mod = self._packed_mod
        for d in range(2 * m - 2, m - 1, -1):
            if p >> d & 1:
                p ^= mod << (d - m)
        return tuple(p >> i & 1 for i in range(m))

    def inv(self, a: ExtElement) -> ExtElement:
        if not any(a):
            raise ZeroDivisionError("inversion of zero field element")
        # a^(q^m - 2)
        return self.pow(a, self.base.q**self.m - 2)

    def pow(self, a: ExtElement, e: int) -> ExtElement:
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: ExtElement, i: int) -> ExtElement:
        """a^(q^i); i = m acts as the identity on GF(q^m)."""
        if i < 0:
            raise ValueError("Frobenius power must be nonnegative")
        i %= self.m
        out = a
        for _ in range(i * self.base.w):
            out = self.mul(out, out)
        return out

    def __eq__(self, other):
        return (isinstance(other, FieldTower) and other.base == self.base
                and other.ext_modulus == self.ext_modulus)

    def __hash__(self):
        return hash(("FieldTower", self.base.w, self.ext_modulus))

    def __repr__(self):
        return f"FieldTower(q=2^{self.base.w}, m={self.m})"


def build_base_field(w: int) -> BaseField:
    return BaseField(w)


def build_tower(w: int, m: int, ext_modulus: Sequence[int] | None = None,
                seed: int = 0) -> FieldTower:
    return FieldTower(BaseField(w), m, ext_modulus, seed)
