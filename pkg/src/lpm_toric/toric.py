"""Graded posets, the Eulerian test, and Stanley's toric f/g recursion."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .poly import Poly


class PosetError(ValueError):
    pass


class SymmetryError(AssertionError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class GradedPoset:
    """Finite bounded graded poset given by ranks and Hasse (cover) edges.

    Element indices are arbitrary; the bottom is the unique rank-0 element and
    the top the unique element of maximal rank.
    """

    def __init__(self, ranks: Sequence[int], hasse: Sequence[tuple[int, int]]):
        self.ranks = list(ranks)
        self.hasse = sorted((int(a), int(b)) for a, b in hasse)
        size = len(self.ranks)
        if size == 0:
            raise PosetError("empty poset")
        self.covers_up: list[list[int]] = [[] for _ in range(size)]
        self.covers_down: list[list[int]] = [[] for _ in range(size)]
        for lo, hi in self.hasse:
            if self.ranks[hi] != self.ranks[lo] + 1:
                raise PosetError(f"cover {lo} < {hi} does not raise the rank by one")
            self.covers_up[lo].append(hi)
            self.covers_down[hi].append(lo)
        bottoms = [i for i, r in enumerate(self.ranks) if r == 0]
        if len(bottoms) != 1:
            raise PosetError("poset needs a unique element of rank 0")
        self.bottom = bottoms[0]
        top_rank = max(self.ranks)
        tops = [i for i, r in enumerate(self.ranks) if r == top_rank]
        if len(tops) != 1:
            raise PosetError("poset needs a unique maximal element")
        self.top = tops[0]
        for i in range(size):
            if i != self.bottom and not self.covers_down[i]:
                raise PosetError(f"element {i} is not above the bottom")
            if i != self.top and not self.covers_up[i]:
                raise PosetError(f"element {i} is not below the top")

        self.order = sorted(range(size), key=lambda i: self.ranks[i])
        # bitmask of elements <= i, and >= i
        self.down = [0] * size
        for i in self.order:
            m = 1 << i
            for j in self.covers_down[i]:
                m |= self.down[j]
            self.down[i] = m
        self.up = [0] * size
        for i in reversed(self.order):
            m = 1 << i
            for j in self.covers_up[i]:
                m |= self.up[j]
            self.up[i] = m

    def __len__(self) -> int:
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return self.ranks[self.top]

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def members(self, mask: int) -> list[int]:
        """Elements of a bitmask, in increasing rank."""
        out = _bits(mask)
        out.sort(key=self.ranks.__getitem__)
        return out

    def interval(self, a: int, b: int) -> list[int]:
        return self.members(self.up[a] & self.down[b])

    def lower_interval(self, y: int) -> GradedPoset:
        """``[bottom, y]`` as a standalone poset, elements renumbered."""
        keep = self.members(self.down[y])
        index = {e: i for i, e in enumerate(keep)}
        ranks = [self.ranks[e] for e in keep]
        hasse = [(index[a], index[b]) for a, b in self.hasse if a in index and b in index]
        return GradedPoset(ranks, hasse)

    def maximal_chain_lengths(self) -> set[int]:
        lengths: dict[int, set[int]] = {self.top: {0}}
        for i in reversed(self.order):
            if i == self.top:
                continue
            lengths[i] = {l + 1 for j in self.covers_up[i] for l in lengths[j]}
        return lengths[self.bottom]

    def diamond_violations(self) -> list[tuple[int, int]]:
        bad = []
        for a in range(len(self.ranks)):
            for b in self.members(self.up[a]):
                if self.ranks[b] == self.ranks[a] + 2 and len(self.interval(a, b)) != 4:
                    bad.append((a, b))
        return bad

    def to_json(self) -> dict:
        return {"ranks": list(self.ranks), "hasse": [list(e) for e in self.hasse]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> GradedPoset:
        return cls(data["ranks"], [tuple(e) for e in data["hasse"]])


def chain(length: int) -> GradedPoset:
    return GradedPoset(list(range(length + 1)), [(i, i + 1) for i in range(length)])


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of an n-set; the face lattice of the (n-1)-simplex."""
    ranks = [bin(s).count("1") for s in range(1 << n)]
    hasse = [(s, s | 1 << i) for s in range(1 << n) for i in range(n) if not s >> i & 1]
    return GradedPoset(ranks, hasse)


def mobius_from(poset: GradedPoset, x: int) -> dict[int, int]:
    mu = {x: 1}
    for y in poset.members(poset.up[x]):
        if y == x:
            continue
        mu[y] = -sum(mu[z] for z in _bits(poset.up[x] & poset.down[y] & ~(1 << y)))
    return mu


def is_eulerian(poset: GradedPoset) -> bool:
    for x in range(len(poset)):
        for y, m in mobius_from(poset, x).items():
            if m != (-1) ** (poset.ranks[y] - poset.ranks[x]):
                return False
    return True


def g_from_f(f: Poly, n: int) -> Poly:
    """Truncated difference transform, keeping degrees up to ``n // 2``."""
    h = [f.coeff(k) for k in range(n // 2 + 1)]
    return Poly.from_coeffs([h[0]] + [h[k] - h[k - 1] for k in range(1, len(h))])


@dataclass(frozen=True)
class ToricPair:
    f: Poly
    g: Poly


def _x_minus_one_powers(limit: int) -> list[Poly]:
    out = [Poly.constant(1)]
    for _ in range(limit):
        out.append(out[-1] * Poly((-1, 1)))
    return out


def toric_pairs(poset: GradedPoset) -> list[ToricPair]:
    """Toric f and g of every lower interval ``[bottom, y]``, indexed by ``y``."""
    powers = _x_minus_one_powers(poset.rank)
    pairs: list[ToricPair | None] = [None] * len(poset)
    for y in poset.order:
        r = poset.ranks[y]
        if r == 0:
            one = Poly.constant(1)
            pairs[y] = ToricPair(one, one)
            continue
        n = r - 1
        f = Poly()
        for z in _bits(poset.down[y] & ~(1 << y)):
            f = f + pairs[z].g * powers[n - poset.ranks[z]]
        pairs[y] = ToricPair(f, g_from_f(f, n))
    return pairs


def _toric_unmemoized(poset: GradedPoset) -> ToricPair:
    if poset.rank == 0:
        one = Poly.constant(1)
        return ToricPair(one, one)
    n = poset.rank - 1
    f = Poly()
    for z in range(len(poset)):
        if z != poset.top:
            sub = poset.lower_interval(z)
            f = f + _toric_unmemoized(sub).g * Poly((-1, 1)) ** (n - sub.rank)
    return ToricPair(f, g_from_f(f, n))


def toric(poset: GradedPoset, memo: bool = True) -> ToricPair:
    if memo:
        return toric_pairs(poset)[poset.top]
    return _toric_unmemoized(poset)


def toric_f(poset: GradedPoset, memo: bool = True) -> Poly:
    return toric(poset, memo).f


def toric_g(poset: GradedPoset, memo: bool = True) -> Poly:
    return toric(poset, memo).g


def toric_h_vector(poset: GradedPoset, check: bool = True) -> list[int]:
    """Coefficients ``h_0..h_n`` of the toric f-polynomial.

    With ``check`` set, a non-palindromic vector raises ``SymmetryError``.
    """
    n = poset.rank - 1
    f = toric_f(poset)
    h = [f.coeff(k) for k in range(n + 1)]
    if check and h != h[::-1]:
        raise SymmetryError(f"toric h-vector {h} is not symmetric")
    return h


def classical_h_vector(fvec: Sequence[int], d: int) -> list[int]:
    """``h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_(j-1)`` with ``f_(-1) = 1``."""
    f = [1] + list(fvec)
    if len(f) < d + 1:
        raise ValueError(f"need f_0..f_{d - 1}, got {len(fvec)} entries")
    return [
        sum((-1) ** (i - j) * comb(d - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    ]
