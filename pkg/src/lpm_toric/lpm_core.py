"""Bounding lattice paths and the bases of the lattice path matroid they induce.

Paths are words over ``N`` (north) and ``E`` (east).  A basis is the set of
1-based positions of the ``N`` steps of a path that stays weakly between the
two bounding paths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

N, E = "N", "E"

DEFAULT_BASIS_CAP = 10**5


class PathFormatError(ValueError):
    def __init__(self, index: int, char: str):
        super().__init__(f"invalid step {char!r} at index {index}; expected 'N' or 'E'")
        self.index = index


class PathPairError(ValueError):
    pass


class EnumerationCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class LatticePath:
    steps: tuple[str, ...]

    @property
    def endpoint(self) -> tuple[int, int]:
        t = self.steps.count(N)
        return len(self.steps) - t, t

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """Prefix N-counts ``h(0), ..., h(len)``."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (s == N))
        return out

    def __str__(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True)
class PathPair:
    upper: LatticePath
    lower: LatticePath

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.upper.endpoint

    @property
    def ground_size(self) -> int:
        return len(self.upper)

    @property
    def rank(self) -> int:
        return self.endpoint[1]


@dataclass(frozen=True)
class LatticePathMatroid:
    ground_size: int
    rank: int
    bases: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "ground_size": self.ground_size,
            "rank": self.rank,
            "bases": [list(b) for b in self.bases],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> LatticePathMatroid:
        bases = tuple(sorted(tuple(sorted(b)) for b in data["bases"]))
        return cls(data["ground_size"], data["rank"], bases)


def parse_path(text: str) -> LatticePath:
    for i, ch in enumerate(text):
        if ch not in (N, E):
            raise PathFormatError(i, ch)
    return LatticePath(tuple(text))


def validate_pair(upper: LatticePath, lower: LatticePath) -> PathPair:
    if upper.endpoint != lower.endpoint:
        raise PathPairError(f"endpoint mismatch: upper ends at {upper.endpoint}, lower at {lower.endpoint}")
    for i, (hu, hl) in enumerate(zip(upper.heights(), lower.heights())):
        if hu < hl:
            raise PathPairError(f"paths cross: upper goes below lower at prefix {i}")
    return PathPair(upper, lower)


def pair_from_strings(upper: str, lower: str) -> PathPair:
    return validate_pair(parse_path(upper), parse_path(lower))


def _bounds(pair: PathPair) -> tuple[list[int], list[int]]:
    return pair.lower.heights(), pair.upper.heights()


def count_bases(pair: PathPair) -> int:
    lo, hi = _bounds(pair)
    ways = {0: 1}
    for i in range(1, pair.ground_size + 1):
        nxt: dict[int, int] = {}
        for h, c in ways.items():
            for h2 in (h, h + 1):
                if lo[i] <= h2 <= hi[i]:
                    nxt[h2] = nxt.get(h2, 0) + c
        ways = nxt
    return sum(ways.values())


def enumerate_bases(pair: PathPair, cap: int = DEFAULT_BASIS_CAP) -> LatticePathMatroid:
    total = count_bases(pair)
    if total > cap:
        raise EnumerationCapError(f"{total} bases exceed the enumeration cap {cap}")
    lo, hi = _bounds(pair)
    size = pair.ground_size
    found: list[tuple[int, ...]] = []

    # N-first DFS yields lexicographic order on the N-position tuples
    def walk(i: int, h: int, chosen: list[int]):
        if i == size:
            found.append(tuple(chosen))
            return
        if lo[i + 1] <= h + 1 <= hi[i + 1]:
            chosen.append(i + 1)
            walk(i + 1, h + 1, chosen)
            chosen.pop()
        if lo[i + 1] <= h <= hi[i + 1]:
            walk(i + 1, h, chosen)

    walk(0, 0, [])
    return LatticePathMatroid(size, pair.rank, tuple(found))


def path_to_basis(path: LatticePath) -> tuple[int, ...]:
    return tuple(i + 1 for i, s in enumerate(path.steps) if s == N)


def basis_to_path(basis, n: int) -> LatticePath:
    members = set(basis)
    bad = [b for b in members if not 1 <= b <= n]
    if bad:
        raise ValueError(f"basis element {min(bad)} outside [1, {n}]")
    return LatticePath(tuple(N if i in members else E for i in range(1, n + 1)))


def path_within(pair: PathPair, path: LatticePath) -> bool:
    """Direct check that ``path`` stays weakly between the bounds."""
    if len(path) != pair.ground_size or path.endpoint != pair.endpoint:
        return False
    return all(
        lo <= h <= hi
        for lo, h, hi in zip(pair.lower.heights(), path.heights(), pair.upper.heights())
    )


def check_exchange_axiom(bases) -> tuple[bool, tuple | None]:
    """Brute-force basis exchange check.

    Returns ``(True, None)`` or ``(False, (A, B, x))`` for the first pair of
    bases ``A, B`` and element ``x`` in ``A \\ B`` with no valid replacement.
    """
    if isinstance(bases, LatticePathMatroid):
        bases = bases.bases
    family = [frozenset(b) for b in bases]
    members = set(family)
    for a, b in product(family, repeat=2):
        for x in sorted(a - b):
            if not any((a - {x}) | {y} in members for y in b - a):
                return False, (tuple(sorted(a)), tuple(sorted(b)), x)
    return True, None


def hook_pair(alpha: int, beta: int) -> PathPair:
    """Canonical bounding paths of the hook ``(alpha, 1^(beta-1))``."""
    if alpha < 1 or beta < 1:
        raise ValueError("hook sides must be at least 1")
    upper = N + E * (alpha - 1) + N * (beta - 1) + E
    lower = E * alpha + N * beta
    return pair_from_strings(upper, lower)


def border_strip_pair(a: int, b: int, c: int) -> PathPair:
    """Ribbon along the spine ``E^(a-1) N^(b-1) E^(c-1)``; ``c == 1`` gives the hook."""
    if min(a, b, c) < 1:
        raise ValueError("strip segment lengths must be at least 1")
    spine = E * (a - 1) + N * (b - 1) + E * (c - 1)
    return pair_from_strings(N + spine + E, E + spine + N)
