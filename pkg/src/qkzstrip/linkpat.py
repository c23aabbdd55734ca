"""Link patterns, their Dyck paths, and the Temperley-Lieb action.

Positions are 1-based throughout.  A pattern of odd size has exactly one
unmatched point, which may not sit under any arch.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .exactalg import TAU, TauPoly

MIN, MAX, SLOPE = "min", "max", "slope"


@dataclass(frozen=True)
class LinkPattern:
    """``pair[i-1]`` is the partner of point i, or 0 for the unmatched point."""

    pair: tuple[int, ...]

    def __post_init__(self):
        pair = tuple(self.pair)
        object.__setattr__(self, "pair", pair)
        N = len(pair)
        if N < 1:
            raise ValueError("link pattern needs at least one point")
        free = [i for i, j in enumerate(pair, 1) if j == 0]
        if len(free) != N % 2:
            raise ValueError(f"expected {N % 2} unmatched points, found {len(free)}")
        for i, j in enumerate(pair, 1):
            if j and (j == i or not 1 <= j <= N or pair[j - 1] != i):
                raise ValueError(f"pair is not an involution at {i}")
        # non-crossing and the free point under no arch, via the bracket walk
        stack = []
        for i, j in enumerate(pair, 1):
            if j == 0:
                if stack:
                    raise ValueError(f"unmatched point {i} lies under an arch")
            elif j > i:
                stack.append(i)
            else:
                if not stack or stack.pop() != j:
                    raise ValueError("arches cross")

    # -- basic data -----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.pair)

    @property
    def n(self) -> int:
        """Number of arches."""
        return len(self.pair) // 2

    def partner(self, i: int) -> int:
        return self.pair[i - 1]

    @cached_property
    def arches(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j in enumerate(self.pair, 1) if j > i)

    @cached_property
    def unmatched(self) -> int | None:
        for i, j in enumerate(self.pair, 1):
            if j == 0:
                return i
        return None

    def openings(self) -> tuple[int, ...]:
        """Arch openings, left to right (the unmatched point is not one)."""
        return tuple(i for i, j in enumerate(self.pair, 1) if j > i)

    def up_steps(self) -> tuple[int, ...]:
        """Ascent positions of the Dyck path: openings plus the unmatched point."""
        return tuple(i for i, j in enumerate(self.pair, 1) if j > i or j == 0)

    def closings(self) -> tuple[int, ...]:
        """Arch closings counted from the right, in increasing order."""
        N = self.size
        return tuple(sorted(N + 1 - i for i, j in enumerate(self.pair, 1) if 0 < j < i))

    def mirror(self) -> "LinkPattern":
        N = self.size
        return LinkPattern(tuple(0 if self.pair[N - i] == 0 else N + 1 - self.pair[N - i]
                                 for i in range(1, N + 1)))

    # -- Dyck path ------------------------------------------------------------

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """h_0 .. h_N; ends at 1 for odd size."""
        h = [0]
        for i, j in enumerate(self.pair, 1):
            h.append(h[-1] + (1 if j > i or j == 0 else -1))
        return tuple(h)

    @cached_property
    def completed_heights(self) -> tuple[int, ...]:
        """The even-length path, with one final down-step for odd size."""
        h = self.heights
        return h + (0,) if self.size % 2 else h

    @cached_property
    def beta(self) -> int:
        """Number of boxes between the Dyck path and the minimal zigzag."""
        h = self.completed_heights
        return sum(h[i] - 1 for i in range(1, len(h)) if h[i] > h[i - 1])

    def embed(self) -> "LinkPattern":
        """Odd size 2n+1 -> size 2n+2, joining the free point to a new last point."""
        if self.size % 2 == 0:
            return self
        u = self.unmatched
        N = self.size
        pair = list(self.pair) + [u]
        pair[u - 1] = N + 1
        return LinkPattern(tuple(pair))

    def erase_last_arch(self) -> "LinkPattern":
        """Even size -> size one less, leaving the last arch's opening unmatched."""
        if self.size % 2:
            raise ValueError("erase_last_arch needs an even pattern")
        N = self.size
        o = self.pair[N - 1]
        pair = list(self.pair[:-1])
        pair[o - 1] = 0
        return LinkPattern(tuple(pair))

    def __repr__(self):
        arches = ",".join(f"({i},{j})" for i, j in self.arches)
        free = f";{self.unmatched}" if self.unmatched else ""
        return f"LP[{arches}{free}]"

    def __lt__(self, other: "LinkPattern") -> bool:
        return contains_strictly(self, other)

    def __le__(self, other: "LinkPattern") -> bool:
        return self == other or contains_strictly(self, other)


def sort_key(p: LinkPattern) -> tuple[int, ...]:
    return p.up_steps()


def from_dyck(heights: Sequence[int]) -> LinkPattern:
    """Inverse of :attr:`LinkPattern.heights` (odd paths end at height 1)."""
    N = len(heights) - 1
    if heights[0] != 0 or any(abs(heights[i] - heights[i - 1]) != 1 for i in range(1, N + 1)):
        raise ValueError("not a unit-step path from 0")
    if min(heights) < 0 or heights[-1] != N % 2:
        raise ValueError("not a (possibly half-completed) Dyck path")
    pair = [0] * N
    stack = []
    for i in range(1, N + 1):
        if heights[i] > heights[i - 1]:
            stack.append(i)
        else:
            j = stack.pop()
            pair[i - 1], pair[j - 1] = j, i
    if len(stack) > 1:
        raise ValueError("more than one unclosed step")
    return LinkPattern(tuple(pair))


def _dyck_words(N: int) -> Iterator[tuple[int, ...]]:
    final = N % 2

    def rec(prefix, h):
        i = len(prefix)
        if i == N:
            if h == final:
                yield tuple(prefix)
            return
        remaining = N - i
        if h + 1 - final <= remaining - 1:
            prefix.append(1)
            yield from rec(prefix, h + 1)
            prefix.pop()
        if h > 0:
            prefix.append(-1)
            yield from rec(prefix, h - 1)
            prefix.pop()

    yield from rec([], 0)


@lru_cache(maxsize=None)
def enumerate_patterns(N: int) -> tuple[LinkPattern, ...]:
    """All link patterns of size N in increasing lexicographic order of ascents."""
    if N < 1:
        raise ValueError("size must be positive")
    pats = []
    for word in _dyck_words(N):
        h = [0]
        for s in word:
            h.append(h[-1] + s)
        pats.append(from_dyck(h))
    pats.sort(key=sort_key)
    return tuple(pats)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def rainbow(N: int) -> LinkPattern:
    """pi_0: the pattern with the most boxes."""
    pair = [0] * N
    if N % 2 == 0:
        for i in range(1, N // 2 + 1):
            pair[i - 1], pair[N - i] = N + 1 - i, i
    else:
        for i in range(2, (N + 1) // 2 + 1):
            pair[i - 1], pair[N + 1 - i] = N + 2 - i, i
    return LinkPattern(tuple(pair))


def pi_max(N: int) -> LinkPattern:
    """The pattern made only of little arches (zero boxes)."""
    pair = [0] * N
    for i in range(1, N - N % 2, 2):
        pair[i - 1], pair[i] = i + 1, i
    return LinkPattern(tuple(pair))


def contains_strictly(p: LinkPattern, r: LinkPattern) -> bool:
    """p < r: the Dyck path of p strictly contains that of r."""
    hp, hr = p.completed_heights, r.completed_heights
    if len(hp) != len(hr):
        raise ValueError("patterns of different sizes")
    return hp != hr and all(a >= b for a, b in zip(hp, hr))


def apply_e(i: int, p: LinkPattern) -> tuple[LinkPattern, TauPoly, str]:
    """Action of the generator e_i: (image, weight, case)."""
    N = p.size
    if not 1 <= i < N:
        raise ValueError(f"e_{i} undefined on {N} points")
    j, k = p.pair[i - 1], p.pair[i]
    if j == i + 1:
        return p, TAU, MAX
    h = p.heights
    case = MIN if h[i] < h[i - 1] and h[i] < h[i + 1] else SLOPE
    pair = list(p.pair)
    pair[i - 1], pair[i] = i + 1, i
    if j:
        pair[j - 1] = k
    if k:
        pair[k - 1] = j
    return LinkPattern(tuple(pair)), TauPoly.one(), case


def preimages(i: int, p: LinkPattern) -> list[LinkPattern]:
    """All r != p with e_i r = p (nonempty only when p has a little arch at i)."""
    return [r for r in enumerate_patterns(p.size) if r != p and apply_e(i, r)[0] == p]


def h_weight(p: LinkPattern, a: LinkPattern) -> int:
    """Sum of the heights of p's path at the ascent positions of a."""
    if p.size != a.size:
        raise ValueError("patterns of different sizes")
    hp = p.completed_heights
    ha = a.completed_heights
    return sum(hp[i] for i in range(1, len(ha)) if ha[i] > ha[i - 1])


def pattern_index(N: int) -> dict[LinkPattern, int]:
    return {p: k for k, p in enumerate(enumerate_patterns(N))}


# -- Temperley-Lieb relations on the pattern span ---------------------------------

def act(i: int, vec: dict[LinkPattern, TauPoly]) -> dict[LinkPattern, TauPoly]:
    """e_i applied to a linear combination of patterns."""
    out: dict[LinkPattern, TauPoly] = {}
    for p, c in vec.items():
        img, w, _ = apply_e(i, p)
        out[img] = out.get(img, TauPoly.zero()) + w * c
    return {p: c for p, c in out.items() if c}


def _word(word: Sequence[int], p: LinkPattern) -> dict[LinkPattern, TauPoly]:
    vec = {p: TauPoly.one()}
    for i in reversed(word):
        vec = act(i, vec)
    return vec


def tl_relation_failures(N: int) -> list[str]:
    """Check e_i^2 = tau e_i, e_i e_{i+-1} e_i = e_i and distant commutation on every pattern."""
    bad = []
    for p in enumerate_patterns(N):
        for i in range(1, N):
            once = _word([i], p)
            if _word([i, i], p) != {r: TAU * c for r, c in once.items()}:
                bad.append(f"e_{i}^2 on {p}")
            for j in (i - 1, i + 1):
                if 1 <= j < N and _word([i, j, i], p) != once:
                    bad.append(f"e_{i} e_{j} e_{i} on {p}")
            for j in range(i + 2, N):
                if _word([i, j], p) != _word([j, i], p):
                    bad.append(f"e_{i} e_{j} commutation on {p}")
    return bad
