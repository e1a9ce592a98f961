"""Edge surplus, discrepancy, and jumbledness, exactly or heuristically.

For a graph of density p and a vertex subset X, the surplus
edge_surplus(X) = e(X) - p*C(|X|,2) measures how many more edges X
induces than a density-p count predicts. Positive/negative discrepancy
maximizes the surplus (or its negation) over subsets, jumbledness
maximizes |surplus|/|X|, and both admit restrictions to subsets of one
fixed size. Exact maxima enumerate all subsets with a Gray-code walk
and are capped at EXACT_CAP_DEFAULT vertices; past the cap a seeded
hill-climbing heuristic gives certified lower bounds.

All values are Fractions. Internally every subset is scored by the
integer e(X)*den - num*C(|X|,2) where p = num/den, so comparisons and
tie-breaks never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import Graph, PreconditionError, VerificationError, from_mask, iter_bits, lex_less, to_mask
from .rng import philox, split_seed

EXACT_CAP_DEFAULT = 20


@dataclass(frozen=True)
class DiscWitness:
    value: Fraction
    witness: frozenset[int]
    sign: str
    k: Optional[int] = None


@dataclass(frozen=True)
class JumbledReport:
    j: Fraction
    witness: frozenset[int]
    k: Optional[int] = None


@dataclass(frozen=True)
class JumblednessBoundReport:
    """Exact check that the largest full / full-or-co-full subgraph
    orders dominate disc+/j and disc/j respectively."""

    p: Fraction
    disc_plus: Fraction
    disc_both: Fraction
    j: Fraction
    f_value: int
    g_value: int
    vacuous: bool


def edge_surplus(g: Graph, p, vertices) -> Fraction:
    """e(X) - p*C(|X|,2), exactly. Subsets of size <= 1 score 0."""
    p = Fraction(p)
    mask = vertices if isinstance(vertices, int) else to_mask(vertices, g.n)
    size = mask.bit_count()
    e2 = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        e2 += (g.adj[v] & mask).bit_count()
    return Fraction(e2, 2) - p * Fraction(size * (size - 1), 2)


def _check_sign(sign: str) -> None:
    if sign not in ("positive", "negative"):
        raise ValueError(f"sign must be 'positive' or 'negative', got {sign!r}")


def _require_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise PreconditionError(
            f"{what} enumerates all subsets and needs n <= {cap} (got n={n}); "
            "use the local-search heuristic for larger graphs"
        )


def _subset_extremes(g: Graph, num: int, den: int) -> list:
    """Per-size extremes of the den-scaled surplus over all subsets.

    Returns slots with slots[k] = [max_score, max_mask, min_score,
    min_mask] for 1 <= k <= n, the scores being e(X)*den - num*C(k,2)
    and the masks the lexicographically smallest attaining subsets.
    One Gray-code walk touches each subset once with O(1) updates.
    """
    n = g.n
    adj = g.adj
    expected = [num * (k * (k - 1) // 2) for k in range(n + 1)]
    slots: list = [None] * (n + 1)
    gray = 0
    e = 0
    size = 0
    for step in range(1, 1 << n):
        v = (step & -step).bit_length() - 1
        bit = 1 << v
        if gray & bit:
            gray ^= bit
            e -= (adj[v] & gray).bit_count()
            size -= 1
        else:
            e += (adj[v] & gray).bit_count()
            gray ^= bit
            size += 1
        score = e * den - expected[size]
        slot = slots[size]
        if slot is None:
            slots[size] = [score, gray, score, gray]
        else:
            if score > slot[0] or (score == slot[0] and lex_less(gray, slot[1])):
                slot[0] = score
                slot[1] = gray
            if score < slot[2] or (score == slot[2] and lex_less(gray, slot[3])):
                slot[2] = score
                slot[3] = gray
    return slots


def discrepancy_exact(g: Graph, p, sign: str = "positive", k: Optional[int] = None,
                      cap: int = EXACT_CAP_DEFAULT) -> DiscWitness:
    """Exact maximum of the (signed) surplus over all subsets.

    sign="positive" maximizes the surplus, "negative" maximizes its
    negation. With k=None the empty set competes, so the value is
    always >= 0; restricted to k-sets the value can be negative. Ties
    break to the lexicographically smallest subset.
    """
    p = Fraction(p)
    _check_sign(sign)
    _require_cap(g.n, cap, "exact discrepancy")
    if k is not None and not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}, got {k}")
    num, den = p.numerator, p.denominator
    if k == 0 or g.n == 0:
        return DiscWitness(Fraction(0), frozenset(), sign, k)
    slots = _subset_extremes(g, num, den)
    if k is not None:
        slot = slots[k]
        if sign == "positive":
            return DiscWitness(Fraction(slot[0], den), from_mask(slot[1]), sign, k)
        return DiscWitness(Fraction(-slot[2], den), from_mask(slot[3]), sign, k)
    # Unrestricted: the empty set scores 0 and is lex-smallest, so it
    # wins outright unless some subset scores strictly higher.
    best_score = 0
    best_mask = 0
    for size in range(1, g.n + 1):
        slot = slots[size]
        score, mask = (slot[0], slot[1]) if sign == "positive" else (-slot[2], slot[3])
        if score > best_score or (score == best_score and best_score > 0
                                  and lex_less(mask, best_mask)):
            best_score = score
            best_mask = mask
    return DiscWitness(Fraction(best_score, den), from_mask(best_mask), sign, None)


def jumbledness_exact(g: Graph, p, k: Optional[int] = None,
                      cap: int = EXACT_CAP_DEFAULT) -> JumbledReport:
    """Exact max of |surplus(X)|/|X| over nonempty subsets (k-sets if
    k is given), with a lexicographically-smallest witness attaining it."""
    p = Fraction(p)
    _require_cap(g.n, cap, "exact jumbledness")
    if g.n == 0:
        return JumbledReport(Fraction(0), frozenset(), k)
    if k is not None and not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}, got {k}")
    num, den = p.numerator, p.denominator
    slots = _subset_extremes(g, num, den)
    sizes = [k] if k is not None else range(1, g.n + 1)
    best: Optional[Fraction] = None
    best_mask = 0
    for size in sizes:
        slot = slots[size]
        for score, mask in ((slot[0], slot[1]), (slot[2], slot[3])):
            ratio = Fraction(abs(score), size * den)
            if best is None or ratio > best or (ratio == best and lex_less(mask, best_mask)):
                best = ratio
                best_mask = mask
    assert best is not None
    return JumbledReport(best, from_mask(best_mask), k)


def discrepancy_local_search(g: Graph, p, sign: str = "positive", seed: int = 0,
                             restarts: int = 8, k: Optional[int] = None) -> DiscWitness:
    """Hill-climbing lower bound on the exact discrepancy.

    Climbs by strict-improvement moves (single-vertex add/remove, or
    in-out swaps when k pins the subset size), restarting from the
    full vertex set / a top-degree k-set and then from seeded random
    subsets. Returns the best local optimum across restarts; its value
    never exceeds the exact discrepancy. Deterministic given
    (seed, restarts). With k=None the value is >= 0 because the empty
    set is always in play.
    """
    p = Fraction(p)
    _check_sign(sign)
    if k is not None and not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}, got {k}")
    n = g.n
    num, den = p.numerator, p.denominator
    if n == 0 or k == 0:
        return DiscWitness(Fraction(0), frozenset(), sign, k)
    orient = 1 if sign == "positive" else -1

    full = (1 << n) - 1
    by_degree = sorted(range(n), key=lambda v: (-g.degrees[v], v))
    starts = [full if k is None else to_mask(by_degree[:k], n)]
    for i in range(max(0, restarts - 1)):
        gen = philox(split_seed(seed, i))
        if k is None:
            bits = gen.integers(0, 2, size=n)
            starts.append(sum(1 << v for v in range(n) if bits[v]))
        else:
            perm = gen.permutation(n)
            starts.append(sum(1 << int(v) for v in perm[:k]))

    best_score: Optional[int] = None
    best_mask = 0
    for start in starts:
        mask, score = _climb(g, num, den, orient, start, k)
        if best_score is None or score > best_score or (
                score == best_score and lex_less(mask, best_mask)):
            best_score = score
            best_mask = mask
    assert best_score is not None
    if k is None and best_score < 0:
        best_score, best_mask = 0, 0
    return DiscWitness(Fraction(best_score, den), from_mask(best_mask), sign, k)


def _climb(g: Graph, num: int, den: int, orient: int, mask: int, k: Optional[int]):
    """Strict best-improvement hill climbing from mask.

    Returns (local_opt_mask, oriented_scaled_score). Move ties break
    to the smallest vertex (smallest (out, in) pair for swaps).
    """
    adj = g.adj
    n = g.n
    size = mask.bit_count()
    e = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        e += (adj[v] & mask).bit_count()
    e //= 2

    def scaled(edges: int, sz: int) -> int:
        return orient * (edges * den - num * (sz * (sz - 1) // 2))

    score = scaled(e, size)
    while True:
        best_gain = 0
        best_move = None
        if k is None:
            for v in range(n):
                if (mask >> v) & 1:
                    gain = scaled(e - (adj[v] & mask).bit_count(), size - 1) - score
                else:
                    gain = scaled(e + (adj[v] & mask).bit_count(), size + 1) - score
                if gain > best_gain:
                    best_gain, best_move = gain, (v, None)
        else:
            inside = list(iter_bits(mask))
            outside = [v for v in range(n) if not (mask >> v) & 1]
            for x in inside:
                dx = (adj[x] & mask).bit_count()
                for y in outside:
                    dy = (adj[y] & mask).bit_count() - ((adj[y] >> x) & 1)
                    gain = scaled(e - dx + dy, size) - score
                    if gain > best_gain:
                        best_gain, best_move = gain, (x, y)
        if best_move is None:
            return mask, score
        v, y = best_move
        if y is None:
            if (mask >> v) & 1:
                e -= (adj[v] & mask).bit_count()
                mask ^= 1 << v
                size -= 1
            else:
                e += (adj[v] & mask).bit_count()
                mask ^= 1 << v
                size += 1
        else:
            mask ^= 1 << v
            e -= (adj[v] & mask).bit_count()
            e += (adj[y] & mask).bit_count()
            mask |= 1 << y
        score = scaled(e, size)


def verify_jumbledness_bound(g: Graph, p, f_value: int, g_value: int,
                             cap: int = EXACT_CAP_DEFAULT) -> JumblednessBoundReport:
    """Check f >= disc+/j and g >= disc/j with exact rationals.

    f_value and g_value are the caller's (oracle) largest full and
    full-or-co-full orders at density p. j = 0 makes both bounds
    vacuous. A violation raises VerificationError: it would mean a bug
    in the oracles, not a counterexample.
    """
    p = Fraction(p)
    plus = discrepancy_exact(g, p, "positive", cap=cap)
    minus = discrepancy_exact(g, p, "negative", cap=cap)
    disc_both = max(plus.value, minus.value)
    jrep = jumbledness_exact(g, p, cap=cap)
    if jrep.j == 0:
        return JumblednessBoundReport(p, plus.value, disc_both, jrep.j,
                                      f_value, g_value, vacuous=True)
    if Fraction(f_value) < plus.value / jrep.j:
        raise VerificationError(
            f"largest-full order {f_value} below disc+/j = {plus.value / jrep.j}")
    if Fraction(g_value) < disc_both / jrep.j:
        raise VerificationError(
            f"full-or-co-full order {g_value} below disc/j = {disc_both / jrep.j}")
    return JumblednessBoundReport(p, plus.value, disc_both, jrep.j,
                                  f_value, g_value, vacuous=False)
