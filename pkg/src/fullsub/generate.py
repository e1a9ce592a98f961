"""Seeded graph generators: random graphs, extremal constructions, and
adversarial instances.

Every generator is deterministic given its parameters (and seed, where
one applies), platform-independent, and validated before generation.
generate(GenSpec) dispatches by family tag using the same family names
the command line accepts.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graph import Graph, PreconditionError, VerificationError, density
from .rng import uniform_u64

FAMILIES = ("gnp", "clique-isolated", "multipartite-planted", "adversary")


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated graph; identical specs yield
    identical graphs. n is the part size for multipartite-planted and
    the cycle-power parameter for adversary (4n+2 vertices)."""

    family: str
    n: int
    p: Optional[Fraction] = None
    E: Optional[int] = None
    r: Optional[int] = None
    c: Optional[Fraction] = None
    seed: int = 0


def _masks_from_matrix(mat: np.ndarray) -> tuple[int, ...]:
    packed = np.packbits(mat, axis=1, bitorder="little")
    return tuple(int.from_bytes(packed[v].tobytes(), "little")
                 for v in range(mat.shape[0]))


def gen_gnp(n: int, p, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with exact rational p: pair {u,v} is an edge
    when its 64-bit draw falls below floor(p * 2^64), so the per-edge
    bias is under 2^-64 (zero when the denominator is a power of two).
    Pairs are indexed in lexicographic order, independent of n's
    representation, so prefixes agree across runs."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"p must lie in [0, 1], got {p}")
    num, den = p.numerator, p.denominator
    total = n * (n - 1) // 2
    if total == 0 or num == 0:
        return Graph.from_edges(n, [])
    if num == den:
        full = (1 << n) - 1
        return Graph.from_masks(n, [full ^ (1 << v) for v in range(n)],
                                verify=False)
    thr = (num << 64) // den
    draws = uniform_u64(seed, total)
    keep = draws < np.uint64(thr)
    iu, ju = np.triu_indices(n, k=1)
    mat = np.zeros((n, n), dtype=bool)
    mat[iu[keep], ju[keep]] = True
    mat |= mat.T
    return Graph.from_masks(n, _masks_from_matrix(mat), verify=False)


def gen_clique_plus_isolated(n: int, E: int) -> Graph:
    """The first E edges of a clique in lexicographic order, plus
    isolated vertices: the clique part has the minimal m with
    C(m,2) >= E."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    if not 0 <= E <= n * (n - 1) // 2:
        raise PreconditionError(
            f"E must lie in [0, C({n},2)] = [0, {n * (n - 1) // 2}], got {E}")
    m = 0
    while m * (m - 1) // 2 < E:
        m += 1
    edges = list(itertools.islice(itertools.combinations(range(m), 2), E))
    return Graph.from_edges(n, edges)


def clique_part_size(E: int) -> int:
    """Minimal m with C(m,2) >= E, the clique part of
    gen_clique_plus_isolated."""
    m = 0
    while m * (m - 1) // 2 < E:
        m += 1
    return m


def _floor_with_cbrt_term(base: Fraction, coeff: Fraction, n: int) -> int:
    """floor(base + coeff / n^(2/3)) for coeff >= 0, exactly: m <= base
    + coeff n^(-2/3) iff (m - base)^3 n^2 <= coeff^3, cubing being
    monotone for either sign of m - base."""
    guess = math.floor(float(base) + float(coeff) * float(n) ** (-2.0 / 3.0))

    def le(m: int) -> bool:
        return (Fraction(m) - base) ** 3 * n * n <= coeff ** 3

    m = guess
    while not le(m):
        m -= 1
    while le(m + 1):
        m += 1
    return m


def gen_multipartite_planted(n: int, r: int, c=Fraction(1)):
    """Complete (r+1)-partite graph (parts of size n) with a clique
    planted on the first k vertices of each part, trimmed to exactly
    target = round(p_target * C((r+1)n, 2)) edges where
    p_target = r/(r+1) + c n^(-2/3). k is minimal such that the
    untrimmed count reaches the target; trimming removes clique edges
    round-robin across parts, lex-largest edge of each part first, so
    deletions stay equitable. Returns (Graph, meta) with meta carrying
    k, the edge target, and the realized density as an exact rational.

    Rounding is half-up; c below 1 generates with a warning since the
    size guarantees need c >= 1.
    """
    if n < 1:
        raise PreconditionError(f"part size must be positive, got {n}")
    if r < 1:
        raise PreconditionError(f"r must be a positive integer, got {r}")
    c = Fraction(c)
    if c <= 0:
        raise PreconditionError(f"c must be positive, got {c}")
    if c < 1:
        warnings.warn(f"c = {c} < 1: planted density below the guaranteed regime",
                      stacklevel=2)
    N = (r + 1) * n
    pairs = N * (N - 1) // 2
    base = Fraction(r, r + 1) * pairs + Fraction(1, 2)
    target = _floor_with_cbrt_term(base, c * pairs, n)
    cross = r * (r + 1) // 2 * n * n
    deficit = target - cross
    if deficit < 0:
        raise PreconditionError(
            f"edge target {target} below the {cross} cross-part edges; "
            "c too small for this part size")
    k = 0
    while (r + 1) * (k * (k - 1) // 2) < deficit:
        k += 1
        if k > n:
            raise PreconditionError(
                f"planted clique size would exceed the part size {n}; "
                "c too large for this part size")

    part_pairs = [list(itertools.combinations(range(j * n, j * n + k), 2))
                  for j in range(r + 1)]
    surplus = (r + 1) * (k * (k - 1) // 2) - deficit
    j = 0
    while surplus > 0:
        if part_pairs[j]:
            part_pairs[j].pop()
            surplus -= 1
        j = (j + 1) % (r + 1)

    full = (1 << N) - 1
    adj = [0] * N
    for v in range(N):
        part = v // n
        part_mask = ((1 << n) - 1) << (part * n)
        adj[v] = (full ^ part_mask)
    for pp in part_pairs:
        for u, v in pp:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    g = Graph.from_masks(N, adj, verify=False)
    if g.edge_count != target:
        raise VerificationError(
            f"built {g.edge_count} edges, target was {target}")
    meta = {"k": k, "target_edges": target,
            "realized_p": Fraction(target, pairs)}
    return g, meta


def gen_greedy_adversary(n: int) -> Graph:
    """The n-th power of a Hamiltonian cycle on 4n+2 vertices plus all
    antipodal edges (a (2n+1)-regular graph), with a complete bipartite
    K_{m,m} planted between {0..m-1} and {2n+1..2n+m} for
    m = round(sqrt(3n)). Density exceeds 1/2; built to stress greedy
    peeling tie-breaks."""
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}")
    N = 4 * n + 2
    wrap = (1 << N) - 1
    base = 1 << (2 * n + 1)
    for j in range(1, n + 1):
        base |= (1 << j) | (1 << (N - j))
    adj = [((base << i) | (base >> (N - i))) & wrap for i in range(N)]

    r0 = math.isqrt(3 * n)
    m = r0 + 1 if 3 * n - r0 * r0 > r0 else r0
    for i in range(m):
        for j in range(m):
            u, v = i, 2 * n + 1 + j
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    g = Graph.from_masks(N, adj, verify=True)
    expected = (2 * n + 1) ** 2 + m * (m - 1)
    if g.edge_count != expected:
        raise VerificationError(
            f"built {g.edge_count} edges, expected {expected}")
    return g


def adversary_planted_size(n: int) -> int:
    """m = round(sqrt(3n)) used by gen_greedy_adversary; exact halves
    cannot occur since sqrt(3n) is never a half-integer."""
    r0 = math.isqrt(3 * n)
    return r0 + 1 if 3 * n - r0 * r0 > r0 else r0


def gen_glued(a: Graph, b: Graph, seed: int) -> Graph:
    """Disjoint union of two equal even-order graphs joined by random
    pair matchings: vertices pair up consecutively (2i, 2i+1), and each
    (pair of A, pair of B) receives one of the two perfect matchings
    between them, chosen by an indexed coin so the draw for a pair-pair
    is independent of construction order. Every vertex gains exactly
    |A|/2 cross-neighbors, so the cross density is exactly 1/2."""
    if a.n != b.n:
        raise PreconditionError(f"orders differ: {a.n} vs {b.n}")
    if a.n % 2:
        raise PreconditionError(f"orders must be even, got {a.n}")
    h = a.n // 2
    off = a.n
    adj = list(a.adj) + [row << off for row in b.adj]
    if h:
        coins = uniform_u64(seed, h * h)
        for i in range(h):
            for j in range(h):
                flip = int(coins[i * h + j]) & 1
                a0, a1 = 2 * i, 2 * i + 1
                b0, b1 = off + 2 * j, off + 2 * j + 1
                if flip:
                    pairs = ((a0, b1), (a1, b0))
                else:
                    pairs = ((a0, b0), (a1, b1))
                for u, v in pairs:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
    return Graph.from_masks(2 * off, adj, verify=True)


def generate(spec: GenSpec):
    """Dispatch a GenSpec to its family generator; returns
    (Graph, meta) where meta always includes the realized density."""
    if spec.family == "gnp":
        if spec.p is None:
            raise PreconditionError("gnp requires p")
        g = gen_gnp(spec.n, spec.p, spec.seed)
        meta = {}
    elif spec.family == "clique-isolated":
        if spec.E is None:
            raise PreconditionError("clique-isolated requires E")
        g = gen_clique_plus_isolated(spec.n, spec.E)
        meta = {"m": clique_part_size(spec.E)}
    elif spec.family == "multipartite-planted":
        if spec.r is None:
            raise PreconditionError("multipartite-planted requires r")
        g, meta = gen_multipartite_planted(spec.n, spec.r,
                                           spec.c if spec.c is not None else Fraction(1))
    elif spec.family == "adversary":
        g = gen_greedy_adversary(spec.n)
        meta = {"m": adversary_planted_size(spec.n)}
    else:
        raise PreconditionError(
            f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
    meta["density"] = density(g)
    return g, meta
