"""Constructive finders for full and relatively full subgraphs.

A subgraph on m vertices of a density-p graph is full when its minimum
internal degree is at least p(m-1), and co-full with "at most" in place
of "at least". A subgraph S is relatively q-full when every v in S
keeps d_S(v) >= q*d_G(v), a degree-proportional notion that does not
reference density. This module houses:

  - is_full / is_relatively_full: exact certification predicates,
  - oracle_largest_full: the exponential exact optimum (desk scale),
  - greedy_full: threshold peeling with a choice of tie-breaks,
  - qfull_partition: swap local search over (ceil(qn), rest)
    bipartitions whose local maxima force one of three witness shapes,
  - half_full / one_over_r_full: relatively full subgraphs near n/r,
  - full_two_thirds: the peel-until-aligned procedure whose output is
    full and has order at least (1-p)^(2/3) n^(2/3) / 4 - 1,
  - small_p_full: the sparse-regime finder (p <= n^(-2/3)),
  - largest_full_or_cofull: best of both orientations.

Every returned witness is re-certified with cleared-denominator
integer arithmetic before it escapes; a certification failure raises
VerificationError because it can only mean an implementation bug.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .graph import (
    Graph,
    PreconditionError,
    VerificationError,
    complement,
    density,
    from_mask,
    induced_subgraph,
    iter_bits,
    to_mask,
)
from .rng import philox, split_seed

EXACT_CAP_DEFAULT = 20


@dataclass(frozen=True)
class FullSubgraphResult:
    vertices: frozenset[int]
    size: int
    p_used: Fraction
    min_degree: int
    guarantee: Optional[Fraction] = None
    trace: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class RelativelyFullResult:
    vertices: frozenset[int]
    size: int
    q: Fraction


@dataclass(frozen=True)
class QFullOutcome:
    """Outcome of the bipartition local search at ratio q = a/b.

    variant "i":   set_q has exactly ceil(qn) vertices and is
                   relatively q-full.
    variant "ii":  set_1mq has floor((1-q)n) vertices and is
                   relatively (1-q)-full.
    variant "iii": both sets present, one vertex larger than the
                   variant i/ii sizes, relatively q-full and
                   (1-q)-full respectively.

    x_side / y_side carry the converged bipartition itself so callers
    can audit swap-local maximality.
    """

    variant: str
    q: Fraction
    set_q: Optional[frozenset[int]] = None
    set_1mq: Optional[frozenset[int]] = None
    x_side: Optional[frozenset[int]] = None
    y_side: Optional[frozenset[int]] = None


@dataclass(frozen=True)
class GValue:
    value: int
    side: str
    witness: frozenset[int]
    p: Fraction


def ceil_sqrt_frac(x: Fraction) -> int:
    """Smallest nonnegative integer c with c*c >= x, exactly."""
    if x <= 0:
        return 0
    a, b = x.numerator, x.denominator
    c = math.isqrt((a + b - 1) // b)
    while c * c * b < a:
        c += 1
    while c >= 1 and (c - 1) * (c - 1) * b >= a:
        c -= 1
    return c


def _resolve_mask(g: Graph, vertices) -> int:
    return vertices if isinstance(vertices, int) else to_mask(vertices, g.n)


def _min_degree_within(g: Graph, mask: int) -> int:
    best = None
    for v in iter_bits(mask):
        d = (g.adj[v] & mask).bit_count()
        if best is None or d < best:
            best = d
    return 0 if best is None else best


def is_full(g: Graph, p, vertices, mode: str = "full"):
    """(True, None) when the induced subgraph is full (co-full) at p,
    else (False, v) for the smallest violating vertex. Empty sets and
    singletons pass vacuously."""
    p = Fraction(p)
    num, den = p.numerator, p.denominator
    mask = _resolve_mask(g, vertices)
    m = mask.bit_count()
    thr = num * (m - 1)
    if mode == "full":
        for v in iter_bits(mask):
            if (g.adj[v] & mask).bit_count() * den < thr:
                return False, v
    elif mode == "cofull":
        for v in iter_bits(mask):
            if (g.adj[v] & mask).bit_count() * den > thr:
                return False, v
    else:
        raise ValueError(f"mode must be 'full' or 'cofull', got {mode!r}")
    return True, None


def is_relatively_full(g: Graph, q, vertices):
    """(True, None) when every member v keeps d_S(v) >= q * d_G(v),
    else (False, v) for the smallest violating vertex."""
    q = Fraction(q)
    a, b = q.numerator, q.denominator
    mask = _resolve_mask(g, vertices)
    for v in iter_bits(mask):
        if b * (g.adj[v] & mask).bit_count() < a * g.degrees[v]:
            return False, v
    return True, None


def oracle_largest_full(g: Graph, p, mode: str = "full",
                        cap: int = EXACT_CAP_DEFAULT) -> FullSubgraphResult:
    """Exact largest full (or co-full) subgraph by descending-size
    enumeration; the witness is the lexicographically smallest optimum.
    Exponential: refuses n > cap."""
    p = Fraction(p)
    if mode not in ("full", "cofull"):
        raise ValueError(f"mode must be 'full' or 'cofull', got {mode!r}")
    if g.n > cap:
        raise PreconditionError(
            f"exact search needs n <= {cap} (got n={g.n}); "
            "use greedy_full or full_two_thirds instead")
    num, den = p.numerator, p.denominator
    n = g.n
    if n == 0:
        return FullSubgraphResult(frozenset(), 0, p, 0)
    adj = g.adj
    for m in range(n, 0, -1):
        thr = num * (m - 1)
        if mode == "full":
            elig = [v for v in range(n) if g.degrees[v] * den >= thr]
        else:
            # members can lose at most n - m neighbors to the outside
            elig = [v for v in range(n) if (g.degrees[v] - (n - m)) * den <= thr]
        if len(elig) < m:
            continue
        for combo in itertools.combinations(elig, m):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if mode == "full":
                ok = all((adj[v] & mask).bit_count() * den >= thr for v in combo)
            else:
                ok = all((adj[v] & mask).bit_count() * den <= thr for v in combo)
            if ok:
                return FullSubgraphResult(frozenset(combo), m, p,
                                          _min_degree_within(g, mask))
    raise AssertionError("single vertices are always full")


class _Peeler:
    """Vertex peeling on a dense degree table: peek_min scans in C via
    argmin (first occurrence = smallest index among ties), delete
    decrements all surviving neighbors in one vectorized step."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = (1 << g.n) - 1
        self.count = g.n
        self.deg = np.array(g.degrees, dtype=np.int64)
        self._rows = _adjacency_matrix(g).view(np.bool_)
        self._gone = np.zeros(g.n, dtype=np.bool_)

    def peek_min(self) -> tuple[int, int]:
        if not self.count:
            raise AssertionError("peek on empty peeler")
        masked = np.where(self._gone, np.iinfo(np.int64).max, self.deg)
        v = int(np.argmin(masked))
        return int(masked[v]), v

    def delete(self, v: int) -> None:
        self.alive ^= 1 << v
        self.count -= 1
        self._gone[v] = True
        self.deg[self._rows[v] & ~self._gone] -= 1


def greedy_full(g: Graph, p=None, tie_break: str = "min-index",
                alpha=None) -> FullSubgraphResult:
    """Peel below-threshold vertices until the remainder is full at p.

    While the current graph on s vertices has minimum degree below
    p(s-1), delete one minimum-degree vertex and repeat; a single
    vertex is always full, so this terminates with a nonempty witness.
    tie_break picks among minimum-degree vertices: "min-index" takes
    the smallest label; "adversarial-antipodal" prefers the antipode
    (v + n//2 mod n) of the previously deleted vertex when it is tied,
    the stress-test schedule for near-regular layered graphs.

    When the caller supplies alpha = edge_surplus of the deletion
    start (> 0), the guarantee field carries the ceiling of
    sqrt(2*alpha/(1-p)), a proven lower bound on the final size.
    """
    if tie_break not in ("min-index", "adversarial-antipodal"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    p = density(g) if p is None else Fraction(p)
    num, den = p.numerator, p.denominator
    if g.n == 0:
        return FullSubgraphResult(frozenset(), 0, p, 0, None, ())
    peel = _Peeler(g)
    trace: list[int] = []
    last: Optional[int] = None
    shift = g.n // 2
    while True:
        s = peel.count
        dmin, vmin = peel.peek_min()
        if dmin * den >= num * (s - 1):
            break
        victim = vmin
        if tie_break == "adversarial-antipodal" and last is not None:
            anti = (last + shift) % g.n
            if (peel.alive >> anti) & 1 and peel.deg[anti] == dmin:
                victim = anti
        peel.delete(victim)
        trace.append(victim)
        last = victim
    mask = peel.alive
    guarantee = None
    if alpha is not None:
        alpha = Fraction(alpha)
        if alpha > 0:
            if p == 1:
                raise ValueError("alpha > 0 is impossible at p = 1")
            guarantee = Fraction(ceil_sqrt_frac(2 * alpha / (1 - p)))
    result = FullSubgraphResult(from_mask(mask), mask.bit_count(), p,
                                _min_degree_within(g, mask), guarantee,
                                tuple(trace))
    ok, bad = is_full(g, p, mask)
    if not ok:
        raise VerificationError(f"greedy stop set not full at vertex {bad}")
    return result


def _adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency as uint8, rows indexed by vertex."""
    n = g.n
    nbytes = (n + 7) // 8
    buf = bytearray(nbytes * n)
    for v, row in enumerate(g.adj):
        buf[v * nbytes:(v + 1) * nbytes] = row.to_bytes(nbytes, "little")
    packed = np.frombuffer(bytes(buf), dtype=np.uint8).reshape(n, nbytes)
    return np.unpackbits(packed, axis=1, bitorder="little")[:, :n]


def qfull_partition(g: Graph, q, seed: Optional[int] = None) -> QFullOutcome:
    """Swap local search over bipartitions (|X| = ceil(qn)) and the
    forced case analysis at a local maximum.

    With q = a/b the integer potential (b-a)e(X) + a*e(Y) rises by at
    least 1 per applied swap, so at most b*C(n,2) swaps occur. At a
    swap-local maximum either X is relatively q-full (variant i), or Y
    is relatively (1-q)-full (variant ii), or both deficiency sets are
    nonempty and adding the smallest-index deficient vertex from the
    other side fixes each (variant iii). The swap gain of exchanging
    x in X with y in Y is u(x) - u(y) - b*[xy edge] for
    u(v) = a*d(v) - b*d_X(v), which the search maximizes greedily.

    Default start: the ceil(qn) highest-degree vertices (ties to the
    smaller index); a seed switches to a random start for restarts.
    """
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise PreconditionError(f"q must lie in [0, 1], got {q}")
    a, b = q.numerator, q.denominator
    n = g.n
    if b * max(n, 1) >= 1 << 62:
        raise PreconditionError("q denominator too large for int64 swap scores")
    if n == 0:
        return QFullOutcome("i", q, set_q=frozenset())
    kx = -((-a * n) // b)

    deg = np.array(g.degrees, dtype=np.int64)
    adj = _adjacency_matrix(g)
    if seed is None:
        order = np.lexsort((np.arange(n), -deg))
    else:
        order = philox(split_seed(seed, 0)).permutation(n)
    in_x = np.zeros(n, dtype=bool)
    in_x[order[:kx]] = True

    dx = (adj @ in_x.astype(np.int64))
    u = a * deg - b * dx
    NEG = np.int64(-(1 << 62))
    POS = np.int64(1 << 62)

    if 0 < kx < n:
        max_swaps = b * n * (n - 1) // 2 + n + 10
        for _ in range(max_swaps):
            ux = np.where(in_x, u, NEG)
            uy = np.where(in_x, POS, u)
            x_star = int(np.argmax(ux))
            y_star = int(np.argmin(uy))
            gain_cap = int(u[x_star]) - int(u[y_star])
            if gain_cap <= 0:
                break
            swap = None
            if gain_cap - b * int(adj[x_star, y_star]) > 0:
                swap = (x_star, y_star)
            else:
                # all adjacent pairs are non-improving here; scan for a
                # non-adjacent pair with positive u difference
                y_floor = int(u[y_star])
                for x in np.argsort(-ux, kind="stable"):
                    x = int(x)
                    if not in_x[x] or int(u[x]) <= y_floor:
                        break
                    cand = np.where(~in_x & (adj[x] == 0), u, POS)
                    y = int(np.argmin(cand))
                    if int(cand[y]) < int(u[x]):
                        swap = (x, y)
                        break
            if swap is None:
                break
            x, y = swap
            in_x[x] = False
            in_x[y] = True
            rx = adj[x].astype(np.int64)
            ry = adj[y].astype(np.int64)
            dx += ry - rx
            u += b * (rx - ry)
        else:
            raise VerificationError("swap search exceeded its potential bound")

    bx = np.flatnonzero(in_x & (u > 0))
    x_mask = 0
    for v in np.flatnonzero(in_x):
        x_mask |= 1 << int(v)
    y_mask = ((1 << n) - 1) ^ x_mask
    x_set = from_mask(x_mask)
    y_set = from_mask(y_mask)
    if bx.size == 0:
        _certify_relative(g, q, x_mask, "variant i")
        return QFullOutcome("i", q, set_q=x_set, x_side=x_set, y_side=y_set)
    by = np.flatnonzero(~in_x & (u < 0))
    if by.size == 0:
        _certify_relative(g, 1 - q, y_mask, "variant ii")
        return QFullOutcome("ii", q, set_1mq=y_set, x_side=x_set, y_side=y_set)
    x0 = int(bx[0])
    y0 = int(by[0])
    grown_x = x_mask | (1 << y0)
    grown_y = y_mask | (1 << x0)
    _certify_relative(g, q, grown_x, "variant iii (q side)")
    _certify_relative(g, 1 - q, grown_y, "variant iii (1-q side)")
    return QFullOutcome("iii", q, set_q=from_mask(grown_x),
                        set_1mq=from_mask(grown_y), x_side=x_set, y_side=y_set)


def _certify_relative(g: Graph, q: Fraction, mask: int, label: str) -> None:
    ok, bad = is_relatively_full(g, q, mask)
    if not ok:
        raise VerificationError(f"{label} witness not relatively {q}-full at vertex {bad}")


def half_full(g: Graph, seed: Optional[int] = None) -> RelativelyFullResult:
    """A relatively half-full subgraph on floor(n/2) or floor(n/2)+1
    vertices: variant i gives ceil(n/2), variant ii floor(n/2), and
    from variant iii we keep the (1-q) side, which has floor(n/2)+1."""
    out = qfull_partition(g, Fraction(1, 2), seed=seed)
    if out.variant == "i":
        chosen = out.set_q
    elif out.variant == "ii":
        chosen = out.set_1mq
    else:
        chosen = out.set_1mq
    assert chosen is not None
    return RelativelyFullResult(chosen, len(chosen), Fraction(1, 2))


def one_over_r_full(g: Graph, r: int, seed: Optional[int] = None) -> RelativelyFullResult:
    """A relatively (1/r)-full subgraph on floor(n/r) to ceil(n/r)+1
    vertices: every member keeps at least a 1/r share of its degree.

    Powers of two run log2(r) rounds of half_full, composing the
    degree shares; other r peel one layer at a time via
    qfull_partition at 1/r (variants i/iii finish immediately, variant
    ii recurses into the (1-1/r)-full side with r - 1).
    """
    if r < 1:
        raise PreconditionError(f"r must be a positive integer, got {r}")
    n0 = g.n
    labels = tuple(range(n0))
    cur = g
    if r == 1:
        final = frozenset(range(n0))
    elif r & (r - 1) == 0:
        t = r.bit_length() - 1
        for level in range(t):
            sub_seed = None if seed is None else split_seed(seed, level)
            res = half_full(cur, seed=sub_seed)
            cur, sub = induced_subgraph(cur, res.vertices)
            labels = tuple(labels[j] for j in sub)
        final = frozenset(labels)
    else:
        rr = r
        chosen: Optional[frozenset[int]] = None
        level = 0
        while rr > 1:
            sub_seed = None if seed is None else split_seed(seed, level)
            out = qfull_partition(cur, Fraction(1, rr), seed=sub_seed)
            if out.variant == "ii":
                assert out.set_1mq is not None
                cur, sub = induced_subgraph(cur, out.set_1mq)
                labels = tuple(labels[j] for j in sub)
                rr -= 1
                level += 1
                continue
            chosen = out.set_q
            break
        if chosen is None:
            final = frozenset(labels)
        else:
            final = frozenset(labels[j] for j in chosen)

    mask = to_mask(final, n0)
    ok, bad = is_relatively_full(g, Fraction(1, r), mask)
    if not ok:
        raise VerificationError(f"1/{r}-full witness fails at vertex {bad}")
    lo = n0 // r
    hi = -((-n0) // r) + 1
    if not lo <= len(final) <= hi:
        raise VerificationError(
            f"1/{r}-full witness size {len(final)} outside [{lo}, {hi}]")
    return RelativelyFullResult(final, len(final), Fraction(1, r))


def two_thirds_size_floor(n: int, p) -> int:
    """Smallest integer s with 64 (s+1)^3 den^2 >= (den-num)^2 n^2,
    the exact integer form of s >= (1-p)^(2/3) n^(2/3) / 4 - 1."""
    p = Fraction(p)
    num, den = p.numerator, p.denominator
    rhs = (den - num) ** 2 * n * n
    s = 0
    while 64 * (s + 1) ** 3 * den * den < rhs:
        s += 1
    return s


def full_two_thirds(g: Graph) -> FullSubgraphResult:
    """Peel minimum-degree vertices, switching to one_over_r_full at
    the first degree-aligned step; the output is full at p = density
    and has at least (1-p)^(2/3) n^(2/3) / 4 - 1 vertices.

    Requires n^(-2/3) < p < 1 - n^(-1/7) (checked exactly; n <= 2
    short-circuits to V(G), which is full at its own density). With
    2^t the least power of two whose cube clears n/(1-p)^2, a step on
    s vertices is aligned when the threshold d = ceil(p(s-1)) has
    remainder d mod 2^t at most (1-p)2^t and the current minimum
    degree is within that remainder of d; then a relatively
    (1/2^t)-full subgraph of the survivor is automatically full at p.
    Past ceil(n/2) steps the procedure continues as plain peeling.
    """
    n = g.n
    p = density(g)
    num, den = p.numerator, p.denominator
    if n <= 2:
        # any graph on <= 2 vertices is full at its own density, and
        # the p-range below is empty there anyway
        full_mask = (1 << n) - 1
        return FullSubgraphResult(frozenset(range(n)), n, p,
                                  _min_degree_within(g, full_mask),
                                  Fraction(0), ())
    if num ** 3 * n * n <= den ** 3:
        raise PreconditionError(
            f"density {p} is at most n^(-2/3); use small_p_full instead")
    if (den - num) ** 7 * n <= den ** 7:
        raise PreconditionError(
            f"density {p} is at least 1 - n^(-1/7); no size guarantee applies")
    # smallest t with (1-p)^(-2/3) n^(1/3) <= 2^t, i.e. cubed and
    # cleared: 2^(3t) (den-num)^2 >= n den^2; doubling keeps 2^t below
    # twice the left-hand side
    t = 0
    while (1 << (3 * t)) * (den - num) ** 2 < n * den * den:
        t += 1
    r = 1 << t
    s_min = two_thirds_size_floor(n, p)

    peel = _Peeler(g)
    trace: list[int] = []
    result_mask: Optional[int] = None
    for _ in range(1, (n + 1) // 2 + 1):
        s = peel.count
        dmin, vmin = peel.peek_min()
        if dmin * den >= num * (s - 1):
            result_mask = peel.alive
            break
        d_i = -((-num * (s - 1)) // den)
        r_i = d_i % r
        if r_i * den <= (den - num) * r and dmin >= d_i - r_i + 1:
            sub, sub_labels = induced_subgraph(g, peel.alive)
            rel = one_over_r_full(sub, r)
            result_mask = to_mask((sub_labels[j] for j in rel.vertices), n)
            break
        peel.delete(vmin)
        trace.append(vmin)
    if result_mask is None:
        while True:
            s = peel.count
            dmin, vmin = peel.peek_min()
            if dmin * den >= num * (s - 1):
                result_mask = peel.alive
                break
            peel.delete(vmin)
            trace.append(vmin)

    ok, bad = is_full(g, p, result_mask)
    if not ok:
        raise VerificationError(f"output not full at vertex {bad}")
    size = result_mask.bit_count()
    if size < s_min:
        raise VerificationError(f"output size {size} below the bound {s_min}")
    return FullSubgraphResult(from_mask(result_mask), size, p,
                              _min_degree_within(g, result_mask),
                              Fraction(s_min), tuple(trace))


def small_p_size_floor(n: int, p) -> int:
    """Smallest integer c with (c+1)^2 den >= num n^2, the exact
    integer form of c >= p^(1/2) n - 1."""
    p = Fraction(p)
    c_plus_1 = ceil_sqrt_frac(Fraction(p.numerator * n * n, p.denominator))
    return max(0, c_plus_1 - 1)


def small_p_full(g: Graph) -> FullSubgraphResult:
    """Sparse-regime finder for p <= n^(-2/3): drop isolated vertices,
    then peel spanning-forest leaves (each removal spawns at most one
    new isolated vertex, removed alongside) until the order first
    lands in [p^(1/2) n - 1, p^(1/2) n + 1]. Steps shrink the order by
    at most 2 and the window always contains two integers, so it
    cannot be jumped; the result has minimum degree >= 1, which is
    full because p(m-1) <= p^(3/2) n <= 1 here. p = 0 and n <= 2
    return V(G) outright."""
    n = g.n
    p = density(g)
    num, den = p.numerator, p.denominator
    if num == 0 or n <= 2:
        full_mask = (1 << n) - 1
        return FullSubgraphResult(frozenset(range(n)), n, p,
                                  _min_degree_within(g, full_mask),
                                  Fraction(0), ())
    if num ** 3 * n * n > den ** 3:
        raise PreconditionError(
            f"density {p} exceeds n^(-2/3); use full_two_thirds instead")
    nn = num * n * n

    def lower_ok(c: int) -> bool:
        return (c + 1) * (c + 1) * den >= nn

    def upper_ok(c: int) -> bool:
        return c <= 1 or (c - 1) * (c - 1) * den <= nn

    trace = [v for v in range(n) if g.degrees[v] == 0]
    alive = 0
    for v in range(n):
        if g.degrees[v] > 0:
            alive |= 1 << v
    count = alive.bit_count()

    # spanning forest by depth-first search over the live graph
    fadj = [0] * n
    seen = 0
    for root in iter_bits(alive):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        stack = [root]
        while stack:
            v = stack.pop()
            fresh = g.adj[v] & alive & ~seen
            seen |= fresh
            for u in iter_bits(fresh):
                fadj[v] |= 1 << u
                fadj[u] |= 1 << v
                stack.append(u)

    for _ in range(n + 1):
        if lower_ok(count) and upper_ok(count):
            break
        if not lower_ok(count):
            raise VerificationError("order fell below the target window")
        leaf = None
        for v in iter_bits(alive):
            if fadj[v].bit_count() == 1:
                leaf = v
                break
        if leaf is None:
            raise VerificationError("no forest leaf while above the window")
        w = fadj[leaf].bit_length() - 1
        alive ^= 1 << leaf
        fadj[w] &= ~(1 << leaf)
        fadj[leaf] = 0
        count -= 1
        trace.append(leaf)
        if (g.adj[w] & alive).bit_count() == 0:
            alive ^= 1 << w
            fadj[w] = 0
            count -= 1
            trace.append(w)
    else:
        raise VerificationError("leaf peeling failed to reach the window")

    ok, bad = is_full(g, p, alive)
    if not ok:
        raise VerificationError(f"output not full at vertex {bad}")
    return FullSubgraphResult(from_mask(alive), count, p,
                              _min_degree_within(g, alive),
                              Fraction(small_p_size_floor(n, p)), tuple(trace))


def largest_full_or_cofull(g: Graph, method: str = "oracle",
                           cap: int = EXACT_CAP_DEFAULT,
                           seed: int = 0) -> GValue:
    """Best of the largest full subgraph of G and of its complement
    (the latter equals the largest co-full subgraph of G), at
    p = density(G). method="oracle" is exact under the cap;
    method="heuristic" takes the best verified candidate from the
    polynomial finders on both orientations. Ties prefer the full side."""
    p = density(g)
    if method == "oracle":
        f_res = oracle_largest_full(g, p, "full", cap)
        co_res = oracle_largest_full(complement(g), 1 - p, "full", cap)
        if co_res.size > f_res.size:
            return GValue(co_res.size, "cofull", co_res.vertices, p)
        return GValue(f_res.size, "full", f_res.vertices, p)
    if method != "heuristic":
        raise ValueError(f"method must be 'oracle' or 'heuristic', got {method!r}")

    best: Optional[tuple[int, int, frozenset[int], str]] = None

    def consider(size: int, side: str, vertices: frozenset[int]) -> None:
        nonlocal best
        rank = (size, 1 if side == "full" else 0)
        if best is None or rank > (best[0], best[1]) or (
                rank == (best[0], best[1])
                and sorted(vertices) < sorted(best[2])):
            best = (size, rank[1], vertices, side)

    for side, h in (("full", g), ("cofull", complement(g))):
        dens = density(h)
        res = greedy_full(h, dens)
        consider(res.size, side, res.vertices)
        try:
            res = full_two_thirds(h)
            consider(res.size, side, res.vertices)
        except PreconditionError:
            pass
        try:
            res = small_p_full(h)
            consider(res.size, side, res.vertices)
        except PreconditionError:
            pass
        hf = half_full(h, seed=seed)
        ok, _ = is_full(h, dens, hf.vertices)
        if ok:
            consider(hf.size, side, hf.vertices)
    assert best is not None
    return GValue(best[0], best[3], best[2], p)
