"""Majority bootstrap percolation and its correspondence with
relatively half-full subgraphs.

A vertex becomes infected once strictly more than half of its
neighbors are infected (degree-0 vertices never catch it). The fixed
points are exact: an initial set infects everything if and only if no
nonempty relatively half-full subgraph avoids it, and a nonempty final
uninfected set is itself relatively half-full. full_infection_*
computes the probability that a p-random initial set infects all of G,
by Monte Carlo or exactly by subset enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, PreconditionError, from_mask, iter_bits, to_mask
from .rng import split_seed, uniform_u64

THETA_CAP_DEFAULT = 16


@dataclass(frozen=True)
class PercolationState:
    infected: frozenset[int]
    rounds: int
    stabilized: bool


@dataclass(frozen=True)
class InfectionEstimate:
    estimate: Fraction
    half_width: float
    trials: int
    successes: int


def bootstrap_percolate(g: Graph, initial) -> PercolationState:
    """Run synchronous rounds until no new vertex is infected; at most
    n rounds since each round infects at least one vertex."""
    infected = initial if isinstance(initial, int) else to_mask(initial, g.n)
    full = (1 << g.n) - 1
    rounds = 0
    while True:
        add = 0
        for v in iter_bits(full & ~infected):
            if 2 * (g.adj[v] & infected).bit_count() > g.degrees[v]:
                add |= 1 << v
        if not add:
            break
        infected |= add
        rounds += 1
    return PercolationState(from_mask(infected), rounds, True)


def is_relatively_half_full_mask(g: Graph, mask: int) -> bool:
    """Nonempty and every member keeps at least half its degree inside."""
    if not mask:
        return False
    for v in iter_bits(mask):
        if 2 * (g.adj[v] & mask).bit_count() < g.degrees[v]:
            return False
    return True


def surviving_half_full(g: Graph, initial) -> frozenset[int]:
    """The final uninfected set; when nonempty it is relatively
    half-full, certifying that percolation from initial cannot finish."""
    state = bootstrap_percolate(g, initial)
    mask = to_mask(state.infected, g.n)
    return from_mask(((1 << g.n) - 1) ^ mask)


def sample_initial_mask(n: int, p, seed: int, trial: int) -> int:
    """The trial-th p-random initial infection for the given seed, as
    a bitmask; each vertex independently with probability p via 64-bit
    threshold draws under a per-trial split seed."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"p must lie in [0, 1], got {p}")
    num, den = p.numerator, p.denominator
    if n == 0 or num == 0:
        return 0
    if num == den:
        return (1 << n) - 1
    draws = uniform_u64(split_seed(seed, trial), n)
    keep = draws < np.uint64((num << 64) // den)
    initial = 0
    for v in np.flatnonzero(keep):
        initial |= 1 << int(v)
    return initial


def full_infection_probability(g: Graph, p, trials: int = 1000,
                               seed: int = 0) -> InfectionEstimate:
    """Monte Carlo estimate of the probability that a p-random initial
    infection (each vertex independently) infects all of G. Per-trial
    split seeds make the estimate independent of trial order; the
    half-width is the 95% normal approximation."""
    if trials < 1:
        raise PreconditionError(f"trials must be positive, got {trials}")
    n = g.n
    successes = 0
    for t in range(trials):
        initial = sample_initial_mask(n, p, seed, t)
        state = bootstrap_percolate(g, initial)
        if len(state.infected) == n:
            successes += 1
    est = Fraction(successes, trials)
    var = float(est) * (1.0 - float(est)) / trials
    return InfectionEstimate(est, 1.96 * math.sqrt(var), trials, successes)


def full_infection_probability_exact(g: Graph, p,
                                     cap: int = THETA_CAP_DEFAULT) -> Fraction:
    """Exact full-infection probability: sums p^|I| (1-p)^(n-|I|) over
    initial sets I whose complement contains no nonempty relatively
    half-full subgraph. Enumerates all 2^n vertex subsets; refuses
    n > cap."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"p must lie in [0, 1], got {p}")
    n = g.n
    if n > cap:
        raise PreconditionError(
            f"exact infection probability needs n <= {cap} (got n={g.n})")
    if n == 0:
        return Fraction(1)
    size = 1 << n
    # blocked[mask]: mask contains a nonempty relatively half-full set
    blocked = bytearray(size)
    for mask in range(1, size):
        if is_relatively_half_full_mask(g, mask):
            blocked[mask] = 1
            continue
        m = mask
        while m:
            low = m & -m
            if blocked[mask ^ low]:
                blocked[mask] = 1
                break
            m ^= low
    counts = [0] * (n + 1)
    for mask in range(size):
        if not blocked[mask]:
            counts[mask.bit_count()] += 1
    q = 1 - p
    theta = Fraction(0)
    for k, cnt in enumerate(counts):
        if cnt:
            theta += cnt * p ** (n - k) * q ** k
    return theta
