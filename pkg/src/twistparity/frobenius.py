"""Bad places, Frobenius cycle types and the prime classification.

At a good prime l the degrees of the irreducible factors of f mod l are
the orbit lengths of Frobenius acting on the roots; the class index of l
is (number of orbits) - 1.  Everything downstream (local h-invariants,
parity weights, twist searches) keys off this classification, so results
are cached per (curve hash, l) in an append-only line file that tolerates
a torn final record.
"""

from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass, field

from .curves import CurveSpec, curve_hash
from .errors import BadPrimeError, InvalidInputError
from .modular import Place, factor_degrees, factor_integer, iter_primes
from .ratpoly import RatPoly, rational_roots

__all__ = [
    "SigmaSet",
    "sigma_set",
    "PrimeClass",
    "classify_prime",
    "prime_scan",
    "PrimeCache",
    "GaloisVerdict",
    "galois_classify",
    "disc_is_square",
]


@dataclass(frozen=True)
class SigmaSet:
    """The bad set: the real place, 2, and the primes of lead/denominators/disc."""

    finite: tuple

    def __contains__(self, place) -> bool:
        if isinstance(place, Place):
            return place.is_infinity or place.q in self.finite
        return place in self.finite

    def iter_places(self):
        yield Place.infinity()
        for q in self.finite:
            yield Place.finite(q)

    @property
    def odd_primes(self):
        return tuple(q for q in self.finite if q != 2)

    def __str__(self):
        return "{inf, " + ", ".join(str(q) for q in self.finite) + "}"


_sigma_cache: dict = {}


def sigma_set(curve: CurveSpec) -> SigmaSet:
    """Minimal checkable bad set for the curve (always contains 2)."""
    key = curve_hash(curve)
    hit = _sigma_cache.get(key)
    if hit is not None:
        return hit
    primes = {2}
    lead = curve.f.lead
    primes.update(factor_integer(lead.numerator))
    primes.update(factor_integer(lead.denominator))
    for c in curve.f.coeffs:
        if c.denominator != 1:
            primes.update(factor_integer(c.denominator))
    primes.update(factor_integer(curve.discriminant().numerator))
    out = SigmaSet(tuple(sorted(primes)))
    _sigma_cache[key] = out
    return out


@dataclass(frozen=True)
class PrimeClass:
    """A good prime with its Frobenius cycle type and class index i = b - 1."""

    l: int
    lengths: tuple
    i: int

    @property
    def orbit_count(self) -> int:
        return len(self.lengths)


class PrimeCache:
    """Append-only cycle-type cache: lines of ``<curve_hash> <l> <l1,l2,...>``.

    Loading stops at the first corrupt record and truncates the file back
    to the valid prefix, so a torn write never poisons later runs.  A
    single lock serializes writers within the process.
    """

    def __init__(self, path=None):
        self.path = path
        self._mem: dict = {}
        self._lock = threading.Lock()
        if path is not None and os.path.exists(path):
            self._load()

    def _load(self):
        good = []
        with open(self.path, "r", encoding="utf-8") as fh:
            raw = fh.read()
        for line in raw.splitlines():
            try:
                h, ls, lens = line.split()
                l = int(ls)
                lengths = tuple(int(x) for x in lens.split(","))
                if not lengths or any(x < 1 for x in lengths):
                    raise ValueError
            except ValueError:
                break
            self._mem[(h, l)] = lengths
            good.append(line)
        cleaned = "".join(s + "\n" for s in good)
        if cleaned != raw:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(cleaned)

    def get(self, key, l):
        return self._mem.get((key, l))

    def put(self, key, l, lengths):
        with self._lock:
            if (key, l) in self._mem:
                return
            self._mem[(key, l)] = tuple(lengths)
            if self.path is not None:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(f"{key} {l} {','.join(str(x) for x in lengths)}\n")


def classify_prime(
    curve: CurveSpec, l: int, cache: PrimeCache | None = None, seed: int = 0
) -> PrimeClass:
    """Cycle type and class index of a good prime l."""
    if l in sigma_set(curve):
        raise BadPrimeError(f"{l} is a bad prime for this curve")
    key = curve_hash(curve)
    lengths = cache.get(key, l) if cache is not None else None
    if lengths is None:
        # stable per-(seed, curve, l) stream; never derived from salted hash()
        rng = random.Random(((seed & 0xFFFFFFFF) << 96) ^ (int(key, 16) << 32) ^ l)
        lengths = factor_degrees(curve.f, l, rng)
        if cache is not None:
            cache.put(key, l, lengths)
    return PrimeClass(l=l, lengths=tuple(lengths), i=len(lengths) - 1)


def prime_scan(
    curve: CurveSpec,
    start: int,
    stop: int,
    predicate=None,
    cache: PrimeCache | None = None,
    seed: int = 0,
    threads: int = 1,
    prime_filter=None,
):
    """Good primes in [start, stop) whose PrimeClass satisfies ``predicate``.

    ``prime_filter`` is applied to the bare prime before classification
    (use it for congruence or symbol conditions, which are much cheaper
    than factoring f mod l).  Yields PrimeClass records in increasing
    prime order; resumable by calling again with start = last_prime + 1.
    With threads > 1 the range is partitioned into chunks classified by a
    worker pool and merged back in order.
    """
    sigma = sigma_set(curve)

    def classify_good(l):
        if l in sigma:
            return None
        if prime_filter is not None and not prime_filter(l):
            return None
        pc = classify_prime(curve, l, cache=cache, seed=seed)
        if predicate is None or predicate(pc):
            return pc
        return None

    if threads <= 1:
        for l in iter_primes(start, stop):
            pc = classify_good(l)
            if pc is not None:
                yield pc
        return

    from concurrent.futures import ThreadPoolExecutor

    chunk = 2000
    with ThreadPoolExecutor(max_workers=threads) as pool:
        edges = list(range(start, stop, chunk)) + [stop]
        spans = list(zip(edges, edges[1:]))

        def work(span):
            lo, hi = span
            return [pc for pc in (classify_good(l) for l in iter_primes(lo, hi)) if pc]

        for res in pool.map(work, spans):
            yield from res


# ---------------------------------------------------------------------------
# heuristic Galois classification


@dataclass(frozen=True)
class GaloisVerdict:
    """Certified-or-honest label for Gal(f) with the evidence that produced it."""

    label: str  # Sn_certified | An_certified | inside_An | unknown
    evidence: dict = field(compare=False, default_factory=dict)


def disc_is_square(curve: CurveSpec) -> bool:
    d = curve.discriminant()
    if d <= 0:
        return False
    a = _isqrt_exact(d.numerator)
    b = _isqrt_exact(d.denominator)
    return a is not None and b is not None


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def _looks_reducible(curve: CurveSpec) -> bool:
    if len(curve.declared_factors) > 1:
        return True
    return bool(rational_roots(curve.f)) if curve.f.degree > 1 else False


def galois_classify(
    curve: CurveSpec, sample_bound: int, cache: PrimeCache | None = None, seed: int = 0
) -> GaloisVerdict:
    """Classify Gal(f) from the disc-square test plus sampled cycle types.

    Only standard sufficient criteria are used, so a certified label is
    trustworthy while everything else degrades to inside_An / unknown.
    Sn needs the disc to be a nonsquare plus an n-cycle, an (n-1)-cycle
    and a transposition-type pattern; An needs a square disc plus an
    n-cycle and an (n-2)-cycle with fixed points.
    """
    n = curve.degree
    square = disc_is_square(curve)
    evidence: dict = {"disc_square": square, "sample_bound": sample_bound}
    if _looks_reducible(curve):
        evidence["note"] = "f reducible over Q"
        return GaloisVerdict("unknown", evidence)

    seen: dict = {}
    first_at: dict = {}
    for pc in prime_scan(curve, 2, sample_bound + 1, cache=cache, seed=seed):
        t = pc.lengths
        if t not in seen:
            seen[t] = pc.l
        for name, ok in _pattern_tests(t, n):
            if ok and name not in first_at:
                first_at[name] = pc.l
    evidence["patterns"] = dict(sorted(first_at.items()))
    evidence["distinct_types"] = len(seen)

    has = first_at.__contains__
    if not square:
        if has("n_cycle") and has("n_minus_1_cycle") and (
            has("transposition") or has("transposition_power")
        ):
            return GaloisVerdict("Sn_certified", evidence)
        return GaloisVerdict("unknown", evidence)
    if has("n_cycle") and has("n_minus_2_cycle"):
        return GaloisVerdict("An_certified", evidence)
    return GaloisVerdict("inside_An", evidence)


def _pattern_tests(t: tuple, n: int):
    """Cycle-type patterns consumed by the certification rules."""
    counts: dict = {}
    for x in t:
        counts[x] = counts.get(x, 0) + 1
    yield "n_cycle", t == (n,)
    yield "n_minus_1_cycle", n > 2 and sorted(t) == sorted((n - 1, 1))
    yield "transposition", counts.get(2, 0) == 1 and counts.get(1, 0) == n - 2
    # one 2-cycle, one odd prime q-cycle with q > n/2, rest fixed points:
    # the q-th power of such a permutation is a transposition
    odd_big = [x for x in t if x % 2 == 1 and x > n / 2 and _is_small_prime(x)]
    yield "transposition_power", (
        counts.get(2, 0) == 1
        and len(odd_big) == 1
        and counts.get(1, 0) == n - 2 - odd_big[0]
        and len(t) == n - odd_big[0]
    )
    yield "n_minus_2_cycle", n > 4 and sorted(t) == sorted((n - 2, 1, 1)) or (
        n == 3 and t == (1, 1, 1)
    )


def _is_small_prime(x: int) -> bool:
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True
