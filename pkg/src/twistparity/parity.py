"""Local parity invariants h_v / omega_v, the flip predictor and disparity.

The parity of a twisted Selmer rank moves relative to the untwisted one
by sum_v h_v(chi_v) mod 2, and that sum is controlled place-by-place by
the weight omega_v(chi) = (-1)^h_v(chi) * chi_v(disc).  At good primes
h is computable from the Frobenius cycle type; at the real place it is
k1 - 1 for the sign character; at finite bad places no algorithm exists
at this level, so values there are user-supplied tables (LocalProfile)
and every output that consumed a missing entry says so in its status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (
    LocalBehavior,
    QuadTwist,
    enumerate_characters,
    local_behavior,
    local_classes,
    local_square_class,
    sigma_trivial,
)
from .curves import CurveSpec
from .errors import (
    BadPrimeError,
    InvalidInputError,
    ResourceLimitError,
    UnknownProfileError,
)
from .frobenius import PrimeCache, classify_prime, sigma_set
from .modular import Place, factor_integer, hilbert_symbol, is_squarefree
from .ratpoly import real_root_signature

__all__ = [
    "LocalProfile",
    "infinity_profile",
    "good_prime_h",
    "omega_v",
    "ParityVerdict",
    "parity_flip",
    "global_consistency_check",
    "delta_v",
    "delta_inf_closed_form",
    "DisparityReport",
    "disparity",
    "DensityResult",
    "density_scan",
]


@dataclass(frozen=True)
class LocalProfile:
    """h_v values over the local character classes at one place.

    Keys are the canonical square-class representatives; a value of None
    marks an entry as unknown.  The trivial class must carry h = 0.
    """

    place: Place
    table: dict = field(compare=False)

    def __post_init__(self):
        labels = local_classes(self.place)
        for k in self.table:
            if k not in labels:
                raise InvalidInputError(
                    f"label {k} is not a canonical class at place {self.place}"
                )
        if self.table.get(1, 0) not in (0, None):
            raise InvalidInputError("h(trivial) must be 0")
        object.__setattr__(self, "table", dict(self.table))
        self.table.setdefault(1, 0)

    def h(self, label: int):
        """h for a class label, or None when unknown."""
        if label == 1:
            return 0
        return self.table.get(label)

    def fully_specified(self) -> bool:
        return all(self.h(k) is not None for k in local_classes(self.place))

    def unknown_labels(self):
        return tuple(k for k in local_classes(self.place) if self.h(k) is None)


def infinity_profile(curve: CurveSpec) -> LocalProfile:
    """Auto-filled real-place table: h(sign) = k1 - 1."""
    _, k1, _ = real_root_signature(curve.f)
    return LocalProfile(Place.infinity(), {1: 0, -1: k1 - 1})


def good_prime_h(
    curve: CurveSpec,
    l: int,
    behavior: LocalBehavior,
    cache: PrimeCache | None = None,
    seed: int = 0,
) -> int:
    """h_l(chi) at a good prime: 0 unless chi is ramified, then b - 1."""
    if l in sigma_set(curve):
        raise BadPrimeError(f"{l} is a bad prime for this curve")
    if behavior in (LocalBehavior.TRIVIAL, LocalBehavior.UNRAMIFIED_NONTRIVIAL):
        return 0
    if behavior == LocalBehavior.RAMIFIED:
        return classify_prime(curve, l, cache=cache, seed=seed).i
    raise InvalidInputError(f"behavior {behavior} does not occur at a finite prime")


def _profile_for(curve, place, profiles):
    if place.is_infinity:
        return infinity_profile(curve)
    if profiles is None:
        return None
    return profiles.get(place)


def omega_v(curve: CurveSpec, place: Place, label: int, profile: LocalProfile | None):
    """(-1)^h_v(chi) * chi_v(disc) for the class label, or None when h unknown.

    chi_v(disc) is evaluated as the Hilbert symbol (label, disc)_v, which
    only depends on the square class of the label.
    """
    if place not in sigma_set(curve):
        raise InvalidInputError("omega_v is defined at places of the bad set")
    if label not in local_classes(place):
        raise InvalidInputError(f"label {label} is not canonical at {place}")
    if place.is_infinity:
        profile = infinity_profile(curve)
    if label == 1:
        return 1
    if profile is None:
        return None
    h = profile.h(label)
    if h is None:
        return None
    chi_of_disc = hilbert_symbol(label, curve.discriminant(), place)
    return (-1) ** h * chi_of_disc


@dataclass(frozen=True)
class ParityVerdict:
    """flip = product of omega_v over the bad set; +1 means parity preserved.

    status 'exact' when every consumed h-entry was known, 'relative_only'
    when the twist is locally trivial on the whole bad set (no local data
    needed), 'unknown' with the missing places otherwise (flip is None).
    """

    flip: int | None
    status: str
    missing: tuple = ()


def parity_flip(
    curve: CurveSpec, d: QuadTwist, profiles: dict | None = None
) -> ParityVerdict:
    sigma = sigma_set(curve)
    if d.is_trivial:
        return ParityVerdict(1, "exact")
    if sigma_trivial(d, sigma):
        return ParityVerdict(1, "relative_only")
    flip = 1
    missing = []
    for place in sigma.iter_places():
        label = local_square_class(d, place)
        w = omega_v(curve, place, label, _profile_for(curve, place, profiles))
        if w is None:
            missing.append(place)
        else:
            flip *= w
    if missing:
        return ParityVerdict(None, "unknown", tuple(missing))
    return ParityVerdict(flip, "exact")


def global_consistency_check(
    curve: CurveSpec,
    d: QuadTwist,
    cache: PrimeCache | None = None,
    seed: int = 0,
) -> bool:
    """Check (-1)^(sum of good-prime h over l | d) = prod_Sigma (d, disc)_v.

    The left side goes through finite-field factorization (cycle types),
    the right side through Hilbert symbols; the identity is a theorem, so
    any False return is a bug in one of the two pipelines.
    """
    sigma = sigma_set(curve)
    hsum = 0
    for l in factor_integer(abs(d.d)):
        if l not in sigma and l != 2:
            hsum += good_prime_h(curve, l, LocalBehavior.RAMIFIED, cache, seed)
    lhs = (-1) ** hsum
    rhs = 1
    disc = curve.discriminant()
    for place in sigma.iter_places():
        rhs *= hilbert_symbol(d.d, disc, place)
    return lhs == rhs


# ---------------------------------------------------------------------------
# disparity


def delta_v(curve: CurveSpec, place: Place, profile: LocalProfile | None) -> Fraction:
    """Average of omega_v over the local character group (2, 8 or 4 classes)."""
    labels = local_classes(place)
    prof = infinity_profile(curve) if place.is_infinity else profile
    missing = []
    total = 0
    for label in labels:
        w = omega_v(curve, place, label, prof)
        if w is None:
            missing.append((place, label))
        else:
            total += w
    if missing:
        raise UnknownProfileError(missing)
    return Fraction(total, len(labels))


def delta_inf_closed_form(n: int) -> Fraction:
    """delta at the real place depends only on n mod 4: 1 or 0."""
    if n % 2 == 0:
        raise InvalidInputError("odd degree required")
    return Fraction(1) if n % 4 == 1 else Fraction(0)


@dataclass(frozen=True)
class DisparityReport:
    per_place: dict
    delta: Fraction
    even_density: Fraction
    r1_parity: int

    def as_json_dict(self):
        return {
            "delta_v": {str(p): str(v) for p, v in self.per_place.items()},
            "delta": str(self.delta),
            "even_density": str(self.even_density),
            "r1_parity": {"value": self.r1_parity, "provenance": "user"},
        }


def disparity(
    curve: CurveSpec, profiles: dict | None, r1_parity: int
) -> DisparityReport:
    """delta = (-1)^r1 * prod delta_v and the predicted even-parity density."""
    sigma = sigma_set(curve)
    per_place = {}
    prod = Fraction(1)
    for place in sigma.iter_places():
        dv = delta_v(curve, place, _profile_for(curve, place, profiles))
        per_place[place] = dv
        prod *= dv
    delta = Fraction((-1) ** (r1_parity % 2)) * prod
    return DisparityReport(per_place, delta, (1 + delta) / 2, r1_parity % 2)


# ---------------------------------------------------------------------------
# density scans


@dataclass(frozen=True)
class DensityResult:
    mode: str  # exhaustive | monte_carlo | sigma_trivial_only
    total: int
    even_count: int
    fraction_even: Fraction
    flip_average: Fraction
    r1_parity: int
    seed: int | None = None
    bound: int | None = None
    warning: str | None = None

    def as_json_dict(self):
        out = {
            "mode": self.mode,
            "total": self.total,
            "even_count": self.even_count,
            "fraction_even": str(self.fraction_even),
            "flip_average": str(self.flip_average),
            "r1_parity": {"value": self.r1_parity, "provenance": "user"},
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.bound is not None:
            out["bound"] = self.bound
        if self.warning:
            out["warning"] = self.warning
        return out


_FALLBACK_SAMPLE = 2000
_FALLBACK_BOUND = 10**6


def _sigma_trivial_congruences(n: int, sigma) -> bool:
    """Sigma-triviality by congruences alone; exact on squarefree n."""
    from .modular import kronecker_symbol

    if n <= 0 or n % 8 != 1:
        return False
    return all(kronecker_symbol(n, q) == 1 for q in sigma.odd_primes)


def _omega_tables(curve, profiles):
    """Per-place {label: omega} maps; None when some entry is unknown."""
    sigma = sigma_set(curve)
    tables = {}
    for place in sigma.iter_places():
        prof = _profile_for(curve, place, profiles)
        tab = {}
        for label in local_classes(place):
            w = omega_v(curve, place, label, prof)
            if w is None:
                return None
            tab[label] = w
        tables[place] = tab
    return tables


def density_scan(
    curve: CurveSpec,
    profiles: dict | None = None,
    max_norm: int | None = None,
    sample: int | None = None,
    bound: int | None = None,
    r1_parity: int = 0,
    seed: int = 0,
    cap: int = 1 << 20,
) -> DensityResult:
    """Fraction of twists with even predicted Selmer parity.

    Exhaustive mode enumerates the finite group of characters of norm
    below ``max_norm``; Monte-Carlo mode draws ``sample`` uniform
    squarefree d in [-bound, bound] with the recorded seed.  When the
    profiles leave some omega undetermined the scan falls back to the
    Sigma-trivial subgroup (every flip is +1 there) and says so.
    """
    if (max_norm is None) == (sample is None):
        raise InvalidInputError("choose exactly one of max_norm / sample")
    r1 = r1_parity % 2
    tables = _omega_tables(curve, profiles)
    sigma = sigma_set(curve)

    def flip_of(d: QuadTwist) -> int:
        f = 1
        for place, tab in tables.items():
            f *= tab[local_square_class(d, place)]
        return f

    if max_norm is not None:
        try:
            chars = enumerate_characters(max_norm, cap=cap)
        except ResourceLimitError:
            # family too large to enumerate: documented Monte-Carlo fallback
            fallback = density_scan(
                curve,
                profiles,
                sample=_FALLBACK_SAMPLE,
                bound=_FALLBACK_BOUND,
                r1_parity=r1,
                seed=seed,
            )
            warn = (
                f"norm bound {max_norm} exceeds the enumeration cap; "
                f"Monte-Carlo fallback over squarefree |d| <= {_FALLBACK_BOUND}"
            )
            return DensityResult(
                mode="monte_carlo_fallback",
                total=fallback.total,
                even_count=fallback.even_count,
                fraction_even=fallback.fraction_even,
                flip_average=fallback.flip_average,
                r1_parity=fallback.r1_parity,
                seed=seed,
                bound=_FALLBACK_BOUND,
                warning=(fallback.warning + "; " + warn) if fallback.warning else warn,
            )
        if tables is None:
            kept = [d for d in chars if sigma_trivial(d, sigma)]
            even = len(kept) if r1 == 0 else 0
            return DensityResult(
                mode="sigma_trivial_only",
                total=len(kept),
                even_count=even,
                fraction_even=Fraction(even, len(kept)),
                flip_average=Fraction(1),
                r1_parity=r1,
                warning="incomplete profiles; restricted to the Sigma-trivial subgroup",
            )
        flips = [flip_of(d) for d in chars]
        plus = sum(1 for f in flips if f == 1)
        even = plus if r1 == 0 else len(flips) - plus
        return DensityResult(
            mode="exhaustive",
            total=len(flips),
            even_count=even,
            fraction_even=Fraction(even, len(flips)),
            flip_average=Fraction(sum(flips), len(flips)),
            r1_parity=r1,
        )

    if bound is None or bound < 2:
        raise InvalidInputError("monte-carlo mode needs a bound >= 2")
    rng = random.Random(seed)
    restricted = tables is None
    flips = []
    draws = 0
    while len(flips) < sample:
        draws += 1
        if draws > 100000 * sample + 1000:
            raise ResourceLimitError("rejection sampling is not terminating")
        n = rng.randint(-bound, bound)
        if n == 0:
            continue
        if restricted and not _sigma_trivial_congruences(n, sigma):
            continue  # cheap reject before the squarefree test
        if not is_squarefree(n):
            continue
        if restricted:
            assert sigma_trivial(QuadTwist(n), sigma)
            flips.append(1)
        else:
            flips.append(flip_of(QuadTwist(n)))
    plus = sum(1 for f in flips if f == 1)
    even = plus if r1 == 0 else len(flips) - plus
    return DensityResult(
        mode="monte_carlo_sigma_trivial" if restricted else "monte_carlo",
        total=len(flips),
        even_count=even,
        fraction_even=Fraction(even, len(flips)),
        flip_average=Fraction(sum(flips), len(flips)),
        r1_parity=r1,
        seed=seed,
        bound=bound,
        warning=(
            "incomplete profiles; restricted to Sigma-trivial twists"
            if restricted
            else None
        ),
    )
