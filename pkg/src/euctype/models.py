"""Bounded computational models of the classical infinite examples.

The integers and the polynomial rings over a finite field are explored
through growing finite windows: the least-Euclidean-value fixed point is
rerun on ever larger windows until the reported range stops changing, and
the pair of agreeing windows is returned as a stabilization certificate.
The certificate is honest evidence, not a proof.

The module also houses the symbolic side: order types of ring
descriptions with PID factors and an Artinian part, the additive bounds
for order types of products, and the realization of every ordinal below
omega^2 by a concrete small ring description.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, ResourceError
from .ordinal import Ordinal, natural_sum, omega, omega_power
from .rings import GaloisField, poly_trim


# ---------------------------------------------------------------------------
# windowed bottom function on Z


@dataclass
class StabilizationCertificate:
    window_a: int
    window_b: int


@dataclass
class WindowedBottom:
    values: Dict[object, int]          # reporting-range element -> value (units at 0)
    certificate: StabilizationCertificate


def _integer_window_table(window: int) -> Dict[int, int]:
    """Least-value assignment on 1..window.

    The coset test for b consults only elements of magnitude strictly
    below b: within that range the coset of r modulo b is {r, r-b}, and
    the value of b is one more than the best value available in its worst
    coset (0 counting as instantly available).  Values are symmetric in
    the sign, so only positive representatives are stored.
    """
    phi: Dict[int, int] = {}
    for b in range(1, window + 1):
        worst = 0
        for r in range(1, b):
            best = phi[r]
            other = b - r  # magnitude of r - b, also below b
            if phi[other] < best:
                best = phi[other]
            if best + 1 > worst:
                worst = best + 1
        phi[b] = worst
    return phi


def windowed_bottom_integers(report_bound: int = 1024, start_window: int = 64,
                             growth_factor: int = 2, max_window: int = 1 << 20) -> WindowedBottom:
    """Stabilized least Euclidean values on |n| <= report_bound.

    Units get value 0; the count of binary digits of |n| is this value
    plus one.
    """
    if report_bound < 1:
        raise DomainError("reporting bound must be positive")
    window = max(start_window, 2)
    previous: Optional[Tuple[int, Dict[int, int]]] = None
    while window <= max_window:
        if window >= report_bound:
            table = _integer_window_table(window)
            report = {n: table[n] for n in range(1, report_bound + 1)}
            if previous is not None and previous[1] == report:
                cert = StabilizationCertificate(previous[0], window)
                return WindowedBottom(report, cert)
            previous = (window, report)
        window *= growth_factor
    raise ResourceError(
        f"no stabilization below window {max_window} for reporting bound {report_bound}"
    )


# ---------------------------------------------------------------------------
# windowed bottom function on GF(q)[t]


def _poly_window_table(F: GaloisField, max_degree: int) -> Dict[Tuple[int, ...], int]:
    """Least-value assignment on nonzero polynomials of degree <= max_degree.

    A nonzero multiple of b has degree at least deg b, so the only coset
    member of r below b's degree is r itself: the value of b is one more
    than the largest value at lower degree (and 0 for units).
    """
    phi: Dict[Tuple[int, ...], int] = {}
    max_below = -1  # max value among strictly lower degrees; -1 before degree 0
    for d in range(0, max_degree + 1):
        level = []
        for lower in itertools.product(range(F.size), repeat=d):
            for lead in range(1, F.size):
                p = lower + (lead,)
                level.append(p)
        value = max_below + 1
        for p in level:
            phi[p] = value
        max_below = max(max_below, value)
    return phi


def windowed_bottom_polynomials(q: int, report_degree: int = 10, start_window: int = 8,
                                growth_step: int = 4, max_window: int = 64) -> WindowedBottom:
    """Stabilized least Euclidean values on polynomials over GF(q).

    Degree windows grow additively: a doubling schedule squares the work
    at every step because the carrier is exponential in the degree.
    """
    F = GaloisField(q)
    window = max(start_window, 1)
    previous = None
    while window <= max_window:
        if window >= report_degree:
            table = _poly_window_table(F, window)
            report = {p: v for p, v in table.items() if len(p) - 1 <= report_degree}
            if previous is not None and previous[1] == report:
                cert = StabilizationCertificate(previous[0], window)
                return WindowedBottom(report, cert)
            previous = (window, report)
        window += growth_step
    raise ResourceError(f"no stabilization below degree window {max_window}")


# ---------------------------------------------------------------------------
# semilocal localizations of Z


def _prime_exponent(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _check_primes(primes: Sequence[int]) -> Tuple[int, ...]:
    primes = tuple(sorted(set(primes)))
    if not primes:
        raise DomainError("the prime set must be nonempty")
    for p in primes:
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise DomainError(f"{p} is not prime")
    return primes


def _in_localization(x: Fraction, primes: Sequence[int]) -> bool:
    return all(x.denominator % p for p in primes)


def localization_function(primes: Sequence[int], x: Fraction) -> int:
    """Sum of the exponents of the distinguished primes in the numerator.

    Defined on nonzero elements of the ring of fractions with denominator
    coprime to the prime set.
    """
    primes = _check_primes(primes)
    x = Fraction(x)
    if x == 0:
        raise DomainError("value at zero is not finite")
    if not _in_localization(x, primes):
        raise DomainError(f"{x} is not in the localization away from {primes}")
    return sum(_prime_exponent(abs(x.numerator), p) for p in primes)


@dataclass
class SampledCheck:
    ok: bool
    samples: int
    seed: int
    failures: List[Tuple[Fraction, Fraction]] = field(default_factory=list)


def _localized_divide(primes, a: Fraction, b: Fraction, search: int = 64):
    """Find q in the localization with a = q b + r and r = 0 or smaller value."""
    vb = localization_function(primes, b)
    m = 1
    for p in primes:
        m *= p ** _prime_exponent(abs(b.numerator), p)
    # b = m * unit, so (b) = (m); reduce a modulo m with the denominator
    # inverted mod m
    if m == 1:
        return a / b, Fraction(0)
    num = a.numerator % m
    den_inv = pow(a.denominator, -1, m)
    abar = (num * den_inv) % m
    if abar == 0:
        return a / b, Fraction(0)
    for k in range(-search, search + 1):
        r = Fraction(abar + k * m)
        if r == 0:
            continue
        if localization_function(primes, r) < vb:
            q = (a - r) / b
            if _in_localization(q, primes):
                return q, r
    return None


def check_localization_euclidean(primes: Sequence[int], samples: int = 10_000,
                                 seed: int = 0, height: int = 50) -> SampledCheck:
    """Randomized division check for the exponent-sum function.

    Never a proof: reports the sampled coverage, and every returned
    witness can be reverified independently.
    """
    primes = _check_primes(primes)
    rng = random.Random(seed)

    def sample_element() -> Fraction:
        num = rng.randint(-height, height)
        while True:
            den = rng.randint(1, height)
            if all(den % p for p in primes):
                return Fraction(num, den)

    failures = []
    for _ in range(samples):
        a = sample_element()
        b = sample_element()
        while b == 0:
            b = sample_element()
        if _localized_divide(primes, a, b) is None:
            failures.append((a, b))
    return SampledCheck(not failures, samples, seed, failures)


# ---------------------------------------------------------------------------
# negative length-function findings


@dataclass
class LengthWitness:
    divisor: object
    target: object
    allowed_remainders: Tuple
    description: str


def check_not_l_euclidean_integers() -> LengthWitness:
    """Concrete failure of x -> number-of-prime-factors as a Euclidean
    function on the integers, verified by a complete residue check.

    The divisor is prime, so the allowed remainders are the units and 0;
    the finite set makes the negative check complete rather than sampled.
    """
    b, a = 5, 2
    allowed = (0, 1, -1)               # length below 1 means unit; plus 0
    for r in allowed:
        assert (a - r) % b != 0
    return LengthWitness(b, a, allowed,
                         f"no remainder for {a} modulo {b} among units and zero")


def check_not_l_euclidean_polys(q: int) -> LengthWitness:
    """Same finding for GF(q)[t]: an irreducible quadratic b and target t.

    Allowed remainders are the nonzero constants and 0, and none is
    congruent to t modulo an irreducible quadratic.
    """
    F = GaloisField(q)
    from .rings import poly_is_irreducible, poly_mod

    quad = None
    for c0 in range(F.size):
        for c1 in range(F.size):
            cand = poly_trim((c0, c1, 1))
            if poly_is_irreducible(F, cand):
                quad = cand
                break
        if quad:
            break
    assert quad is not None
    t = (0, 1)
    allowed = tuple([()] + [(c,) for c in range(1, F.size)])
    for r in allowed:
        diff = poly_mod(F, _poly_sub(F, t, r), quad)
        assert poly_trim(diff)  # t - r is never divisible by the quadratic
    return LengthWitness(quad, t, allowed,
                         "no constant or zero remainder for t modulo an "
                         "irreducible quadratic")


def _poly_sub(F, a, b):
    from .rings import poly_add, poly_neg

    return poly_add(F, a, poly_neg(F, b))


# ---------------------------------------------------------------------------
# symbolic order types


PID_TAGS = ("Z",)  # plus any "GF(q)[t]" tag


def _valid_pid_tag(tag: str) -> bool:
    if tag == "Z":
        return True
    return tag.startswith("GF(") and tag.endswith(")[t]")


@dataclass(frozen=True)
class RingSpec:
    """Symbolic ring description: PID factors plus Artinian local lengths."""

    pid_factors: Tuple[str, ...] = ()
    artinian_lengths: Tuple[int, ...] = ()

    def __post_init__(self):
        if not self.pid_factors and not self.artinian_lengths:
            raise DomainError("a ring spec needs at least one factor")
        for tag in self.pid_factors:
            if not _valid_pid_tag(tag):
                raise DomainError(f"unsupported PID factor {tag!r}")
        for n in self.artinian_lengths:
            if n < 1:
                raise DomainError("Artinian local lengths must be >= 1")

    def __str__(self):
        parts = list(self.pid_factors)
        parts += [f"Z/{2 ** n}" for n in self.artinian_lengths]
        return " x ".join(parts)


def order_type_of_spec(spec: RingSpec) -> Ordinal:
    """omega times the PID factor count, plus the total Artinian length.

    Every supported PID factor has order type omega; the PID part of the
    result is a limit ordinal and is at least omega times the factor
    count, both asserted.
    """
    r = len(spec.pid_factors)
    pid_part = omega * r
    assert r == 0 or pid_part.is_limit()
    return pid_part + Ordinal(sum(spec.artinian_lengths))


def product_bounds(order_types: Sequence[Ordinal]) -> Tuple[Ordinal, Ordinal]:
    """(iterated ordinary sum, iterated natural sum): the two bounds on the
    order type of a product in terms of its factors."""
    lower = Ordinal(0)
    upper = Ordinal(0)
    for e in order_types:
        lower = lower + e
        upper = natural_sum(upper, e)
    assert lower <= upper
    return lower, upper


def realize_ordinal(a: Ordinal) -> RingSpec:
    """A small ring description whose order type is the given ordinal.

    Works exactly below omega^2: write a = omega*r + n and take r
    polynomial-ring factors over GF(2) plus a local Artinian part of
    length n.  GF(2)[t] stands in for the classical field-of-coefficients
    examples: any Euclidean domain of order type omega does.
    """
    if a.is_zero:
        raise DomainError("no ring has order type 0")
    if not a < omega_power(2):
        raise DomainError(f"{a} is not realizable by small ring descriptions")
    r = 0
    n = 0
    for (e, c) in a.terms:
        if e == Ordinal(1):
            r = c
        elif e.is_zero:
            n = c
    spec = RingSpec(
        pid_factors=("GF(2)[t]",) * r,
        artinian_lengths=(n,) if n else (),
    )
    assert order_type_of_spec(spec) == a
    return spec
