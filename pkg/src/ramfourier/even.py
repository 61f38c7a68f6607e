"""Even functions mod r in divisor-indexed form, and their transform.

A function that depends on n only through gcd(n, r) is determined by its
tau(r) values on the divisors of r, so everything here works on
divisor-indexed data and never expands to the r residues unless asked
to. Such functions expand over the integer kernel rows C(., d):

    coefficient:  R(d) = phi(d)^{-1} * sum_{n=1..r} f(n) C(n, d)
    inversion:    f(n) = r^{-1} * sum_{d | r} R(d) C(n, d)

Three routes compute the coefficients. `rft` groups the defining r-term
sum by gcd(n, r) = e, collapsing it to tau(r) terms weighted by
phi(r/e). `rft_divisor_form` uses the equivalent division-free sum
R(d) = sum_{e | r} f(r/e) C(r/d, e), which is tau(r)^2 integer
multiply-adds with storage proportional to tau(r); it is the fast path
for large r. `rft_naive` keeps the r-term sum as a slow reference. On
int/Fraction input all three are exact and identical.

The verify_* functions check the classical identities behind all of
this instance by instance and return structured reports rather than
bare booleans, so a counterexample can be printed if one ever fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable

from .arith import divisors, euler_phi
from .errors import CapacityError, DomainError, NotEvenError
from .periodic import ResidueFunction, Scalar, dft, even_witness
from .ramanujan import RamanujanTable, ramanujan_sum

__all__ = [
    "CAUCHY_KERNEL_CAP",
    "EvenFunction",
    "EvenSpectrum",
    "IdentityCheck",
    "VerificationReport",
    "ramanujan_basis",
    "from_periodic",
    "to_periodic",
    "rft",
    "rft_naive",
    "rft_divisor_form",
    "irft",
    "inner_product_even",
    "cauchy_product_even",
    "verify_orthogonality",
    "verify_symmetry",
    "verify_rft_dft_bridge",
    "verify_cauchy_kernel_even",
]

_EXACT_TYPES = (int, Fraction)

# The brute-force kernel verifier is O(tau(r)^2 * r^2); keep it desk-sized.
CAUCHY_KERNEL_CAP = 60


@lru_cache(maxsize=None)
def _table(r: int) -> RamanujanTable:
    return RamanujanTable(r)


def _canonical(v: Scalar) -> Scalar:
    """Collapse a Fraction with denominator 1 to a plain int."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _conj(v: Scalar) -> Scalar:
    return v.conjugate() if isinstance(v, complex) else v


def _checked_divisor_map(r: int, mapping: dict, what: str) -> dict:
    divs = divisors(r)
    if set(mapping) != set(divs):
        missing = sorted(set(divs) - set(mapping))
        extra = sorted(set(mapping) - set(divs))
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unexpected {extra}")
        raise DomainError(
            f"{what} mod {r} needs one value per divisor of {r}: " + ", ".join(detail)
        )
    return {d: mapping[d] for d in divs}


@dataclass(frozen=True)
class EvenFunction:
    """A function even mod r, stored by its values on the divisors of r."""

    r: int
    values: dict[int, Scalar]

    def __post_init__(self):
        object.__setattr__(
            self, "values", _checked_divisor_map(self.r, self.values, "an even function")
        )

    @classmethod
    def from_callable(cls, r: int, fn: Callable[[int], Scalar]) -> "EvenFunction":
        """Tabulate fn on the divisors of r."""
        return cls(r, {d: fn(d) for d in divisors(r)})

    def __call__(self, n: int) -> Scalar:
        """Evaluate at any integer n: f(n) = f(gcd(n, r))."""
        return self.values[gcd(n, self.r)]

    @property
    def is_exact(self) -> bool:
        """True when every value is an int or a Fraction."""
        return all(isinstance(v, _EXACT_TYPES) for v in self.values.values())


@dataclass(frozen=True)
class EvenSpectrum:
    """Transform coefficients of an even function, one per divisor of r."""

    r: int
    coeffs: dict[int, Scalar]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _checked_divisor_map(self.r, self.coeffs, "a spectrum")
        )

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, _EXACT_TYPES) for v in self.coeffs.values())


def _same_modulus(f, g):
    if f.r != g.r:
        raise DomainError(f"modulus mismatch: {f.r} != {g.r}")


def ramanujan_basis(d: int, r: int) -> EvenFunction:
    """The kernel row C(., d) as an even function mod r; d must divide r."""
    if r < 1:
        raise DomainError(f"modulus must be >= 1, got {r}")
    if d < 1 or r % d:
        raise DomainError(f"{d} does not divide {r}")
    return EvenFunction(r, {e: ramanujan_sum(e, d) for e in divisors(r)})


def from_periodic(f: ResidueFunction, tol: float = 1e-12) -> EvenFunction:
    """Restrict an even residue function to its divisor values.

    Raises NotEvenError, naming a witness residue, when f is not even.
    """
    witness = even_witness(f, tol)
    if witness is not None:
        g = gcd(witness, f.r)
        raise NotEvenError(
            f"not even mod {f.r}: f({witness}) = {f.values[witness - 1]!r} "
            f"differs from f(gcd({witness}, {f.r})) = f({g}) = {f.values[g - 1]!r}",
            witness=witness,
        )
    return EvenFunction(f.r, {d: f.values[d - 1] for d in divisors(f.r)})


def to_periodic(e: EvenFunction) -> ResidueFunction:
    """Expand divisor values to the full residue range via n -> gcd(n, r)."""
    r = e.r
    return ResidueFunction(r, tuple(e.values[gcd(n, r)] for n in range(1, r + 1)))


def _divide(total: Scalar, k: int, exact: bool) -> Scalar:
    if exact:
        return _canonical(Fraction(total) / k)
    return total * (1.0 / k)


def rft(f: EvenFunction) -> EvenSpectrum:
    """Transform coefficients R(d) = phi(d)^{-1} sum_n f(n) C(n, d).

    The r-term sum collapses to the divisors of r: the phi(r/e) residues
    n with gcd(n, r) = e all contribute f(e) C(e, d). Exact input gives
    exact output (the phi(d) division always comes out even); floating
    input rounds once per coefficient.
    """
    r = f.r
    table = _table(r)
    divs = divisors(r)
    weights = [euler_phi(r // e) for e in divs]
    exact = f.is_exact
    coeffs = {}
    for d in divs:
        total = sum(f.values[e] * w * table.value(e, d) for e, w in zip(divs, weights))
        coeffs[d] = _divide(total, euler_phi(d), exact)
    return EvenSpectrum(r, coeffs)


def rft_naive(f: EvenFunction) -> EvenSpectrum:
    """Reference transform by the defining r-term sums.

    O(r * tau(r)) work over every residue; exists to cross-check the
    grouped and divisor-form paths on desk-sized r.
    """
    r = f.r
    table = _table(r)
    exact = f.is_exact
    coeffs = {}
    for d in divisors(r):
        total = sum(f(n) * table.value(n, d) for n in range(1, r + 1))
        coeffs[d] = _divide(total, euler_phi(d), exact)
    return EvenSpectrum(r, coeffs)


def rft_divisor_form(f: EvenFunction) -> EvenSpectrum:
    """Division-free transform: R(d) = sum_{e | r} f(r/e) C(r/d, e).

    tau(r)^2 multiply-adds against integer kernel values and nothing of
    size r, so it stays fast when r is large but tau(r) is small.
    Integer input gives integer coefficients.
    """
    r = f.r
    table = _table(r)
    divs = divisors(r)
    coeffs = {}
    for d in divs:
        rd = r // d
        coeffs[d] = _canonical(
            sum(f.values[r // e] * table.value(rd, e) for e in divs)
        )
    return EvenSpectrum(r, coeffs)


def irft(spectrum: EvenSpectrum) -> EvenFunction:
    """Inverse transform: f(e) = r^{-1} sum_{d | r} R(d) C(e, d)."""
    r = spectrum.r
    table = _table(r)
    divs = divisors(r)
    exact = spectrum.is_exact
    values = {}
    for e in divs:
        total = sum(spectrum.coeffs[d] * table.value(e, d) for d in divs)
        values[e] = _canonical(Fraction(total) / r) if exact else total / r
    return EvenFunction(r, values)


def inner_product_even(f: EvenFunction, g: EvenFunction) -> Scalar:
    """<f, g> on divisor data: sum_{d | r} f(d) conj(g(d)) phi(r/d).

    Agrees with the residue-domain inner product of the expansions,
    because phi(r/d) residues share each divisor value.
    """
    _same_modulus(f, g)
    r = f.r
    return sum(
        f.values[d] * _conj(g.values[d]) * euler_phi(r // d) for d in divisors(r)
    )


def cauchy_product_even(f: EvenFunction, g: EvenFunction) -> EvenFunction:
    """Cauchy product of two even functions, computed spectrally.

    Coefficients multiply pointwise, so the product costs tau(r)^2 work
    and stays exact on exact input. Agrees with the naive double sum on
    the expansions.
    """
    _same_modulus(f, g)
    rf = rft_divisor_form(f)
    rg = rft_divisor_form(g)
    product = EvenSpectrum(f.r, {d: rf.coeffs[d] * rg.coeffs[d] for d in rf.coeffs})
    return irft(product)


@dataclass(frozen=True)
class IdentityCheck:
    """One verified instance of an identity: subject, both sides, verdict."""

    subject: tuple
    left: object
    right: object
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sweeping an identity over all its instances at one r."""

    name: str
    r: int
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def counterexamples(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def first_failure(self) -> IdentityCheck | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def verify_orthogonality(r: int) -> VerificationReport:
    """Exact check that the kernel rows are orthogonal under the
    phi-weighted divisor inner product:

        sum_{e | r} C(r/e, d1) C(r/e, d2) phi(e) = r phi(d1) if d1 = d2 else 0

    for every pair of divisors d1, d2 of r.
    """
    table = _table(r)
    divs = divisors(r)
    phis = [euler_phi(e) for e in divs]
    rows = {d: table.divisor_row(d) for d in divs}
    checks = []
    for d1 in divs:
        for d2 in divs:
            left = sum(a * b * w for a, b, w in zip(rows[d1], rows[d2], phis))
            right = r * euler_phi(d1) if d1 == d2 else 0
            checks.append(IdentityCheck((d1, d2), left, right, left == right))
    return VerificationReport("orthogonality", r, tuple(checks))


def verify_symmetry(r: int) -> VerificationReport:
    """Exact check of phi(e) C(r/e, d) = phi(d) C(r/d, e) over all divisor
    pairs (d, e) of r."""
    table = _table(r)
    divs = divisors(r)
    checks = []
    for d in divs:
        for e in divs:
            left = euler_phi(e) * table.value(r // e, d)
            right = euler_phi(d) * table.value(r // d, e)
            checks.append(IdentityCheck((d, e), left, right, left == right))
    return VerificationReport("symmetry", r, tuple(checks))


def verify_rft_dft_bridge(f: EvenFunction, tol: float = 1e-8) -> VerificationReport:
    """Tie the divisor-indexed transform to the DFT of the expansion.

    Checks, within tol: the DFT coefficient at k equals the divisor sum
    sum_{e | r} f(e) C(k, r/e); the DFT depends on k only through
    gcd(k, r); and the divisor-indexed coefficients are the DFT read at
    k = r/d.
    """
    r = f.r
    table = _table(r)
    divs = divisors(r)
    spectrum = dft(to_periodic(f))
    coeffs = rft(f)
    checks = []
    for k in range(1, r + 1):
        direct = sum(f.values[e] * table.value(k, r // e) for e in divs)
        got = spectrum.coeffs[k - 1]
        checks.append(
            IdentityCheck(("divisor-sum", k), got, direct, abs(got - complex(direct)) <= tol)
        )
    for k in range(1, r + 1):
        got = spectrum.coeffs[k - 1]
        via_gcd = spectrum.coeffs[gcd(k, r) - 1]
        checks.append(
            IdentityCheck(("gcd-invariance", k), got, via_gcd, abs(got - via_gcd) <= tol)
        )
    for d in divs:
        left = coeffs.coeffs[d]
        right = spectrum.coeffs[r // d - 1]
        checks.append(
            IdentityCheck(("bridge", d), left, right, abs(complex(left) - right) <= tol)
        )
    return VerificationReport("bridge", r, tuple(checks))


def verify_cauchy_kernel_even(r: int) -> VerificationReport:
    """Brute-force check of the convolution property of the kernel rows:

        sum_{a+b = n mod r} C(a, d1) C(b, d2) = r C(n, d1) if d1 = d2 else 0

    exactly, for every divisor pair and every residue n in 1..r.
    """
    if r < 1:
        raise DomainError(f"modulus must be >= 1, got {r}")
    if r > CAUCHY_KERNEL_CAP:
        raise CapacityError(
            f"kernel verification is capped at r <= {CAUCHY_KERNEL_CAP}, got {r}"
        )
    table = _table(r)
    divs = divisors(r)
    rows = {d: table.periodic_row(d) for d in divs}
    checks = []
    for d1 in divs:
        row1 = rows[d1]
        for d2 in divs:
            row2 = rows[d2]
            for n in range(1, r + 1):
                left = sum(row1[a - 1] * row2[(n - a - 1) % r] for a in range(1, r + 1))
                right = r * row1[n - 1] if d1 == d2 else 0
                checks.append(IdentityCheck((d1, d2, n), left, right, left == right))
    return VerificationReport("cauchy-kernel", r, tuple(checks))
