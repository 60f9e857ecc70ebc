"""Divisibility verdicts for constant-mean-curvature level sets.

The check is purely algebraic: ``f = 0`` is treated as a candidate
hypersurface with squared mean curvature ``hsq``, and the verdict is
whether ``f`` divides the defect polynomial.  The geometric reading
(an actual CMC hypersurface) additionally needs ``f`` irreducible and the
level set nonsingular, which this module does not establish; every report
on a nonlinear input says so in its warnings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .calculus import cmc_defect, delta1, grad_norm_sq
from .divide import divide, divides
from .ring import Polynomial, Rational, RingContext, RingError, as_fraction

IRREDUCIBILITY_WARNING = (
    "irreducibility not verified: the verdict is about the polynomial, "
    "not a specific irreducible surface"
)
SINGULARITY_WARNING = (
    "level set may have singular points; the algebraic check does not "
    "inspect them"
)


@dataclass(frozen=True)
class CmcReport:
    input: Polynomial
    hsq: Fraction
    defect: Polynomial
    divisible: bool
    certificate: Optional[Polynomial]
    witness_remainder: Optional[Polynomial]
    warnings: tuple[str, ...]


def _warnings_for(f: Polynomial) -> tuple[str, ...]:
    deg = f.total_degree()
    if isinstance(deg, float) or deg <= 1:
        return ()
    return (IRREDUCIBILITY_WARNING, SINGULARITY_WARNING)


def check_cmc(f: Polynomial, hsq: Rational) -> CmcReport:
    """Does ``f`` divide its defect for squared mean curvature ``hsq``?"""
    hsq = as_fraction(hsq)
    deg = f.total_degree()
    if isinstance(deg, float) or deg < 1:
        raise RingError("input polynomial must be nonconstant")
    defect = cmc_defect(f, hsq)
    verdict = divides(f, defect)
    return CmcReport(
        input=f,
        hsq=hsq,
        defect=defect,
        divisible=verdict.divisible,
        certificate=verdict.quotient,
        witness_remainder=verdict.remainder,
        warnings=_warnings_for(f),
    )


def solve_hsq(f: Polynomial) -> Optional[Fraction]:
    """The unique admissible squared curvature for ``f``, if any.

    The defect is linear in ``hsq`` for fixed ``f``: with
    ``G = |grad f|^6`` and ``E = (delta1 f)^2``, divisibility of
    ``4 (n-1)^2 hsq G - E`` by ``f`` holds exactly when the reduced
    residues of ``G`` and ``E`` modulo ``f`` are proportional with the
    right positive ratio.  Remainders modulo a single divisor are unique
    for a fixed monomial order, so proportionality of remainders decides
    the question outright.
    """
    deg = f.total_degree()
    if isinstance(deg, float) or deg < 1:
        raise RingError("input polynomial must be nonconstant")
    n = f.ctx.geometric_count
    if n < 2:
        raise RingError("defect needs at least two geometric variables")
    g6 = grad_norm_sq(f) ** 3
    d1 = delta1(f)
    r1 = divide(g6, f).remainder
    r2 = divide(d1 * d1, f).remainder
    if r1.is_zero:
        if r2.is_zero:
            # Both sides already divisible: every curvature works, so
            # report the simplest admissible one.
            return Fraction(1)
        return None
    lead = r1.leading_monomial()
    c2 = r2.coefficient(lead)
    if not c2:
        return None
    ratio = c2 / r1.coefficient(lead)
    if ratio <= 0 or r1 * ratio != r2:
        return None
    return ratio / (4 * (n - 1) ** 2)


def make_surface(
    kind: str, n: int, rsq: Rational = 1
) -> tuple[Polynomial, Optional[Fraction], Optional[Polynomial]]:
    """Model surface, its admissible squared curvature, and the certificate.

    ``sphere``   sum x_i^2 - rsq   with hsq = 1/rsq
    ``cylinder`` x1^2 + x2^2 - rsq with hsq = 1/((n-1)^2 rsq)
    ``plane``    x1                with no admissible curvature

    The expected certificates are closed forms: the sphere's defect is
    ``(256 (n-1)^2 / rsq) * (sum x_i^2)^2 * f`` and the cylinder's is
    ``(256 / rsq) * (x1^2 + x2^2)^2 * f``.
    """
    if n < 2:
        raise RingError("model surfaces need dimension n >= 2")
    rsq = as_fraction(rsq)
    if rsq <= 0:
        raise RingError("squared radius must be positive")
    ctx = RingContext.geometric(n)
    xs = [Polynomial.variable(ctx, name) for name in ctx.geometric_variables]
    if kind == "sphere":
        radial = sum((v * v for v in xs), Polynomial.zero(ctx))
        f = radial - rsq
        certificate = radial**2 * (Fraction(256) * (n - 1) ** 2 / rsq)
        return f, Fraction(1) / rsq, certificate
    if kind == "cylinder":
        radial = xs[0] * xs[0] + xs[1] * xs[1]
        f = radial - rsq
        certificate = radial**2 * (Fraction(256) / rsq)
        return f, Fraction(1) / ((n - 1) ** 2 * rsq), certificate
    if kind == "plane":
        return xs[0], None, None
    raise RingError(f"unknown surface kind {kind!r}")


@dataclass(frozen=True)
class SweepHit:
    index: int
    polynomial: Polynomial
    hsq: Fraction


@dataclass(frozen=True)
class SweepReport:
    n: int
    degree: int
    count: int
    coeff_bound: int
    seed: int
    admissible: tuple[SweepHit, ...]

    @property
    def admissible_count(self) -> int:
        return len(self.admissible)


def _random_cubic(rng: random.Random, ctx: RingContext, bound: int) -> Polynomial:
    """Random integer-coefficient cubic with a nonzero degree-3 part."""
    n = ctx.nvars
    monos = []

    def grow(prefix: list[int], remaining: int, pos: int) -> None:
        if pos == n:
            monos.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            grow(prefix + [e], remaining - e, pos + 1)

    grow([], 3, 0)
    while True:
        terms = {}
        for mono in monos:
            c = rng.randint(-bound, bound)
            if c:
                terms[mono] = Fraction(c)
        f = Polynomial(ctx, terms, _clean=True)
        if not f.homogeneous_part(3).is_zero:
            return f


def refutation_sweep(
    n: int,
    count: int,
    coeff_bound: int = 5,
    seed: int = 0,
    degree: int = 3,
) -> SweepReport:
    """Hunt for admissible curvatures over random integer polynomials.

    With ``degree=3`` every sampled polynomial is a cubic with nonzero
    degree-3 part; no admissible squared curvature should ever appear, and
    any hit is returned verbatim for inspection.  With ``degree=2`` the
    samples are spheres ``a * sum x_i^2 - b`` (a, b > 0), every one of
    which must be admissible; this is the positive control that the sweep
    machinery can find curvatures at all.
    """
    if n < 3:
        raise RingError("sweep needs dimension n >= 3")
    if count < 1:
        raise RingError("sweep needs a positive sample count")
    if coeff_bound < 1:
        raise RingError("coefficient bound must be positive")
    if degree not in (2, 3):
        raise RingError("sweep degree must be 2 or 3")
    rng = random.Random(seed)
    ctx = RingContext.geometric(n)
    hits = []
    for i in range(count):
        if degree == 3:
            f = _random_cubic(rng, ctx, coeff_bound)
        else:
            a = rng.randint(1, coeff_bound)
            b = rng.randint(1, coeff_bound)
            radial = sum(
                (
                    Polynomial.variable(ctx, name) ** 2
                    for name in ctx.geometric_variables
                ),
                Polynomial.zero(ctx),
            )
            f = radial * a - b
        hsq = solve_hsq(f)
        if hsq is not None:
            hits.append(SweepHit(index=i, polynomial=f, hsq=hsq))
    return SweepReport(
        n=n,
        degree=degree,
        count=count,
        coeff_bound=coeff_bound,
        seed=seed,
        admissible=tuple(hits),
    )
