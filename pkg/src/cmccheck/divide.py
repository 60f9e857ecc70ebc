"""Single-divisor polynomial division with verified certificates.

For one divisor the remainder is unique once a monomial order is fixed:
no term of the remainder is divisible by the divisor's leading term, and
``dividend = quotient * divisor + remainder`` exactly.  Divisibility
itself does not depend on the order, so a zero remainder under any order
is a proof, and :func:`divides` re-multiplies the quotient to certify it.

:func:`divide_monic_in_x` is the cheaper layer-peeling variant for
divisors whose leading coefficient in one distinguished variable is a
nonzero rational constant.  There the remainder's degree in that variable
drops below the divisor's, and division commutes with specializing the
other variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import add as _add, sub as _sub
from typing import Optional

from .ring import Polynomial, RingError


class ZeroDivisorError(RingError):
    """Division by the zero polynomial."""


class NonConstantLeadError(RingError):
    """Layer division requires a rational constant leading coefficient."""


@dataclass(frozen=True)
class DivisionResult:
    quotient: Polynomial
    remainder: Polynomial
    order_used: str


@dataclass(frozen=True)
class DivisibilityVerdict:
    divisible: bool
    quotient: Optional[Polynomial]
    remainder: Optional[Polynomial]


def default_order(ctx) -> str:
    # With a coordinate block present, eliminate the first coordinate
    # fastest; otherwise fall back to grevlex.
    return "lex" if ctx.geometric_count >= 1 else "grevlex"


def _divisible_mono(m: tuple[int, ...], lead: tuple[int, ...]) -> bool:
    for a, b in zip(m, lead):
        if a < b:
            return False
    return True


def divide(
    g: Polynomial, f: Polynomial, order: Optional[str] = None
) -> DivisionResult:
    """Divide ``g`` by ``f``, returning quotient and reduced remainder."""
    if g.ctx != f.ctx:
        raise RingError("dividend and divisor belong to different ring contexts")
    if f.is_zero:
        raise ZeroDivisorError("division by the zero polynomial")
    tag = order or default_order(g.ctx)
    key = g.ctx.monomial_key(tag)
    lead_f = f.leading_monomial(tag)
    lc_f = f.coefficient(lead_f)
    ftems = list(f.terms())
    guard = g.ctx.exponent_guard
    guarded = g.max_exponent() + f.max_exponent() > guard

    work = dict(g.terms())
    quotient: dict[tuple[int, ...], Fraction] = {}
    remainder: dict[tuple[int, ...], Fraction] = {}
    while work:
        lead = max(work, key=key)
        if not _divisible_mono(lead, lead_f):
            remainder[lead] = work.pop(lead)
            continue
        qm = tuple(map(_sub, lead, lead_f))
        qc = work[lead] / lc_f
        prev = quotient.get(qm)
        quotient[qm] = qc if prev is None else prev + qc
        for m, c in ftems:
            mm = tuple(map(_add, qm, m))
            if guarded:
                g.ctx.check_monomial(mm)
            acc = work.get(mm)
            nv = -qc * c if acc is None else acc - qc * c
            if nv:
                work[mm] = nv
            else:
                work.pop(mm, None)
    return DivisionResult(
        Polynomial(g.ctx, quotient, _clean=True),
        Polynomial(g.ctx, remainder, _clean=True),
        tag,
    )


def divides(
    f: Polynomial, g: Polynomial, order: Optional[str] = None
) -> DivisibilityVerdict:
    """Does ``f`` divide ``g``?  A positive verdict carries a certificate.

    The certificate quotient is re-multiplied against the divisor before
    the verdict is reported, so a True answer never rests on the division
    routine alone.
    """
    result = divide(g, f, order)
    if result.remainder.is_zero:
        if result.quotient * f != g:
            raise RingError("division produced an inconsistent certificate")
        return DivisibilityVerdict(True, result.quotient, None)
    return DivisibilityVerdict(False, None, result.remainder)


def divide_monic_in_x(g: Polynomial, f: Polynomial, name: str) -> DivisionResult:
    """Divide by a polynomial whose top layer in ``name`` is constant.

    Precondition: the coefficient of the highest power of ``name`` in
    ``f`` is a nonzero rational constant.  The remainder then has strictly
    smaller degree in ``name`` than ``f``, and the identity
    ``g = q*f + r`` specializes correctly under any substitution of the
    remaining variables.
    """
    if g.ctx != f.ctx:
        raise RingError("dividend and divisor belong to different ring contexts")
    if f.is_zero:
        raise ZeroDivisorError("division by the zero polynomial")
    ctx = g.ctx
    i = ctx.index(name)
    dxf = max(m[i] for m in f.monomials())
    lead_terms = [(m, c) for m, c in f.terms() if m[i] == dxf]
    if len(lead_terms) != 1 or any(
        e for j, e in enumerate(lead_terms[0][0]) if j != i
    ):
        raise NonConstantLeadError(
            f"leading {name}-coefficient of the divisor is not a rational constant"
        )
    lc = lead_terms[0][1]

    quotient = Polynomial.zero(ctx)
    rest = g
    while not rest.is_zero:
        d = max(m[i] for m in rest.monomials())
        if d < dxf:
            break
        layer = {}
        for m, c in rest.terms():
            if m[i] == d:
                mm = list(m)
                mm[i] = d - dxf
                layer[tuple(mm)] = c / lc
        q = Polynomial(ctx, layer, _clean=True)
        quotient = quotient + q
        rest = rest - q * f
    return DivisionResult(quotient, rest, f"{name}-layer")
