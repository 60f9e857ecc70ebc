"""Step-by-step replay of the cubic nonexistence identity chain.

For the generic cubic ``f = x^3 + y'Ay + k0 x^2 + (r'y) x + k1 x + s'y``
in dimension ``n``, a divisibility certificate ``p`` with
``p * f = Ht^2 |grad f|^6 - (delta1 f)^2`` would force, degree by degree,
a cascade of exact divisions whose tail contradicts itself unless the
matrix ``A`` vanishes.  :func:`replay` recomputes every identity in that
chain for a concrete ``n`` with exact arithmetic and reports each one as
a named pass/fail step:

1.  gradsq-parts          |grad f|^2 equals the five printed homogeneous parts
2.  delta1-congruence     delta1 f  =  4 trace(A) |grad f|^2  above degree 3
3.  gradsq-square         |grad f|^4  =  81 x^8                above degree 7
4.  delta1-square         (delta1 f)^2 = 1296 trace(A)^2 x^8   above degree 7
5.  defect-valuations     x-valuation of the defect's degree-k part >= 2k-12
6.  cascade-division      p9..p6 extracted by exact division, p9 = 729 Ht^2 x^9
7.  vanish-at-x0          p7 and the degree-8 defect part vanish at x = 0
8.  obstruction           p6(0,y) f2(0,y) = -729 Ht^2 (y'Ay)^4
9.  matrix-extraction     the quadratic form y'Ay pins down A entry by entry

Steps never assume each other's conclusions; a failed step reports a
nonzero residual and the run continues, so corrupted inputs show exactly
where the chain first breaks.  The printed closed-form expansion of
``delta1 f`` is also compared against the computed one, but as a
transcription fidelity note outside the pass/fail chain: the chain itself
only ever uses the congruence of step 2.

The two supported mutations are deliberate corruptions used as negative
controls: ``"cubic-part"`` replaces the leading ``x^3`` by ``x^2 y_1``,
and ``"defect-sign"`` flips the sign of the ``(delta1 f)^2`` term inside
the defect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .calculus import delta1, grad_norm_sq
from .cubic import (
    GenericCubicSpec,
    SymMatrix,
    generic_cubic,
    quad_form_from_matrix,
    quad_form_to_matrix,
)
from .divide import NonConstantLeadError, divide, divide_monic_in_x
from .ring import ExponentLimitError, Polynomial, RingContext, RingError

MUTATIONS = ("cubic-part", "defect-sign")


@dataclass(frozen=True)
class ReplayStep:
    name: str
    status: str  # "pass" | "fail"
    residual: Optional[Polynomial] = None
    witness: Optional[Polynomial] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class ReplayReport:
    n: int
    mutation: Optional[str]
    steps: list[ReplayStep] = field(default_factory=list)
    overall: str = "fail"
    delta1_expansion_matches: bool = False
    delta1_expansion_residual: Optional[Polynomial] = None

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def step(self, name: str) -> ReplayStep:
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)


class _Pieces:
    """Symbolic building blocks of the generic cubic, precomputed once."""

    def __init__(self, ctx: RingContext, spec: GenericCubicSpec) -> None:
        self.ctx = ctx
        self.spec = spec
        self.x = Polynomial.variable(ctx, "x1")
        self.y = [Polynomial.variable(ctx, f"x{i}") for i in range(2, spec.n + 1)]
        self.A = [
            [Polynomial.variable(ctx, name) for name in row]
            for row in spec.matrix_names
        ]
        self.r = [Polynomial.variable(ctx, name) for name in spec.r_names]
        self.s = [Polynomial.variable(ctx, name) for name in spec.s_names]
        self.k0 = Polynomial.variable(ctx, spec.k0_name)
        self.k1 = Polynomial.variable(ctx, spec.k1_name)
        self.ht = Polynomial.variable(ctx, spec.curvature_name)
        self.Ay = self.mat_vec(self.y)
        self.quad = self.dot(self.y, self.Ay)  # y'Ay
        self.trace = sum(
            (self.A[i][i] for i in range(spec.y_count)), Polynomial.zero(ctx)
        )

    def dot(self, u: list[Polynomial], v: list[Polynomial]) -> Polynomial:
        out = Polynomial.zero(self.ctx)
        for a, b in zip(u, v):
            out = out + a * b
        return out

    def mat_vec(self, v: list[Polynomial]) -> list[Polynomial]:
        return [self.dot(row, v) for row in self.A]


def _expected_parts(p: _Pieces) -> list[Polynomial]:
    x, k0, k1 = p.x, p.k0, p.k1
    r_dot_y = p.dot(p.r, p.y)
    h0 = k1 * k1 + p.dot(p.s, p.s)
    h1 = (
        p.dot(p.s, p.Ay) * 4
        + k0 * k1 * x * 4
        + k1 * r_dot_y * 2
        + x * p.dot(p.r, p.s) * 2
    )
    h2 = (
        x * p.dot(p.r, p.Ay) * 4
        + p.dot(p.Ay, p.Ay) * 4
        + k0 * x * r_dot_y * 4
        + r_dot_y**2
        + x**2 * (k0**2 * 4 + k1 * 6 + p.dot(p.r, p.r))
    )
    h3 = k0 * x**3 * 12 + x**2 * r_dot_y * 6
    h4 = x**4 * 9
    return [h0, h1, h2, h3, h4]


def _expected_delta1(p: _Pieces, gradsq: Polynomial) -> Polynomial:
    """The printed closed-form expansion of delta1 on the generic cubic."""
    x, k0, k1 = p.x, p.k0, p.k1
    r_dot_y = p.dot(p.r, p.y)
    A2y = p.mat_vec(p.Ay)
    A3y = p.mat_vec(A2y)
    Ar = p.mat_vec(p.r)
    As = p.mat_vec(p.s)
    three_x = x * 3
    return (
        gradsq * p.trace * 4
        + (k0 + three_x) * (p.dot(p.s, p.Ay) + p.dot(p.Ay, p.Ay)) * 16
        - p.dot(p.r, p.Ay) * (k1 + r_dot_y - x**2 * 3) * 8
        - x * p.dot(p.s, Ar) * 8
        - x**2 * p.dot(p.r, Ar) * 4
        - x * p.dot(p.r, A2y) * 16
        - p.dot(p.s, A2y) * 16
        - p.dot(p.s, As) * 4
        - p.dot(p.y, A3y) * 16
        - x * (k0 * x + k1 + r_dot_y) * p.dot(p.r, p.r) * 4
        + (k0 + three_x) * p.dot(p.s, p.s) * 4
        - p.dot(p.r, p.s) * (k1 + r_dot_y - x**2 * 3) * 4
    )


def expected_gradsq_parts(n: int) -> list[Polynomial]:
    """The five printed homogeneous parts of |grad f|^2, degrees 0..4."""
    f, spec = generic_cubic(n)
    return _expected_parts(_Pieces(f.ctx, spec))


def expected_delta1_expansion(n: int) -> Polynomial:
    """The printed closed-form expansion of delta1(f) for dimension n."""
    f, spec = generic_cubic(n)
    return _expected_delta1(_Pieces(f.ctx, spec), grad_norm_sq(f))


def _exact_quotient(
    dividend: Polynomial, divisor: Polynomial, name: str
) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder, preferring the constant-lead layer division."""
    try:
        res = divide_monic_in_x(dividend, divisor, name)
    except NonConstantLeadError:
        res = divide(dividend, divisor, "lex")
    if res.quotient * divisor + res.remainder != dividend:
        raise RingError("cascade division produced an inconsistent identity")
    return res.quotient, res.remainder


def replay(n: int, mutation: Optional[str] = None) -> ReplayReport:
    """Recompute the identity chain for dimension ``n`` (n >= 3)."""
    if mutation is not None and mutation not in MUTATIONS:
        raise RingError(f"unknown mutation {mutation!r}; choose from {MUTATIONS}")
    f, spec = generic_cubic(n)
    ctx = f.ctx
    p = _Pieces(ctx, spec)
    x = p.x
    if mutation == "cubic-part":
        f = f - x**3 + x**2 * p.y[0]

    report = ReplayReport(n=n, mutation=mutation)
    current = "setup"

    def run(step: ReplayStep) -> None:
        report.steps.append(step)

    try:
        current = "gradsq-parts"
        gradsq = grad_norm_sq(f)
        parts = _expected_parts(p)
        residual = gradsq - sum(parts, Polynomial.zero(ctx))
        if residual.is_zero:
            # The sum matching forces every homogeneous part to match, the
            # expected parts being homogeneous of their labeled degrees;
            # check anyway so a non-homogeneous builder cannot slip through.
            for k in range(5):
                diff = gradsq.homogeneous_part(k) - parts[k]
                if not diff.is_zero:
                    residual = diff
                    break
        if residual.is_zero:
            run(ReplayStep(current, "pass", detail="degrees 0..4 match exactly"))
        else:
            run(ReplayStep(current, "fail", residual=residual))

        current = "delta1-congruence"
        d1 = delta1(f)
        residual = (d1 - p.trace * gradsq * 4).high_part(3)
        run(
            ReplayStep(current, "pass" if residual.is_zero else "fail",
                       residual=None if residual.is_zero else residual,
                       detail="delta1 = 4 trace(A) |grad f|^2 above degree 3")
        )

        current = "gradsq-square"
        residual = (gradsq**2 - x**8 * 81).high_part(7)
        run(
            ReplayStep(current, "pass" if residual.is_zero else "fail",
                       residual=None if residual.is_zero else residual,
                       detail="|grad f|^4 = 81 x^8 above degree 7")
        )

        current = "delta1-square"
        residual = (d1 * d1 - p.trace**2 * x**8 * 1296).high_part(7)
        run(
            ReplayStep(current, "pass" if residual.is_zero else "fail",
                       residual=None if residual.is_zero else residual,
                       detail="(delta1 f)^2 = 6^4 trace(A)^2 x^8 above degree 7")
        )

        current = "defect-valuations"
        d1sq = d1 * d1
        defect = p.ht * p.ht * gradsq**3
        defect = defect + d1sq if mutation == "defect-sign" else defect - d1sq
        dpart = {k: defect.homogeneous_part(k) for k in range(8, 13)}
        vals = {k: dpart[k].valuation("x1") for k in range(8, 13)}
        bad = [k for k in range(8, 13) if vals[k] < 2 * k - 12]
        detail = ", ".join(f"deg {k}: val {vals[k]} (need {2*k-12})" for k in range(8, 13))
        if bad:
            run(ReplayStep(current, "fail", residual=dpart[bad[0]], detail=detail))
        else:
            run(ReplayStep(current, "pass", detail=detail))

        current = "cascade-division"
        f1 = f.homogeneous_part(1)
        f2 = f.homogeneous_part(2)
        f3 = f.homogeneous_part(3)
        cascade_residual = None
        p9, rem = _exact_quotient(dpart[12], f3, "x1")
        if not rem.is_zero:
            cascade_residual = rem
        expected_p9 = p.ht * p.ht * x**9 * 729
        if cascade_residual is None and p9 != expected_p9:
            cascade_residual = p9 - expected_p9
        p8, rem = _exact_quotient(dpart[11] - p9 * f2, f3, "x1")
        if cascade_residual is None and not rem.is_zero:
            cascade_residual = rem
        p7, rem = _exact_quotient(dpart[10] - p8 * f2 - p9 * f1, f3, "x1")
        if cascade_residual is None and not rem.is_zero:
            cascade_residual = rem
        p6, rem = _exact_quotient(dpart[9] - p7 * f2 - p8 * f1, f3, "x1")
        if cascade_residual is None and not rem.is_zero:
            cascade_residual = rem
        if cascade_residual is None:
            run(
                ReplayStep(current, "pass", witness=p9,
                           detail="p9..p6 extracted exactly; p9 = 729 Ht^2 x^9")
            )
        else:
            run(ReplayStep(current, "fail", residual=cascade_residual, witness=p9))

        current = "vanish-at-x0"
        at0 = {"x1": Fraction(0)}
        p7_at0 = p7.substitute(at0)
        d8_at0 = dpart[8].substitute(at0)
        residual = p7_at0 if not p7_at0.is_zero else d8_at0
        run(
            ReplayStep(current, "pass" if residual.is_zero else "fail",
                       residual=None if residual.is_zero else residual,
                       detail="p7(0, y) = 0 and defect degree-8 part vanishes at x = 0")
        )

        current = "obstruction"
        lhs = p6.substitute(at0) * f2.substitute(at0)
        rhs = -(p.ht * p.ht) * p.quad**4 * 729
        residual = lhs - rhs
        run(
            ReplayStep(current, "pass" if residual.is_zero else "fail",
                       residual=None if residual.is_zero else residual,
                       witness=rhs,
                       detail="p6(0, y) f2(0, y) = -729 Ht^2 (y'Ay)^4")
        )

        current = "matrix-extraction"
        f2_at0 = f2.substitute(at0)
        y_names = [f"x{i}" for i in range(2, n + 1)]
        extracted = quad_form_to_matrix(f2_at0, y_names)
        rebuilt = quad_form_from_matrix(extracted, y_names, ctx)
        target = SymMatrix(
            tuple(
                tuple(Polynomial.variable(ctx, name) for name in row)
                for row in spec.matrix_names
            )
        )
        if rebuilt == f2_at0 and extracted == target:
            run(
                ReplayStep(current, "pass",
                           detail="y'Ay recovers every entry of A, so A = 0 is forced")
            )
        else:
            residual = f2_at0 - rebuilt
            if residual.is_zero:
                residual = f2_at0 - quad_form_from_matrix(target, y_names, ctx)
            run(ReplayStep(current, "fail", residual=residual))

        # The printed closed-form expansion is transcription fidelity only;
        # a mismatch is recorded out of band and never fails the chain,
        # which relies solely on the step-2 congruence.
        current = "delta1-expansion"
        expansion_residual = d1 - _expected_delta1(p, gradsq)
        report.delta1_expansion_matches = expansion_residual.is_zero
        report.delta1_expansion_residual = (
            None if expansion_residual.is_zero else expansion_residual
        )
    except ExponentLimitError as exc:
        raise ExponentLimitError(f"step {current}: {exc}") from exc

    report.overall = "pass" if all(s.passed for s in report.steps) else "fail"
    return report
