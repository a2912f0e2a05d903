"""Multivector inversion by chained involutions, plus closed-form discriminants.

The construction: pick a grade-sign map f that reverses products on the
current subspace, replace the running element a by a*f(a) (which lands in
the fixed subspace of f), and repeat until the fixed subspace is the
scalars.  The final scalar D is the discriminant: it vanishes exactly when
the original element has no inverse, and otherwise

    a**-1 = (1/D) * f1(a1) * f2(a2) * ... * fm(am).

One chain per dimension suffices, and for three and four generators a
second, independent chain produces the same scalar (`alternate_chain`,
`verify_d_equals_dprime`).

For up to four generators the discriminant also has an explicit polynomial
in the coefficients (`discriminant_closed_form`), evaluated here exactly as
a cross-check against the chain scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .blades import Signature, blade_square_sign
from .errors import DimensionMismatch, DimensionOutOfRange, NotInvertible, SubspaceViolation
from .involutions import (
    GradeSet,
    LengthDeltaMap,
    conjugation_delta,
    invariant_grades,
    is_special_involution,
    psi_delta,
    reversion_delta,
)
from .multivector import Multivector


@dataclass(frozen=True)
class InvolutionChain:
    """An ordered list of grade-sign maps driving an element down to a scalar.

    domains[i] is the grade set the i-th map acts on; each map must reverse
    products there, each domain must be the fixed grade set of the previous
    step, and the final fixed grade set must be {0}.
    """

    n: int
    steps: tuple[LengthDeltaMap, ...]
    domains: tuple[GradeSet, ...] = field(default=())

    def __post_init__(self) -> None:
        if not 0 <= self.n <= 5:
            raise DimensionOutOfRange(f"chains exist for 0..5 generators, got {self.n}")
        domains = tuple(frozenset(d) for d in self.domains)
        if not domains and self.steps:
            running: GradeSet = frozenset(range(self.n + 1))
            built = []
            for step in self.steps:
                built.append(running)
                running = invariant_grades(step, running)
            domains = tuple(built)
        object.__setattr__(self, "domains", domains)
        if len(self.steps) != len(self.domains):
            raise ValueError("chain needs one domain per step")
        running = frozenset(range(self.n + 1))
        for step, domain in zip(self.steps, self.domains):
            if domain != running:
                raise ValueError(f"step domain {sorted(domain)} is not the running fixed set {sorted(running)}")
            if not is_special_involution(step, domain, self.n):
                raise ValueError(f"{step} does not reverse products on grades {sorted(domain)}")
            running = invariant_grades(step, domain)
        if running != frozenset({0}):
            raise ValueError(f"chain must end on the scalars, ended on grades {sorted(running)}")


@dataclass(frozen=True)
class InverseResult:
    """Outcome of a chain run: the scalar D, the factor list, and the inverse.

    The element times the ordered factor product equals D exactly; the
    inverse is present iff D is nonzero and is then (1/D) times that product.
    """

    discriminant: Fraction
    factors: tuple[Multivector, ...]
    inverse: Optional[Multivector]


def default_chain(n: int) -> InvolutionChain:
    """The standard chain for each dimension.

    0: empty; 1-2: conjugation; 3: reversion then conjugation;
    4: reversion then psi; 5: reversion, psi, conjugation.
    """
    if n == 0:
        return InvolutionChain(0, ())
    if n in (1, 2):
        return InvolutionChain(n, (conjugation_delta(n),))
    if n == 3:
        return InvolutionChain(3, (reversion_delta(3), conjugation_delta(3)))
    if n == 4:
        return InvolutionChain(4, (reversion_delta(4), psi_delta(4)))
    if n == 5:
        return InvolutionChain(5, (reversion_delta(5), psi_delta(5), conjugation_delta(5)))
    raise DimensionOutOfRange(f"no chain for {n} generators")


def alternate_chain(n: int) -> InvolutionChain:
    """The mirrored chain that exists for three and four generators."""
    if n == 3:
        return InvolutionChain(3, (conjugation_delta(3), reversion_delta(3)))
    if n == 4:
        return InvolutionChain(4, (conjugation_delta(4), psi_delta(4)))
    raise DimensionOutOfRange(f"no alternate chain for {n} generators")


def compose_inverse(a: Multivector, chain: InvolutionChain) -> InverseResult:
    """Run the chain on a, returning the discriminant, factors, and inverse.

    Raises SubspaceViolation if an intermediate product escapes the grade
    set the chain promises, which indicates a broken chain rather than a
    property of the input.
    """
    if chain.n != a.sig.n:
        raise DimensionMismatch(f"chain is for {chain.n} generators, element lives in {a.sig}")
    cur = a
    factors: list[Multivector] = []
    for step, domain in zip(chain.steps, chain.domains):
        f_cur = step(cur)
        factors.append(f_cur)
        cur = cur * f_cur
        expected = invariant_grades(step, domain)
        if not cur.support_grades() <= expected:
            raise SubspaceViolation(
                f"chain step left grades {sorted(cur.support_grades())}, expected subset of {sorted(expected)}"
            )
    if not cur.is_scalar():
        raise SubspaceViolation("chain did not terminate on a scalar")
    d = cur.scalar_part()
    if d == 0:
        return InverseResult(d, tuple(factors), None)
    inv = Multivector.scalar(a.sig, Fraction(1, 1) / d)
    for f in factors:
        inv = inv * f
    return InverseResult(d, tuple(factors), inv)


def discriminant(a: Multivector) -> Fraction:
    """The chain scalar; defined for every element, zero iff not invertible."""
    return compose_inverse(a, default_chain(a.sig.n)).discriminant


def inverse(a: Multivector) -> Multivector:
    """Exact inverse via the default chain; raises NotInvertible when D = 0."""
    result = compose_inverse(a, default_chain(a.sig.n))
    if result.inverse is None:
        raise NotInvertible("discriminant is zero")
    return result.inverse


def verify_d_equals_dprime(a: Multivector) -> bool:
    """True iff the default and alternate chains produce the same scalar."""
    n = a.sig.n
    if n not in (3, 4):
        raise DimensionOutOfRange(f"alternate chain exists only for 3 or 4 generators, got {n}")
    d = compose_inverse(a, default_chain(n)).discriminant
    dprime = compose_inverse(a, alternate_chain(n)).discriminant
    return d == dprime


# ----------------------------------------------------------------------
# Closed-form discriminants for one to four generators
# ----------------------------------------------------------------------
#
# Index convention: a coefficient subscripted by a product of two blades
# reads the coefficient of the canonical blade of that product with the
# reordering sign dropped, i.e. the blade at mask_a XOR mask_b.  Squares of
# single blades are their scalar squares in the algebra.


def discriminant_closed_form(a: Multivector) -> Fraction:
    """Evaluate the explicit discriminant polynomial on a's coefficients.

    Available for 1..4 generators; agrees with the chain scalar
    `discriminant` everywhere (this identity is aggressively tested).
    """
    n = a.sig.n
    if n == 1:
        return _closed_form_1(a)
    if n == 2:
        return _closed_form_2(a)
    if n == 3:
        return _closed_form_3(a)
    if n == 4:
        return _closed_form_4(a)
    raise DimensionOutOfRange(f"closed form exists for 1..4 generators, got {n}")


def _metric_product(sig: Signature, mask: int) -> int:
    """Product of the signature squares of the generators in the mask."""
    return -1 if (mask & sig.neg_mask).bit_count() & 1 else 1


def _closed_form_1(a: Multivector) -> Fraction:
    x = a.coeff
    e1sq = a.sig.square(1)
    return x(0) ** 2 - x(1) ** 2 * e1sq


def _closed_form_2(a: Multivector) -> Fraction:
    x = a.coeff
    sq = a.sig.square
    return (
        x(0b00) ** 2
        - x(0b01) ** 2 * sq(1)
        - x(0b10) ** 2 * sq(2)
        + x(0b11) ** 2 * sq(1) * sq(2)
    )


def _diagonal_sum(a: Multivector, e: int) -> Fraction:
    """Sum over all blades b of x_b^2 * x_{b XOR e}^2, times e's scalar square."""
    x = a.coeff
    total = sum((x(b) * x(b ^ e)) ** 2 for b in range(a.sig.dim))
    return total * blade_square_sign(e, a.sig)


def _closed_form_3(a: Multivector) -> Fraction:
    x = a.coeff
    sig = a.sig
    plus = {0b000, 0b111}
    total = Fraction(0)
    for e in range(8):
        c = _diagonal_sum(a, e)
        total = total + c if e in plus else total - c
    cross = x(0b000) * x(0b111) - x(0b001) * x(0b110) + x(0b010) * x(0b101) - x(0b100) * x(0b011)
    total += 4 * cross**2 * _metric_product(sig, 0b111)
    return total


def _pair_square_term(a: Multivector, i: int, j: int, k: int, l: int) -> Fraction:
    """The 4*(t1^2 + t2^2)*e_i^2 e_j^2 e_k^2 building block of the 4-generator form."""
    x = a.coeff
    sig = a.sig
    mi, mj, mk, ml = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1), 1 << (l - 1)
    t1 = x(0) * x(mi | mj | mk) - x(mi) * x(mj | mk) - x(mj) * x(mi | mk) + x(mk) * x(mi | mj)
    t2 = (
        x(ml) * x(0b1111)
        - x(mi | ml) * x(mj | mk | ml)
        - x(mj | ml) * x(mi | mk | ml)
        + x(mk | ml) * x(mi | mj | ml)
    )
    return 4 * (t1**2 + t2**2) * (sig.square(i) * sig.square(j) * sig.square(k))


def _closed_form_4(a: Multivector) -> Fraction:
    x = a.coeff
    sig = a.sig
    plus = {0b0000, 0b0111, 0b1011, 0b1101, 0b1110, 0b1111}
    total = Fraction(0)
    for e in range(16):
        c = _diagonal_sum(a, e)
        total = total + c if e in plus else total - c
    total += (
        _pair_square_term(a, 1, 3, 2, 4)
        + _pair_square_term(a, 1, 4, 2, 3)
        + _pair_square_term(a, 1, 4, 3, 2)
        + _pair_square_term(a, 2, 4, 3, 1)
    )
    cross_even = (
        x(0b0000) * x(0b1111) - x(0b0011) * x(0b1100) + x(0b0101) * x(0b1010) - x(0b1001) * x(0b0110)
    )
    cross_odd = (
        x(0b0001) * x(0b1110) - x(0b0010) * x(0b1101) + x(0b0100) * x(0b1011) - x(0b1000) * x(0b0111)
    )
    total -= 4 * (cross_even**2 + cross_odd**2) * _metric_product(sig, 0b1111)
    return total
