"""Basis blades as bitmasks and their signed geometric product.

A blade is an integer bitmask over the generators e1..en: bit (i-1) is set
exactly when e_i appears in the blade.  The mask is read as the ascending
product e_{i1} e_{i2} ... e_{ik} with i1 < i2 < ... < ik, which is the single
canonical representative of that product; mask 0 is the unit 1.  Products of
blades are again (signed) blades: the result mask is the XOR of the operands
and the sign collects one factor -1 per transposition needed to interleave
the right operand past the left one, times the metric square of every
generator the operands share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

MAX_GENERATORS = 5

Blade = int


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): generators 1..p square to -1, p+1..p+q to +1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature counts must be nonnegative, got ({self.p}, {self.q})")
        if self.p + self.q > MAX_GENERATORS:
            raise ValueError(
                f"at most {MAX_GENERATORS} generators are supported, got p+q={self.p + self.q}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << (self.p + self.q)

    @property
    def neg_mask(self) -> int:
        """Bitmask of the generators that square to -1."""
        return (1 << self.p) - 1

    def square(self, i: int) -> int:
        """Square of generator e_i, 1-based: -1 for i <= p, +1 for p < i <= p+q."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} outside 1..{self.n}")
        return -1 if i <= self.p else 1

    def blades(self) -> Iterator[Blade]:
        """All 2^n blade masks in (grade, mask) order."""
        return iter(blade_order(self.n))

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


class SignedBlade(NamedTuple):
    sign: int  # +1 or -1
    blade: Blade


def grade(blade: Blade) -> int:
    """Number of generators in the blade (0 for the unit)."""
    return blade.bit_count()


def transposition_sign(a: Blade, b: Blade) -> int:
    """(-1)**t where t counts the generator swaps interleaving b past a.

    t is the sum, over each generator j present in b, of the number of
    generators in a strictly greater than j.
    """
    t = 0
    while b:
        low = b & -b
        t += (a >> low.bit_length()).bit_count()
        b ^= low
    return -1 if t & 1 else 1


def blade_mul(a: Blade, b: Blade, sig: Signature) -> SignedBlade:
    """Signed geometric product of two blades under the given signature."""
    dim = sig.dim
    if not (0 <= a < dim and 0 <= b < dim):
        raise ValueError(f"blade mask outside the {sig} basis")
    s = transposition_sign(a, b)
    if ((a & b) & sig.neg_mask).bit_count() & 1:
        s = -s
    return SignedBlade(s, a ^ b)


def blade_square_sign(b: Blade, sig: Signature) -> int:
    """Scalar value of b*b: (-1)**(k(k-1)/2) times the shared metric squares."""
    return blade_mul(b, b, sig).sign


@lru_cache(maxsize=None)
def blade_order(n: int) -> tuple[Blade, ...]:
    """Blade masks for n generators sorted by (grade, mask)."""
    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), m)))


def blade_to_text(blade: Blade) -> str:
    """Canonical text form: '1' for the unit, else 'e' + ascending indices."""
    if blade == 0:
        return "1"
    digits = [str(i + 1) for i in range(blade.bit_length()) if blade >> i & 1]
    return "e" + "".join(digits)


def blade_from_text(text: str, n: int) -> Blade:
    """Parse the canonical blade text form; inverse of blade_to_text."""
    if text == "1":
        return 0
    if not text.startswith("e") or len(text) < 2:
        raise ValueError(f"invalid blade symbol {text!r}")
    mask = 0
    prev = 0
    for ch in text[1:]:
        if not ch.isdigit():
            raise ValueError(f"invalid blade symbol {text!r}")
        i = int(ch)
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} outside 1..{n} in {text!r}")
        if i <= prev:
            raise ValueError(f"blade indices must be strictly ascending in {text!r}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


@lru_cache(maxsize=None)
def _reorder_parities(n: int) -> bytearray:
    """Flat dim*dim table of transposition-count parities, row index a, column b."""
    dim = 1 << n
    par = bytearray(dim * dim)
    for a in range(dim):
        above = [(a >> (j + 1)).bit_count() & 1 for j in range(n)]
        row = a * dim
        for b in range(1, dim):
            low = b & -b
            par[row + b] = par[row + (b ^ low)] ^ above[low.bit_length() - 1]
    return par


@lru_cache(maxsize=None)
def product_signs(sig: Signature) -> list[int]:
    """Flat dim*dim table of blade product signs for a signature.

    Entry [a*dim + b] equals blade_mul(a, b, sig).sign; the result mask is
    always a ^ b.  Built once per signature and shared.
    """
    dim = sig.dim
    par = _reorder_parities(sig.n)
    neg = sig.neg_mask
    metric = [(m & neg).bit_count() & 1 for m in range(dim)]
    table = [0] * (dim * dim)
    i = 0
    for a in range(dim):
        for b in range(dim):
            table[i] = -1 if par[i] ^ metric[a & b] else 1
            i += 1
    return table
