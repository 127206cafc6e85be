"""Integer modular arithmetic at desk scale.

Everything here is deliberately brute force: square roots, units and
product-ring units are found by scanning, which keeps each routine its
own sanity check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ModulusError, NotAUnit

OPS = ("add", "sub", "mul")


@dataclass(frozen=True, order=True)
class Residue:
    """The class ``[value]_modulus``, always stored reduced."""

    value: int
    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ModulusError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        if not 0 <= self.value < self.modulus:
            raise ModulusError(f"value {self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, value: int, modulus: int) -> Residue:
        if modulus < 2:
            raise ModulusError(f"modulus must be >= 2, got {modulus}")
        return cls(value % modulus, modulus)

    def __str__(self):
        return f"[{self.value}]_{self.modulus}"

    def __add__(self, other):
        return residue_op(self, other, "add")

    def __sub__(self, other):
        return residue_op(self, other, "sub")

    def __mul__(self, other):
        return residue_op(self, other, "mul")


def residue_op(a: Residue, b: Residue, op: str) -> Residue:
    if a.modulus != b.modulus:
        raise ModulusError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    if op == "add":
        v = a.value + b.value
    elif op == "sub":
        v = a.value - b.value
    elif op == "mul":
        v = a.value * b.value
    else:
        raise ValueError(f"unknown operation {op!r}")
    return Residue(v % a.modulus, a.modulus)


def mod_inverse(a: Residue) -> Residue:
    """Inverse of a unit; raises :class:`NotAUnit` otherwise (including 0)."""
    n = a.modulus
    if math.gcd(a.value, n) != 1:
        raise NotAUnit(f"{a} is not a unit (gcd({a.value}, {n}) = {math.gcd(a.value, n)})")
    return Residue(pow(a.value, -1, n), n)


def solve_square(a: Residue) -> list[Residue]:
    """All x with x*x == a, ascending."""
    n = a.modulus
    return [Residue(x, n) for x in range(n) if (x * x) % n == a.value]


def additive_order(x: Residue) -> int:
    return x.modulus // math.gcd(x.value, x.modulus)


def _check_modulus(n):
    if not isinstance(n, int) or n < 2:
        raise ModulusError(f"modulus must be an integer >= 2, got {n!r}")


def unit_group(n: int) -> list[Residue]:
    _check_modulus(n)
    return [Residue(x, n) for x in range(1, n) if math.gcd(x, n) == 1]


@dataclass(frozen=True)
class DigitRuleQuery:
    base: int
    divisor: int

    def __post_init__(self):
        if self.base < 2:
            raise ModulusError(f"base must be >= 2, got {self.base}")
        if self.divisor < 1:
            raise ModulusError(f"divisor must be >= 1, got {self.divisor}")


def digit_sum(n: int, base: int) -> int:
    s = 0
    while n:
        n, d = divmod(n, base)
        s += d
    return s


def digit_sum_rule_valid(q: DigitRuleQuery) -> bool:
    """Whether ``m | N  <=>  m | digitsum_b(N)`` holds for every N >= 0.

    Decided by ``b = 1 (mod m)``, under which N and its digit sum are
    congruent mod m.  When it fails a counterexample exists below ``b*m``;
    :func:`digit_sum_rule_counterexample` finds it by scanning.
    """
    return (q.base - 1) % q.divisor == 0


def digit_sum_rule_counterexample(q: DigitRuleQuery, limit: int) -> int | None:
    """Smallest N < limit violating the digit-sum rule, by exhaustive scan."""
    m = q.divisor
    for n in range(limit):
        if (n % m == 0) != (digit_sum(n, q.base) % m == 0):
            return n
    return None


def product_ring_units(n1: int, n2: int) -> list[tuple[Residue, Residue]]:
    """Units of Z_n1 x Z_n2, found by searching for a componentwise inverse."""
    _check_modulus(n1)
    _check_modulus(n2)
    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    units = []
    for a, b in pairs:
        for c, d in pairs:
            if (a * c) % n1 == 1 % n1 and (b * d) % n2 == 1 % n2:
                units.append((Residue(a, n1), Residue(b, n2)))
                break
    return units
