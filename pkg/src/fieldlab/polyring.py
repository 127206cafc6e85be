"""Polynomials over Z_p.

A polynomial a_0 + a_1 z + ... + a_n z^n is stored as the tuple
(a_0, ..., a_n) with a_n != 0; the zero polynomial is the empty tuple and
has no degree (``degree`` is ``None``).  The variable name is carried for
printing only and never takes part in comparisons.

Irreducibility and factorization are decided by trial division over every
monic polynomial of the relevant degrees, so the hard limits below are
part of the contract rather than tuning knobs.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import LimitExceeded, MismatchError, NotPrime

MAX_FACTOR_P = 13
MAX_FACTOR_DEGREE = 8
# cap on p**d for monic_irreducibles, which has to list every monic polynomial
MAX_ENUMERATION = 2 ** 20
# cap on the number of trial divisors is_irreducible may try
MAX_TRIAL_DIVISORS = 2 ** 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PrimePoly:
    p: int
    coeffs: tuple[int, ...]
    var: str = field(default="z", compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"characteristic {self.p} is not prime")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use PrimePoly.make")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")

    @classmethod
    def make(cls, p: int, coeffs, var: str = "z") -> PrimePoly:
        """Reduce arbitrary integer coefficients mod p and trim."""
        return cls(p, _trim(c % p for c in coeffs), var)

    @classmethod
    def zero(cls, p, var="z"):
        return cls(p, (), var)

    @classmethod
    def one(cls, p, var="z"):
        return cls(p, (1,), var)

    @classmethod
    def monomial(cls, p, degree, coeff=1, var="z"):
        return cls.make(p, [0] * degree + [coeff], var)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def key(self) -> int:
        """Coefficient sequence read as a base-p integer (a_0 least significant)."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.p + c
        return k

    def __add__(self, other):
        return poly_op(self, other, "add")

    def __sub__(self, other):
        return poly_op(self, other, "sub")

    def __mul__(self, other):
        return poly_op(self, other, "mul")

    def __neg__(self):
        return PrimePoly.make(self.p, [-c for c in self.coeffs], self.var)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __pow__(self, e: int):
        result = PrimePoly.one(self.p, self.var)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, c: int) -> PrimePoly:
        return PrimePoly.make(self.p, [c * a for a in self.coeffs], self.var)

    def monic(self) -> PrimePoly:
        return self.scale(pow(self.lead, -1, self.p))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"PrimePoly(p={self.p}, {format_poly(self)})"


def _check_same(f, g):
    if f.p != g.p:
        raise MismatchError(f"characteristic mismatch: {f.p} vs {g.p}")


def poly_op(f: PrimePoly, g: PrimePoly, op: str) -> PrimePoly:
    _check_same(f, g)
    p = f.p
    if op in ("add", "sub"):
        sign = 1 if op == "add" else -1
        n = max(len(f.coeffs), len(g.coeffs))
        a = f.coeffs + (0,) * (n - len(f.coeffs))
        b = g.coeffs + (0,) * (n - len(g.coeffs))
        return PrimePoly.make(p, [x + sign * y for x, y in zip(a, b)], f.var)
    if op == "mul":
        if not f or not g:
            return PrimePoly.zero(p, f.var)
        out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
        for i, x in enumerate(f.coeffs):
            if x:
                for j, y in enumerate(g.coeffs):
                    out[i + j] += x * y
        return PrimePoly.make(p, out, f.var)
    raise ValueError(f"unknown operation {op!r}")


def poly_divmod(f: PrimePoly, g: PrimePoly) -> tuple[PrimePoly, PrimePoly]:
    """Long division: f = q*g + r with deg r < deg g."""
    _check_same(f, g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.p
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    inv_lead = pow(g.lead, -1, p)
    quot = [0] * max(len(rem) - dg, 0)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        c = rem[shift + dg] * inv_lead % p
        if c:
            quot[shift] = c
            for j, b in enumerate(g.coeffs):
                rem[shift + j] = (rem[shift + j] - c * b) % p
    return PrimePoly.make(p, quot, f.var), PrimePoly.make(p, rem[:dg], f.var)


def poly_roots(f: PrimePoly) -> list[int]:
    if not f:
        raise ValueError("every element is a root of the zero polynomial")
    return [a for a in range(f.p) if f(a) == 0]


def monic_polys(p: int, d: int, var: str = "z"):
    """Every monic polynomial of degree d, in increasing base-p key order."""
    for low in itertools.product(range(p), repeat=d):
        yield PrimePoly(p, tuple(reversed(low)) + (1,), var)


def _smallest_factor(f: PrimePoly):
    """Least monic divisor of degree 1..deg(f)//2, or None."""
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.p, d, f.var):
            if not poly_divmod(f, g)[1]:
                return g
    return None


def is_irreducible(f: PrimePoly) -> bool:
    if not f or f.degree == 0:
        raise ValueError("irreducibility is only defined for degree >= 1")
    half = f.degree // 2
    if sum(f.p ** d for d in range(1, half + 1)) > MAX_TRIAL_DIVISORS:
        raise LimitExceeded(f"trial division for degree {f.degree} over Z_{f.p} is too large")
    return _smallest_factor(f) is None


def factor_poly(f: PrimePoly) -> tuple[int, list[PrimePoly]]:
    """Return ``(unit, factors)`` with f == unit * prod(factors).

    Factors are monic irreducibles listed with multiplicity, sorted by
    degree and then by coefficient key.
    """
    if not f or f.degree == 0:
        raise ValueError("factor_poly needs degree >= 1")
    if f.p > MAX_FACTOR_P or f.degree > MAX_FACTOR_DEGREE:
        raise LimitExceeded(
            f"factor_poly limited to p <= {MAX_FACTOR_P}, degree <= {MAX_FACTOR_DEGREE}")
    unit = f.lead
    factors = []
    rest = f.monic()
    while rest.degree > 0:
        g = _smallest_factor(rest)
        if g is None:
            factors.append(rest)
            break
        factors.append(g)
        rest = poly_divmod(rest, g)[0]
    factors.sort(key=lambda g: (g.degree, g.key()))
    return unit, factors


def monic_irreducibles(p: int, d: int, var: str = "z") -> list[PrimePoly]:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p > MAX_FACTOR_P or not 1 <= d <= MAX_FACTOR_DEGREE or p ** d > MAX_ENUMERATION:
        raise LimitExceeded(f"monic_irreducibles({p}, {d}) exceeds the enumeration limits")
    return [f for f in monic_polys(p, d, var) if _smallest_factor(f) is None]


# text forms --------------------------------------------------------------

def format_poly(f: PrimePoly) -> str:
    """Human form, ascending: ``1+z+z^2``, ``3+2z^3``; zero is ``0``."""
    if not f:
        return "0"
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = f.var if i == 1 else f"{f.var}^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


def format_coeffs(f: PrimePoly) -> str:
    return "[" + ",".join(map(str, f.coeffs)) + "]"


_TERM = re.compile(r"^(\d*)\*?([A-Za-z]?)(?:\^(\d+))?$")


def parse_poly(text: str, p: int) -> PrimePoly:
    """Parse either ``[1,1,1]`` (ascending coefficients) or ``1+z+z^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated coefficient list {text!r}")
        body = s[1:-1]
        coeffs = [int(c) for c in body.split(",")] if body else []
        return PrimePoly.make(p, coeffs)
    coeffs: dict[int, int] = {}
    var = None
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m or term == "":
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        coef, sym, exp = m.groups()
        if not sym:
            if exp is not None or not coef:
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            deg = 0
        else:
            if var is not None and sym != var:
                raise ValueError(f"mixed variables {var!r} and {sym!r}")
            var = sym
            deg = int(exp) if exp is not None else 1
        c = int(coef) if coef else 1
        coeffs[deg] = coeffs.get(deg, 0) + c
    top = max(coeffs)
    return PrimePoly.make(p, [coeffs.get(i, 0) for i in range(top + 1)], var or "z")
