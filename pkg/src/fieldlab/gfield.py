"""Finite fields as quotient rings Z_p[z]/<f>.

The only field representation is a polynomial ring in one variable
modulo a monic irreducible polynomial; the prime field Z_p is the case
f = z.  Products are remainders of polynomial long division by f.

Elements are indexed by their coefficient sequence read as a base-p
integer, so 0 has index 0 and 1 has index 1.  That indexing fixes the
layout of every operation table produced here.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (LimitExceeded, MismatchError, NotIrreducible, NotMonic,
                     NotPrime, ZeroInverse)
from .polyring import PrimePoly, is_irreducible, is_prime, poly_divmod

MAX_ELEMENT_ORDER = 2 ** 16
MAX_TABLE_ORDER = 256


@dataclass(frozen=True)
class FieldSpec:
    p: int
    modulus: PrimePoly

    @property
    def degree(self) -> int:
        """Extension degree r, so that the order is p**r."""
        return self.modulus.degree

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def __str__(self):
        if self.degree == 1:
            return f"F_{self.p}"
        return f"F_{self.order} = Z_{self.p}[{self.modulus.var}]/<{self.modulus}>"

    def descriptor(self) -> str:
        return f"p={self.p},f=[{','.join(map(str, self.modulus.coeffs))}]"

    def elem(self, value) -> FieldElem:
        """Build an element from an index, a coefficient list, or a PrimePoly."""
        if isinstance(value, FieldElem):
            value = value.rep
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"index {value} out of range for {self}")
            coeffs = []
            while value:
                value, c = divmod(value, self.p)
                coeffs.append(c)
            rep = PrimePoly.make(self.p, coeffs, self.modulus.var)
        elif isinstance(value, PrimePoly):
            if value.p != self.p:
                raise MismatchError("coefficient field does not match")
            rep = poly_divmod(value, self.modulus)[1]
        else:
            rep = poly_divmod(PrimePoly.make(self.p, value, self.modulus.var), self.modulus)[1]
        return FieldElem(self, rep)

    @property
    def zero(self) -> FieldElem:
        return self.elem(0)

    @property
    def one(self) -> FieldElem:
        return self.elem(1)

    def elements(self) -> list[FieldElem]:
        _check_element_order(self)
        return [self.elem(i) for i in range(self.order)]

    def tables(self) -> OpTablePair:
        return build_op_tables(self)


def _check_element_order(spec):
    if spec.order > MAX_ELEMENT_ORDER:
        raise LimitExceeded(f"fields of order {spec.order} exceed {MAX_ELEMENT_ORDER}")


def make_field(p: int, f: PrimePoly | None = None) -> FieldSpec:
    """Validate ``Z_p[z]/<f>``; ``f`` defaults to z (the prime field)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if f is None:
        f = PrimePoly(p, (0, 1))
    if f.p != p:
        raise MismatchError(f"modulus is over Z_{f.p}, expected Z_{p}")
    if not f or f.degree < 1:
        raise NotIrreducible(f"modulus {f} must have degree >= 1")
    if not f.is_monic():
        raise NotMonic(f"modulus {f} is not monic")
    if f.degree == 1 and f.coeffs != (0, 1):
        raise ValueError("prime fields use the modulus z")
    if not is_irreducible(f):
        raise NotIrreducible(f"{f} is reducible over Z_{p}")
    return FieldSpec(p, f)


@dataclass(frozen=True)
class FieldElem:
    spec: FieldSpec
    rep: PrimePoly

    @property
    def index(self) -> int:
        return self.rep.key()

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def __add__(self, other):
        return elem_op(self, other, "add")

    def __sub__(self, other):
        return elem_op(self, other, "sub")

    def __mul__(self, other):
        return elem_op(self, other, "mul")

    def __neg__(self):
        return FieldElem(self.spec, -self.rep)

    def __pow__(self, e: int):
        if e < 0:
            return elem_inverse(self) ** (-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        return self * elem_inverse(other)

    def __lt__(self, other):
        return self.index < other.index

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"FieldElem({self.rep} in F_{self.spec.order})"


def elem_op(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    if a.spec != b.spec:
        raise MismatchError("elements belong to different fields")
    if op == "add":
        rep = a.rep + b.rep
    elif op == "sub":
        rep = a.rep - b.rep
    elif op == "mul":
        rep = poly_divmod(a.rep * b.rep, a.spec.modulus)[1]
    else:
        raise ValueError(f"unknown operation {op!r}")
    return FieldElem(a.spec, rep)


def elem_inverse(a: FieldElem) -> FieldElem:
    """Inverse found by scanning every element."""
    if not a:
        raise ZeroInverse("0 has no multiplicative inverse")
    spec = a.spec
    _check_element_order(spec)
    one = spec.one
    for i in range(1, spec.order):
        b = spec.elem(i)
        if a * b == one:
            return b
    raise AssertionError(f"no inverse for {a}; modulus is not irreducible?")


def characteristic(spec: FieldSpec) -> int:
    """Count how many copies of 1 add up to 0."""
    one = spec.one
    acc, k = one, 1
    while acc:
        acc = acc + one
        k += 1
    assert k == spec.p, (k, spec.p)
    return k


def multiplicative_order(a: FieldElem) -> int:
    if not a:
        raise ZeroInverse("0 has no multiplicative order")
    one = a.spec.one
    acc, k = a, 1
    while acc != one:
        acc = acc * a
        k += 1
    return k


# operation tables ----------------------------------------------------------

@dataclass(frozen=True)
class OpTablePair:
    """Addition and multiplication tables on labels 0..size-1."""

    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        for name in ("add", "mul"):
            rows = getattr(self, name)
            if len(rows) != self.size or any(len(r) != self.size for r in rows):
                raise ValueError(f"{name} table is not {self.size}x{self.size}")
            if any(not 0 <= x < self.size for r in rows for x in r):
                raise ValueError(f"{name} table has labels outside [0, {self.size})")

    def to_dict(self) -> dict:
        return {"size": self.size,
                "add": [list(r) for r in self.add],
                "mul": [list(r) for r in self.mul]}

    @classmethod
    def from_dict(cls, d) -> OpTablePair:
        return cls(d["size"], d["add"], d["mul"])

    def relabel(self, perm) -> OpTablePair:
        """Tables after renaming label i to perm[i]."""
        n = self.size
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                add[perm[i]][perm[j]] = perm[self.add[i][j]]
                mul[perm[i]][perm[j]] = perm[self.mul[i][j]]
        return OpTablePair(n, add, mul)

    def sort_key(self):
        return (self.add, self.mul)


@functools.lru_cache(maxsize=64)
def build_op_tables(spec: FieldSpec) -> OpTablePair:
    if spec.order > MAX_TABLE_ORDER:
        raise LimitExceeded(f"tables limited to order {MAX_TABLE_ORDER}, got {spec.order}")
    elems = [spec.elem(i) for i in range(spec.order)]
    add = [[(a + b).index for b in elems] for a in elems]
    mul = [[(a * b).index for b in elems] for a in elems]
    return OpTablePair(spec.order, add, mul)


class Violation(NamedTuple):
    rule: str
    witness: tuple
    detail: str

    def __str__(self):
        return f"{self.rule}: {self.detail}"


def verify_field_axioms(t: OpTablePair) -> list[Violation]:
    """Check every field axiom with 0 and 1 as the identities."""
    n = t.size
    if n < 2:
        raise ValueError("field tables need at least 2 labels")
    A, M = t.add, t.mul
    out = []
    R = range(n)

    for name, T in (("add", A), ("mul", M)):
        w = next(((a, b) for a in R for b in R if T[a][b] != T[b][a]), None)
        if w:
            out.append(Violation(f"{name}-commutative", w,
                                 f"{w[0]} {name} {w[1]} != {w[1]} {name} {w[0]}"))
        w = next(((a, b, c) for a in R for b in R for c in R
                  if T[T[a][b]][c] != T[a][T[b][c]]), None)
        if w:
            out.append(Violation(f"{name}-associative", w,
                                 f"({w[0]} {name} {w[1]}) {name} {w[2]} differs from "
                                 f"{w[0]} {name} ({w[1]} {name} {w[2]})"))

    for x in R:
        if A[0][x] != x or A[x][0] != x:
            out.append(Violation("add-identity", (x,), f"0 + {x} != {x}"))
        if M[1][x] != x or M[x][1] != x:
            out.append(Violation("mul-identity", (x,), f"1 * {x} != {x}"))
    if all(M[0][x] == x for x in R):
        out.append(Violation("zero-ne-one", (0, 1), "label 0 also acts as multiplicative identity"))

    for x in R:
        if 0 not in A[x]:
            out.append(Violation("add-inverse", (x,), f"label {x} has no additive inverse"))
    for x in range(1, n):
        if 1 not in M[x]:
            out.append(Violation("mul-inverse", (x,), f"label {x} has no multiplicative inverse"))

    w = next(((a, b, c) for a in R for b in R for c in R
              if M[a][A[b][c]] != A[M[a][b]][M[a][c]]), None)
    if w:
        out.append(Violation("distributive", w,
                             f"{w[0]}*({w[1]}+{w[2]}) != {w[0]}*{w[1]} + {w[0]}*{w[2]}"))
    return out


def sudoku_violations(t: OpTablePair) -> list[Violation]:
    """Check the Latin-square consequence of the inverse axioms.

    Each addition row/column must be a permutation of all labels, and each
    nonzero multiplication row/column a permutation of the nonzero labels.
    """
    n = t.size
    full = set(range(n))
    nonzero = full - {0}
    out = []
    for i in range(n):
        if set(t.add[i]) != full:
            out.append(Violation("add-row", (i,), f"add row {i} repeats a label"))
        if {t.add[j][i] for j in range(n)} != full:
            out.append(Violation("add-col", (i,), f"add column {i} repeats a label"))
    for i in range(1, n):
        if {t.mul[i][j] for j in range(1, n)} != nonzero:
            out.append(Violation("mul-row", (i,), f"mul row {i} is not a permutation of nonzero labels"))
        if {t.mul[j][i] for j in range(1, n)} != nonzero:
            out.append(Violation("mul-col", (i,), f"mul column {i} is not a permutation of nonzero labels"))
    return out


def ring_tables(n: int) -> OpTablePair:
    """Tables of Z_n, field or not."""
    return OpTablePair(n, [[(a + b) % n for b in range(n)] for a in range(n)],
                       [[(a * b) % n for b in range(n)] for a in range(n)])


def field_of_order(q: int, modulus: PrimePoly | None = None) -> FieldSpec:
    """Field of order q, using the lexicographically first monic irreducible
    of the right degree unless a modulus is given."""
    from .polyring import monic_irreducibles

    p, r = prime_power(q)
    if modulus is not None:
        return make_field(p, modulus)
    if r == 1:
        return make_field(p)
    return make_field(p, monic_irreducibles(p, r)[0])


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**r, raising if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, r


def parse_field(text: str) -> FieldSpec:
    """Parse a descriptor such as ``p=2,f=[1,1,1]`` or ``p=7``."""
    from .polyring import parse_poly

    s = text.replace(" ", "")
    parts = {}
    i = 0
    while i < len(s):
        eq = s.index("=", i)
        key = s[i:eq]
        j = eq + 1
        if j < len(s) and s[j] == "[":
            end = s.index("]", j) + 1
        else:
            end = s.find(",", j)
            end = len(s) if end < 0 else end
        parts[key] = s[j:end]
        i = end + 1
    if "p" not in parts:
        raise ValueError(f"field descriptor {text!r} lacks p=")
    p = int(parts["p"])
    f = parse_poly(parts["f"], p) if "f" in parts else None
    return make_field(p, f)
