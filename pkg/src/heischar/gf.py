"""Exact arithmetic in small finite fields F_q, q <= 256.

Elements are represented by integer codes 0 .. q-1.  For prime q the code
is the residue itself.  For q = p^k the code packs the coefficient vector
of a polynomial residue base p: code = c_0 + c_1*p + ... + c_{k-1}*p^{k-1},
reduced modulo a fixed irreducible polynomial so that codes mean the same
thing in every run.  All operations are table lookups after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FieldMismatch, NotPrimePower, TooLarge, ZeroInverse

MAX_ORDER = 256

# Fixed irreducible polynomial per (p, k), k >= 2: the lexicographically
# smallest monic irreducible, coefficients listed constant term first.
# Verified irreducible again at construction time.
_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 0, 0, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 0, 1, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 0, 1, 1, 1),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (5, 2): (1, 1, 1),
    (5, 3): (1, 0, 1, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (1, 3, 1),
}


def _prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    n = q
    p = None
    for d in range(2, q + 1):
        if d * d > n and p is None:
            p = n  # n is prime
            break
        if n % d == 0:
            p = d
            break
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    if n != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


def _poly_rem(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    while len(a) >= len(m):
        c = a[-1] % p
        if c:
            off = len(a) - len(m)
            for i, mi in enumerate(m):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
    return a


def _check_irreducible(m: tuple[int, ...], p: int) -> bool:
    import itertools
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for lows in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(list(m), tuple(lows) + (1,), p)):
                return False
    return True


class FieldSpec:
    """A finite field of order q with precomputed operation tables.

    Attributes q, p, k describe the order; ``add_table``, ``mul_table`` are
    q x q tuples of codes and ``inv_table`` maps nonzero codes to inverses
    (entry 0 is unused).  Two specs are equal iff they have the same order:
    construction is deterministic, so equal orders mean identical tables.
    """

    def __init__(self, q: int, p: int, k: int,
                 add_table: tuple[tuple[int, ...], ...],
                 mul_table: tuple[tuple[int, ...], ...],
                 inv_table: tuple[int, ...]):
        self.q = q
        self.p = p
        self.k = k
        self.add_table = add_table
        self.mul_table = mul_table
        self.inv_table = inv_table
        # negation: -a is the code b with a + b = 0
        neg = [0] * q
        for a in range(q):
            neg[a] = add_table[a].index(0)
        self.neg_table = tuple(neg)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.q == self.q

    def __hash__(self):
        return hash(("FieldSpec", self.q))

    def __repr__(self):
        return f"FieldSpec(q={self.q})"

    # code-level arithmetic, used by the rest of the package
    def add_code(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub_code(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul_code(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg_code(self, a: int) -> int:
        return self.neg_table[a]

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in F_{self.q}")
        return self.inv_table[a]

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


@dataclass(frozen=True)
class FieldElement:
    """An element of a finite field, identified by its code."""

    field: FieldSpec
    code: int

    def _coerce(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field.q != self.field.q:
            raise FieldMismatch(f"F_{self.field.q} vs F_{other.field.q}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.add_code(self.code, other.code))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.sub_code(self.code, other.code))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_code(self.code, other.code))

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_code(self.code, self.field.inv_code(other.code)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"F{self.field.q}({self.code})"


@lru_cache(maxsize=None)
def field_make(q: int) -> FieldSpec:
    """Construct (and cache) the field of order q.

    Raises TooLarge for q > 256 and NotPrimePower when q has two distinct
    prime factors or q < 2.
    """
    if q > MAX_ORDER:
        raise TooLarge(f"field order {q} exceeds the maximum {MAX_ORDER}")
    p, k = _prime_power(q)
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
        inv = (0,) + tuple(pow(a, -1, p) for a in range(1, p))
        return FieldSpec(q, p, k, add, mul, inv)

    modulus = _IRREDUCIBLE[(p, k)]
    if not _check_irreducible(modulus, p):
        raise AssertionError(f"modulus table entry for ({p}, {k}) is reducible")

    def digits(code: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(code % p)
            code //= p
        return out

    def pack(coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs[:k] + [0] * (k - len(coeffs))):
            code = code * p + c
        return code

    add_rows = []
    mul_rows = []
    for a in range(q):
        da = digits(a)
        add_rows.append(tuple(pack([(x + y) % p for x, y in zip(da, digits(b))]) for b in range(q)))
        row = []
        for b in range(q):
            db = digits(b)
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
            rem = _poly_rem(prod, modulus, p)
            row.append(pack(rem + [0] * (k - len(rem))))
        mul_rows.append(tuple(row))
    mul = tuple(mul_rows)
    inv = [0] * q
    for a in range(1, q):
        inv[a] = mul[a].index(1)
    return FieldSpec(q, p, k, tuple(add_rows), mul, tuple(inv))


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Field addition; raises FieldMismatch across different fields."""
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Field multiplication; raises FieldMismatch across different fields."""
    return a * b


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroInverse on the zero element."""
    return FieldElement(a.field, a.field.inv_code(a.code))
