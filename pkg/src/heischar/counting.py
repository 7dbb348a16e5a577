"""Counting polynomials in x = q - 1 for characters of U_n(F_q).

Twelve polynomial families are supported, all with exact integer
coefficients.  Writing x = q - 1:

=================  =====================================================
family             counts
=================  =====================================================
del                Heisenberg supercharacters of U_n  (labeled Pell paths)
pre_he             paths with steps R, N, U, UU ending on x+y = n-1
pre_in             paths with steps (2,1), (1,2), (0,1) ending there
he                 Heisenberg characters of U_n  (tilde-Heis paths)
inv                C-invariant Heisenberg characters of U_{n+1}
bell               supercharacters of U_n  (labeled set partitions)
cat                irreducible supercharacters  (noncrossing partitions)
fe                 C-invariant supercharacters of U_{n+1}  (feasible)
alt_bell           supercharacters of the subgroup ker(sigma) of U_n
alt_cat            irreducible supercharacters of ker(sigma)
alt_del            Heisenberg supercharacters of ker(sigma)
alt_he             Heisenberg characters of ker(sigma)
=================  =====================================================

Each family can be produced by up to three independent routes: ``poly``
(defining sums over a lattice-point DP), ``closed_form`` (binomial-sum
expressions) and ``series_coeffs`` (generating-function recurrences at a
fixed integer x); tests require the routes to agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import NonIntegralDivision, UnknownFamily


def binom(n: int, k: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


# ------------------------------------------------------------------ polynomials
@dataclass(frozen=True)
class IntPolynomial:
    """A dense polynomial with integer coefficients, constant term first.

    Normalized so that the coefficient tuple has no trailing zeros; the
    zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficient tuple has trailing zeros")

    @classmethod
    def from_list(cls, coeffs) -> "IntPolynomial":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls.from_list([c])

    @classmethod
    def x_power(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls.from_list([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_list(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPolynomial.from_list(out)

    def scale(self, c: int) -> "IntPolynomial":
        if c == 0:
            return IntPolynomial.zero()
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def shift_mul(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divexact_x_plus_1(self) -> "IntPolynomial":
        """Exact division by (x + 1); NonIntegralDivision on any remainder."""
        r = list(self.coeffs)
        q = [0] * max(len(r) - 1, 0)
        for i in range(len(r) - 1, 0, -1):
            q[i - 1] = r[i]
            r[i - 1] -= r[i]
            r[i] = 0
        if r and r[0] != 0:
            raise NonIntegralDivision(f"remainder {r[0]} dividing {self.coeffs} by (x+1)")
        return IntPolynomial.from_list(q)

    def in_q(self) -> "IntPolynomial":
        """Re-expand p(x) with x = q - 1 as a polynomial in q."""
        out = IntPolynomial.zero()
        q_minus_1 = IntPolynomial.from_list([-1, 1])
        power = IntPolynomial.const(1)
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * q_minus_1
        return out

    def is_palindromic(self) -> bool:
        c = self.coeffs
        return c == tuple(reversed(c))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


ONE_PLUS_X = IntPolynomial.from_list([1, 1])


def _one_plus_x_pow(e: int) -> IntPolynomial:
    return IntPolynomial.from_list([binom(e, i) for i in range(e + 1)])


# --------------------------------------------------------------- lattice DPs
_DELANNOY_STEPS = {
    "D": ((1, 0), (1, 1), (0, 1)),
    "Dp": ((1, 0), (1, 1), (0, 1), (0, 2)),
    "Dpp": ((2, 1), (1, 2), (0, 1)),
}

_DELANNOY_CLOSED = {
    "D": lambda a, b: sum(binom(a + b - k, k) * binom(a + b - 2 * k, b - k)
                          for k in range(0, min(a, b) + 1)),
    "Dp": lambda a, b: sum(binom(k, a + b - k) * binom(k, a)
                           for k in range(0, a + b + 1)),
    "Dpp": lambda a, b: sum(binom(a + b - 2 * k, k) * binom(k, a - k)
                            for k in range(0, a + b + 1)),
}


@lru_cache(maxsize=None)
def delannoy(kind: str, a: int, b: int) -> int:
    """Number of unlabeled paths from the origin to (a, b).

    kind "D" uses steps (1,0), (1,1), (0,1); "Dp" adds (0,2); "Dpp" uses
    (2,1), (1,2), (0,1).  Computed by the step recurrence and, the first
    time each value is requested, cross-checked against the closed-form
    binomial sum.
    """
    if kind not in _DELANNOY_STEPS:
        raise UnknownFamily(f"unknown Delannoy kind {kind!r}")
    if a < 0 or b < 0:
        return 0
    if a == 0 and b == 0:
        return 1
    value = sum(delannoy(kind, a - dx, b - dy) for dx, dy in _DELANNOY_STEPS[kind])
    check = _DELANNOY_CLOSED[kind](a, b)
    if value != check:
        raise AssertionError(f"delannoy({kind},{a},{b}): DP {value} != closed {check}")
    return value


# ------------------------------------------------------- auxiliary numbers
@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def assoc_stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k blocks all of size >= 2."""
    if n == 0:
        return 1 if k == 0 else 0
    if n < 0 or k <= 0:
        return 0
    return k * assoc_stirling2(n - 1, k) + (n - 1) * assoc_stirling2(n - 2, k - 1)


def narayana(n: int, k: int) -> int:
    """Narayana numbers N(n, k) = C(n,k) C(n,k-1) / n for n > 0."""
    if n == 0:
        return 1 if k == 0 else 0
    return binom(n, k) * binom(n, k - 1) // n


def catalan(n: int) -> int:
    return binom(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """Fibonacci numbers with f_0 = 0, f_1 = f_2 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < 2:
        return n
    return fibonacci(n - 1) + fibonacci(n - 2)


# ------------------------------------------------------------- poly families
_PATH_FAMILY_KIND = {"del": "D", "pre_he": "Dp", "pre_in": "Dpp"}

FAMILIES = ("del", "pre_he", "pre_in", "he", "inv", "bell", "cat", "fe",
            "alt_bell", "alt_cat", "alt_del", "alt_he")


def _path_poly(kind: str, n: int) -> IntPolynomial:
    if n <= 0:
        return IntPolynomial.zero()
    return IntPolynomial.from_list([delannoy(kind, n - 1 - k, k) for k in range(n)])


@lru_cache(maxsize=None)
def poly(family: str, n: int) -> IntPolynomial:
    """The family polynomial at index n, from its defining sum.

    Path families accept any n >= 0 (non-positive indices give 0);
    alt_bell/alt_cat/alt_del need n >= 1 and alt_he needs n >= 2.
    """
    if family in _PATH_FAMILY_KIND:
        return _path_poly(_PATH_FAMILY_KIND[family], n)
    if family == "he":
        return poly("pre_he", n) - poly("pre_he", n - 2).shift_mul(2)
    if family == "inv":
        return (poly("pre_in", n - 1) + poly("pre_in", n - 2)).shift_mul(1)
    if family == "bell":
        if n < 0:
            return IntPolynomial.zero()
        return IntPolynomial.from_list([stirling2(n, n - k) for k in range(n + 1)])
    if family == "cat":
        if n < 0:
            return IntPolynomial.zero()
        return IntPolynomial.from_list([narayana(n, n - k) for k in range(n + 1)])
    if family == "fe":
        if n < 0:
            return IntPolynomial.zero()
        return IntPolynomial.from_list([assoc_stirling2(n, n - k) for k in range(n + 1)])
    if family == "alt_bell":
        _need(family, n, 1)
        fe = poly("fe", n - 1)
        return (poly("bell", n) - fe).divexact_x_plus_1() + fe
    if family == "alt_cat":
        _need(family, n, 1)
        return _alt_from_sign("cat", n)
    if family == "alt_del":
        _need(family, n, 1)
        return _alt_from_sign("del", n)
    if family == "alt_he":
        _need(family, n, 2)
        inv = poly("inv", n - 1)
        return (poly("he", n) - inv).divexact_x_plus_1() + ONE_PLUS_X * inv
    raise UnknownFamily(f"unknown polynomial family {family!r}")


def _need(family: str, n: int, least: int):
    if n < least:
        raise ValueError(f"family {family!r} is defined for n >= {least}")


def _alt_from_sign(base: str, n: int) -> IntPolynomial:
    """(P_n(x) - (-x)^floor((n-1)/2) P_n(-1)) / (x + 1) for P = cat or del."""
    p = poly(base, n)
    m = (n - 1) // 2
    sign_term = IntPolynomial.x_power(m, (-1) ** m * p(-1)) if p(-1) else IntPolynomial.zero()
    return (p - sign_term).divexact_x_plus_1()


# --------------------------------------------------------------- closed forms
CLOSED_FORM_FAMILIES = ("del", "pre_he", "pre_in", "he", "inv",
                        "alt_bell", "alt_cat", "alt_del")


def closed_form(family: str, n: int) -> IntPolynomial:
    """The family polynomial via its binomial-sum expression.

    An independent route from ``poly``; the two must agree wherever both
    are defined.
    """
    if family == "del":
        if n <= 0:
            return IntPolynomial.zero()
        return _sum(IntPolynomial.x_power(k, binom(n - 1 - k, k)) * _one_plus_x_pow(n - 1 - 2 * k)
                    for k in range((n - 1) // 2 + 1))
    if family == "pre_he":
        if n <= 0:
            return IntPolynomial.zero()
        return _sum(IntPolynomial.x_power(k, binom(n - 1 - k, k)) * _one_plus_x_pow(n - 1 - k)
                    for k in range((n - 1) // 2 + 1))
    if family == "pre_in":
        if n <= 0:
            return IntPolynomial.zero()
        return _sum(IntPolynomial.x_power(n - 1 - 2 * k, binom(n - 1 - 2 * k, k)) * _one_plus_x_pow(k)
                    for k in range((n - 1) // 3 + 1))
    if family == "he":
        if n <= 0:
            return IntPolynomial.zero()
        if n == 1:
            return IntPolynomial.const(1)
        m = n - 1
        return _sum((IntPolynomial.const(binom(m - k, k))
                     + IntPolynomial.x_power(1, binom(m - 1 - k, k)))
                    * IntPolynomial.x_power(k) * _one_plus_x_pow(m - 1 - k)
                    for k in range(m // 2 + 1))
    if family == "inv":
        if n <= 1:
            return IntPolynomial.zero()
        m = n - 1
        return _sum((IntPolynomial.const(binom(m - 2 * k - 2, k))
                     + IntPolynomial.x_power(1, binom(m - 2 * k - 1, k)))
                    * IntPolynomial.x_power(m - 2 * k - 1) * _one_plus_x_pow(k)
                    for k in range((m - 1) // 3 + 1))
    if family == "alt_bell":
        _need(family, n, 1)
        m = n - 1
        return _sum(poly("fe", m - k).scale(binom(m, k))
                    * _one_plus_x_pow(k - 1 if k else 0)
                    for k in range(m + 1))
    if family == "alt_cat":
        _need(family, n, 1)
        m = n - 1
        return _sum(IntPolynomial.x_power(k, catalan(k) * binom(m, 2 * k))
                    * _one_plus_x_pow(m - 1 - 2 * k)
                    for k in range((m - 1) // 2 + 1)) if m >= 1 else IntPolynomial.zero()
    if family == "alt_del":
        _need(family, n, 1)
        m = n - 1
        return _sum(IntPolynomial.x_power(k, binom(m - k, k))
                    * _one_plus_x_pow(m - 1 - 2 * k)
                    for k in range((m - 1) // 2 + 1)) if m >= 1 else IntPolynomial.zero()
    raise UnknownFamily(f"no closed form for family {family!r}")


def _sum(terms) -> IntPolynomial:
    out = IntPolynomial.zero()
    for t in terms:
        out = out + t
    return out


# ------------------------------------------------------------- series route
_SERIES_FAMILIES = ("del", "pre_he", "pre_in")


def series_coeffs(family: str, x: int, count: int) -> list[int]:
    """First ``count`` values of the family at integer x = q - 1, starting
    at index 0, from the generating-function recurrence:

    del:    c_n = (x+1) c_{n-1} + x c_{n-2}
    pre_he: c_n = (x+1) c_{n-1} + x(x+1) c_{n-2}
    pre_in: c_n = x c_{n-1} + x(x+1) c_{n-3}

    with c_0 = 0 and c_1 = 1 in every family.
    """
    if family not in _SERIES_FAMILIES:
        raise UnknownFamily(f"no series recurrence for family {family!r}")
    out = []
    for n in range(count):
        if n == 0:
            out.append(0)
        elif n == 1:
            out.append(1)
        elif family == "del":
            out.append((x + 1) * out[n - 1] + x * out[n - 2])
        elif family == "pre_he":
            out.append((x + 1) * out[n - 1] + x * (x + 1) * out[n - 2])
        else:
            prev3 = out[n - 3] if n >= 3 else 0
            out.append(x * out[n - 1] + x * (x + 1) * prev3)
    return out


# --------------------------------------------------------- derived counters
def degree_count(n: int, e: int, as_polynomial: bool = False, q: int | None = None):
    """Number of Heisenberg characters of U_n with degree q^e.

    The count is q^{n-e-2} (C(n-e-1, e) (q-1)^e + C(n-e-2, e) (q-1)^{e+1});
    a binomial term contributes only when nonzero, which keeps every power
    of q nonnegative.  With as_polynomial=True the result is an
    IntPolynomial in x = q - 1 (q expanded as x + 1); otherwise q must be
    given and the evaluated integer is returned.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if e < 0:
        raise ValueError("e must be >= 0")
    out = IntPolynomial.zero()
    c1, c2 = binom(n - e - 1, e), binom(n - e - 2, e)
    if c1:
        out = out + IntPolynomial.x_power(e, c1) * _one_plus_x_pow(n - e - 2)
    if c2:
        out = out + IntPolynomial.x_power(e + 1, c2) * _one_plus_x_pow(n - e - 2)
    if as_polynomial:
        return out
    if q is None:
        raise ValueError("q is required when as_polynomial is false")
    return out(q - 1)


def _sin_quarter(m: int) -> int:
    """sin(m pi / 2) as an exact integer."""
    return (0, 1, 0, -1)[m % 4]


def c_invariant_heis_count(n: int, q: int, method: str = "compositions") -> int:
    """Number of C-invariant Heisenberg characters of U_{n+1}(F_q),
    which equals In_n(q - 1).

    method "compositions" sums, over compositions (c_1, ..., c_l) of n,
    the product of (q-1)^{c_i - 1} - sin(c_i pi/2) (q-1)^{(c_i - 1)/2},
    with the sine taken exactly by residue mod 4; method "recurrence"
    evaluates In_n at x = q - 1 via In_m = x In_{m-1} + x(x+1) In_{m-3}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x = q - 1
    if method == "compositions":
        total = 0
        # compositions of n via subsets of the n-1 gaps
        for cuts in itertools.product((0, 1), repeat=n - 1):
            parts = []
            size = 1
            for cut in cuts:
                if cut:
                    parts.append(size)
                    size = 1
                else:
                    size += 1
            parts.append(size)
            prod = 1
            for c in parts:
                s = _sin_quarter(c)
                term = x ** (c - 1) - (s * x ** ((c - 1) // 2) if s else 0)
                prod *= term
                if prod == 0:
                    break
            total += prod
        return total
    if method == "recurrence":
        vals = {0: 0, 1: 0, 2: x, 3: x * (x + 1)}
        for i in range(4, n + 1):
            vals[i] = x * vals[i - 1] + x * (x + 1) * vals[i - 3]
        return vals[n]
    raise ValueError(f"unknown method {method!r}")


def tech_lem_count(d: int, q: int) -> int:
    """f_d(q) = ((q-1)^{2d} - (-1)^d (q-1)^d) / q, checked to be integral."""
    if d < 1:
        raise ValueError("d must be >= 1")
    num = (q - 1) ** (2 * d) - (-1) ** d * (q - 1) ** d
    if num % q:
        raise NonIntegralDivision(f"f_{d}({q}) is not integral")
    return num // q


# ------------------------------------------------------------- sequence table
# Named integer sequences realized by these polynomials.  The provenance
# tag is the OEIS identifier of the sequence (offsets may differ).
SEQUENCES = {
    "fibonacci": ("A000045", "leading coefficient of he at index n+1",
                  lambda k: fibonacci(k)),
    "pell": ("A000129", "del at x=1: Heisenberg supercharacters over F_2",
             lambda k: poly("del", k)(1)),
    "del_q3": ("A007482", "del at x=2: Heisenberg supercharacters over F_3",
               lambda k: poly("del", k)(2)),
    "he_q2": ("A052945", "he at x=1: Heisenberg characters over F_2, from n=1",
              lambda k: poly("he", k + 1)(1)),
    "dp_row1": ("A023610", "D'(1, n): coefficient of x^n in pre_he at n+2",
                lambda k: delannoy("Dp", 1, k)),
    "dp_row1_diff": ("A055244", "D'(1, n) - D'(1, n-2)",
                     lambda k: delannoy("Dp", 1, k) - delannoy("Dp", 1, k - 2)),
    "bell_q2": ("A000110", "bell at x=1: supercharacters over F_2",
                lambda k: poly("bell", k)(1)),
    "catalan_q2": ("A000108", "cat at x=1: irreducible supercharacters over F_2",
                   lambda k: poly("cat", k)(1)),
    "fe_q2": ("A000296", "fe at x=1: C-invariant supercharacters over F_2",
              lambda k: poly("fe", k)(1)),
    "alt_cat_q2": ("A000150", "alt_cat at x=1, from n=2",
                   lambda k: poly("alt_cat", k + 2)(1)),
    "alt_del_q2": ("A105635", "alt_del at x=1, from n=1",
                   lambda k: poly("alt_del", k + 1)(1)),
    "alt_bell_even_diff": ("A102287", "alt_bell - bell(n-1) at x=1, from n=2",
                           lambda k: poly("alt_bell", k + 2)(1) - poly("bell", k + 1)(1)),
    "alt_bell_odd_diff": ("A102286", "bell - alt_bell at x=1, from n=2",
                          lambda k: poly("bell", k + 2)(1) - poly("alt_bell", k + 2)(1)),
}


def sequence_values(name: str, count: int) -> list[int]:
    """First ``count`` values of a named sequence from SEQUENCES."""
    if name not in SEQUENCES:
        raise UnknownFamily(f"unknown sequence {name!r}")
    _, _, fn = SEQUENCES[name]
    return [fn(k) for k in range(count)]
