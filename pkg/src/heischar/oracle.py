"""Brute-force character theory for small unitriangular groups.

Everything here recomputes, from first principles, quantities that the
rest of the package produces by formula or bijection: orbits of
functionals under the one-sided, two-sided and coadjoint actions of
U_n(F_q), the l/s subalgebra chains attached to a functional and the
degree/irreducibility statistics they carry, conjugacy classes of the
group and of its quotient by 1 + n^3, and the analogous censuses for
the alternating subgroup ker(sigma).  The point is independence: these
routines know nothing about counting polynomials or lattice paths, so
agreement with them is evidence, not circularity.

Orbits are computed as breadth-first closures under the generators
1 + t e_{i,i+1} of U_n (which generate the group), with functionals
held as dense tuples of field codes.  For the superdiagonal generators
the action on a functional touches a single row or column of its
matrix, so moves are applied as sparse (destination, source) index
pairs; arbitrary generators (needed for the alternating subgroup) go
through precomputed dense action matrices.  Censuses sweep seeds in
lexicographic order, so every reported representative is the least
element of its orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .combinat import space_limit
from .errors import SpaceTooLarge, UnknownFamily
from .gf import FieldSpec, field_make
from .linalg import (Functional, StrictUpperMatrix, UnitriangularElement,
                     group_inv, group_mul, null_space, row_reduce,
                     triangle_positions)

HEISENBERG_METHODS = ("quotient_classes", "xi_census")
C_INVARIANT_KINDS = ("supercharacters", "irreducible_supercharacters",
                     "heisenberg_supercharacters", "heisenberg_characters")
GROUPS = ("full", "alternating")
ORBIT_MODES = ("left", "right", "two_sided", "coadjoint")


# --------------------------------------------------------------- result types
@dataclass(frozen=True)
class OrbitCensus:
    """All orbits of one action: (least representative, size) pairs and
    the total number of points, which the sizes must sum to."""

    mode: str
    orbits: tuple[tuple[object, int], ...]
    total: int

    def __len__(self):
        return len(self.orbits)

    def sizes(self) -> list[int]:
        return [size for _, size in self.orbits]


@dataclass(frozen=True)
class ChainResult:
    """The l/s subspace chains of a functional.

    l_chain[i] and s_chain[i] are row-reduced bases (tuples of code
    rows over the triangle positions) of l^i and s^i, where l^0 = 0,
    s^0 = n, and

        l^{i+1} = {X in s^i : lam(XY) = 0 for all Y in s^i},
        s^{i+1} = {X in s^i : lam(XY) = 0 for all Y in l^{i+1}}.

    Both chains are recorded up to and including their stable values
    l_bar and s_bar.  The chains are nested: l^1 <= l^2 <= ... <= l_bar
    <= s_bar <= ... <= s^1 <= s^0.
    """

    lam: Functional
    l_chain: tuple[tuple[tuple[int, ...], ...], ...]
    s_chain: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def l_bar(self):
        return self.l_chain[-1]

    @property
    def s_bar(self):
        return self.s_chain[-1]

    @property
    def l_dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.l_chain)

    @property
    def s_dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.s_chain)


@dataclass(frozen=True)
class XiStats:
    """Degree and irreducibility of the character xi attached to a
    coadjoint orbit: degree q^degree_exponent, irreducible iff the
    stable chain members coincide."""

    degree_exponent: int
    irreducible: bool
    l_bar_dim: int
    s_bar_dim: int


@dataclass(frozen=True)
class HeisenbergCount:
    """A Heisenberg character count; histogram maps degree exponents to
    character counts when the method produces one (xi_census)."""

    count: int
    histogram: dict[int, int] | None = None


@dataclass(frozen=True)
class SupercharacterCounts:
    """Censuses of one group's supercharacters: all of them, the
    irreducible ones, and the irreducible ones killing 1 + n^3."""

    supercharacters: int
    irreducible_supercharacters: int
    heisenberg_supercharacters: int


@dataclass(frozen=True)
class TruncatedElement:
    """An element of U_n modulo 1 + n^3, kept as its first and second
    superdiagonals (tuples of field codes of lengths n-1 and n-2).

    The product law follows from multiplying 1 + A and 1 + B and
    discarding everything past the second superdiagonal:

        (a b).d1[i] = a.d1[i] + b.d1[i]
        (a b).d2[i] = a.d2[i] + b.d2[i] + a.d1[i] * b.d1[i+1]
    """

    n: int
    field: FieldSpec
    d1: tuple[int, ...]
    d2: tuple[int, ...]

    def __post_init__(self):
        if len(self.d1) != max(self.n - 1, 0) or len(self.d2) != max(self.n - 2, 0):
            raise ValueError("superdiagonal lengths do not match n")

    @classmethod
    def one(cls, n: int, field: FieldSpec) -> "TruncatedElement":
        return cls(n, field, (0,) * max(n - 1, 0), (0,) * max(n - 2, 0))

    @classmethod
    def from_element(cls, g: UnitriangularElement) -> "TruncatedElement":
        d1 = tuple(g.entry(i, i + 1) for i in range(1, g.n))
        d2 = tuple(g.entry(i, i + 2) for i in range(1, g.n - 1))
        return cls(g.n, g.field, d1, d2)

    def mul(self, other: "TruncatedElement") -> "TruncatedElement":
        f = self.field
        d1 = tuple(f.add_code(a, b) for a, b in zip(self.d1, other.d1))
        d2 = tuple(f.add_code(f.add_code(a, b), f.mul_code(self.d1[i], other.d1[i + 1]))
                   for i, (a, b) in enumerate(zip(self.d2, other.d2)))
        return TruncatedElement(self.n, f, d1, d2)

    def inverse(self) -> "TruncatedElement":
        f = self.field
        d1 = tuple(f.neg_code(a) for a in self.d1)
        d2 = tuple(f.add_code(f.neg_code(a), f.mul_code(self.d1[i], self.d1[i + 1]))
                   for i, a in enumerate(self.d2))
        return TruncatedElement(self.n, f, d1, d2)

    def sigma(self) -> int:
        f = self.field
        acc = 0
        for a in self.d1:
            acc = f.add_code(acc, a)
        return acc


# ------------------------------------------------------------ generator moves
def _index_of(n: int) -> dict[tuple[int, int], int]:
    return {ij: a for a, ij in enumerate(triangle_positions(n))}

def _left_pairs(n: int, c: int) -> list[tuple[int, int]]:
    """(destination, source) index pairs of the left action of
    1 + t e_{c,c+1}: row c+1 of the matrix gains -t times row c."""
    idx = _index_of(n)
    return [(idx[c + 1, b], idx[c, b]) for b in range(c + 2, n + 1)]

def _right_pairs(n: int, c: int) -> list[tuple[int, int]]:
    """(destination, source) index pairs of the right action of
    1 + t e_{c,c+1}: column c gains -t times column c+1."""
    idx = _index_of(n)
    return [(idx[a, c], idx[a, c + 1]) for a in range(1, c)]


def _sparse_moves(n: int, field: FieldSpec, mode: str):
    """The generator moves of one action, one move per (c, t).

    A move is a tuple of (t, pairs) parts; applying it subtracts t
    times each source entry from its destination, all parts reading
    from the original codes.  The coadjoint move by 1 + t e_{c,c+1}
    combines the left part (with t) and the right part (with -t); the
    two parts read and write disjoint positions, so applying them
    against the original codes matches the simultaneous action."""
    moves = []
    for c in range(1, n):
        left, right = _left_pairs(n, c), _right_pairs(n, c)
        for t in range(1, field.q):
            if mode in ("left", "two_sided"):
                moves.append(((t, left),))
            if mode in ("right", "two_sided"):
                moves.append(((t, right),))
            if mode == "coadjoint":
                moves.append(((t, left), (field.neg_code(t), right)))
    return moves


def _apply_sparse(codes: tuple[int, ...], parts, field: FieldSpec):
    out = list(codes)
    for t, pairs in parts:
        for dst, src in pairs:
            s = codes[src]
            if s:
                out[dst] = field.sub_code(out[dst], field.mul_code(t, s))
    return tuple(out)


def _action_matrix(g: UnitriangularElement, mode: str) -> tuple[tuple[int, ...], ...]:
    """Dense matrix T with (g acting on lam)[a] = sum_b T[a][b] lam[b],
    for an arbitrary group element; rows follow triangle positions."""
    n, field = g.n, g.field
    ginv = group_inv(g)
    rows = []
    for (i, j) in triangle_positions(n):
        basis = StrictUpperMatrix.basis_element(n, field, i, j)
        if mode == "left":
            image = ginv.mul_matrix_left(basis)
        else:
            image = ginv.mul_matrix_right(basis)
        rows.append(image.codes)
    return tuple(rows)


def _apply_matrix(matrix, codes: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    out = []
    for row in matrix:
        acc = 0
        for coeff, v in zip(row, codes):
            if coeff and v:
                acc = field.add_code(acc, field.mul_code(coeff, v))
        out.append(acc)
    return tuple(out)


def _bfs(start: tuple[int, ...], step, bound: int, what: str) -> set[tuple[int, ...]]:
    """Closure of start under the moves yielded by step(codes)."""
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for codes in frontier:
            for nxt in step(codes):
                if nxt not in seen:
                    if len(seen) >= bound:
                        raise SpaceTooLarge(bound, None, what)
                    seen.add(nxt)
                    new.append(nxt)
        frontier = new
    return seen


def _sparse_stepper(moves, field: FieldSpec):
    def step(codes):
        for parts in moves:
            yield _apply_sparse(codes, parts, field)
    return step


def orbit(lam: Functional, mode: str, limit: int | None = None) -> set[Functional]:
    """The orbit of a functional under one of the four actions, as the
    breadth-first closure under the superdiagonal generators
    1 + t e_{i,i+1} (left, right, both, or conjugation-combined)."""
    if mode not in ORBIT_MODES:
        raise UnknownFamily(f"unknown action mode {mode!r}")
    field = lam.field
    moves = _sparse_moves(lam.n, field, mode)
    bound = space_limit(limit)
    seen = _bfs(lam.codes, _sparse_stepper(moves, field), bound,
                f"{mode} orbit in u_{lam.n}(F_{field.q})*")
    return {Functional.from_codes(lam.n, field, codes) for codes in seen}


def _orbit_codes(codes, n, field, mode, bound) -> set[tuple[int, ...]]:
    moves = _sparse_moves(n, field, mode)
    return _bfs(codes, _sparse_stepper(moves, field), bound,
                f"{mode} orbit in u_{n}(F_{field.q})*")


# ------------------------------------------------------------------ ls chains
def _matmul_codes(a: tuple[int, ...], b: tuple[int, ...], n: int,
                  field: FieldSpec) -> tuple[int, ...]:
    x = StrictUpperMatrix(n, field, a)
    y = StrictUpperMatrix(n, field, b)
    return x.matmul(y).codes


def _pairing_restrict(lam: Functional, s_basis, t_basis):
    """Basis of {X in span(s_basis) : lam(X Y) = 0 for all Y in span(t_basis)}."""
    n, field = lam.n, lam.field
    if not s_basis:
        return ()
    if not t_basis:
        return s_basis
    constraints = []
    for y in t_basis:
        row = []
        for x in s_basis:
            prod = _matmul_codes(x, y, n, field)
            row.append(lam.evaluate(StrictUpperMatrix(n, field, prod)))
        constraints.append(row)
    coeff_basis = null_space(constraints, field, len(s_basis))
    vectors = []
    for coeffs in coeff_basis:
        vec = [0] * len(s_basis[0])
        for c, x in zip(coeffs, s_basis):
            if c:
                for a, v in enumerate(x):
                    vec[a] = field.add_code(vec[a], field.mul_code(c, v))
        vectors.append(vec)
    return tuple(tuple(r) for r in row_reduce(vectors, field))


def ls_chain(lam: Functional) -> ChainResult:
    """Iterate the l/s recursion until both chains stabilize."""
    n, field = lam.n, lam.field
    npos = n * (n - 1) // 2
    full = tuple(tuple(1 if a == b else 0 for b in range(npos))
                 for a in range(npos))
    l_chain = [()]
    s_chain = [full]
    while True:
        s_cur = s_chain[-1]
        l_next = _pairing_restrict(lam, s_cur, s_cur)
        s_next = _pairing_restrict(lam, s_cur, l_next)
        if l_next == l_chain[-1] and s_next == s_chain[-1]:
            break
        l_chain.append(l_next)
        s_chain.append(s_next)
    return ChainResult(lam, tuple(l_chain), tuple(s_chain))


def xi_stats(lam: Functional) -> XiStats:
    """Statistics of the character attached to the coadjoint orbit of
    lambda: degree exponent dim(n) - dim(l_bar), irreducible iff
    l_bar = s_bar."""
    chains = ls_chain(lam)
    npos = lam.n * (lam.n - 1) // 2
    l_dim = len(chains.l_bar)
    s_dim = len(chains.s_bar)
    return XiStats(npos - l_dim, l_dim == s_dim, l_dim, s_dim)


# ------------------------------------------------------------------- censuses
def _kills_n3(codes, n: int) -> bool:
    return all(v == 0 for v, (i, j) in zip(codes, triangle_positions(n))
               if j - i >= 3)


def _gamma_codes(n: int) -> tuple[int, ...]:
    return tuple(1 if j == i + 1 else 0 for i, j in triangle_positions(n))


def _translate(codes, t: int, direction, field: FieldSpec) -> tuple[int, ...]:
    return tuple(field.add_code(v, field.mul_code(t, g))
                 for v, g in zip(codes, direction))


@dataclass(frozen=True)
class _FunctionalOrbit:
    rep: tuple[int, ...]
    size: int
    irreducible: bool
    kills_n3: bool
    c_invariant: bool


@lru_cache(maxsize=None)
def _full_census(n: int, q: int, bound: int) -> tuple[_FunctionalOrbit, ...]:
    """Two-sided orbits on n*, swept in lexicographic seed order, with
    per-orbit irreducibility (|Glam ∩ lamG| = 1), kernel and
    C-invariance flags."""
    field = field_make(q)
    npos = n * (n - 1) // 2
    total = q ** npos
    if total > bound:
        raise SpaceTooLarge(bound, total, f"functional space u_{n}(F_{q})*")
    left = _sparse_stepper(_sparse_moves(n, field, "left"), field)
    right = _sparse_stepper(_sparse_moves(n, field, "right"), field)
    gamma = _gamma_codes(n)

    def both(codes):
        yield from left(codes)
        yield from right(codes)

    seen = set()
    out = []
    for codes in product(range(q), repeat=npos):
        if codes in seen:
            continue
        two_sided = _bfs(codes, both, bound, "two-sided orbit")
        seen |= two_sided
        left_orbit = _bfs(codes, left, bound, "left orbit")
        right_orbit = _bfs(codes, right, bound, "right orbit")
        meet = left_orbit & right_orbit
        if len(two_sided) * len(meet) != len(left_orbit) * len(right_orbit):
            raise AssertionError("orbit size identity failed; action bug")
        c_inv = all(_translate(codes, t, gamma, field) in two_sided
                    for t in range(1, q))
        out.append(_FunctionalOrbit(codes, len(two_sided), len(meet) == 1,
                                    _kills_n3(codes, n), c_inv))
    return tuple(out)


@lru_cache(maxsize=None)
def _xi_census(n: int, q: int, bound: int) -> tuple[tuple[tuple[int, ...], int, XiStats, bool], ...]:
    """Coadjoint orbits of the functionals killing n^3 (support on the
    first two superdiagonals), each with its xi statistics and the
    C-invariance flag lam + t gamma in the orbit for all t."""
    field = field_make(q)
    npos = n * (n - 1) // 2
    seeds = q ** max(2 * n - 3, 0)
    if seeds > bound:
        raise SpaceTooLarge(bound, seeds, f"kernel-restricted u_{n}(F_{q})*")
    positions = triangle_positions(n)
    near = [a for a, (i, j) in enumerate(positions) if j - i <= 2]
    moves = _sparse_moves(n, field, "coadjoint")
    step = _sparse_stepper(moves, field)
    gamma = _gamma_codes(n)

    seen = set()
    out = []
    for values in product(range(q), repeat=len(near)):
        codes = [0] * npos
        for a, v in zip(near, values):
            codes[a] = v
        codes = tuple(codes)
        if codes in seen:
            continue
        orb = _bfs(codes, step, bound, "coadjoint orbit")
        seen |= orb
        stats = xi_stats(Functional.from_codes(n, field, codes))
        c_inv = all(_translate(codes, t, gamma, field) in orb
                    for t in range(1, q))
        out.append((codes, len(orb), stats, c_inv))
    return tuple(out)


# ------------------------------------------------- alternating subgroup (h*)
def _h_generators(n: int, field: FieldSpec) -> list[UnitriangularElement]:
    """Generators of H = ker(sigma): the superdiagonal differences
    1 + t(e_{i,i+1} - e_{i+1,i+2}) and all higher elementaries."""
    gens = []
    for t in range(1, field.q):
        for i in range(1, n - 1):
            above = StrictUpperMatrix.from_dict(
                n, field, {(i, i + 1): t, (i + 1, i + 2): field.neg_code(t)})
            gens.append(UnitriangularElement.from_above(above))
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                gens.append(UnitriangularElement.elementary(n, field, i, j, t))
    return gens


@lru_cache(maxsize=None)
def _alt_census(n: int, q: int, bound: int) -> tuple[_FunctionalOrbit, ...]:
    """Two-sided H-orbits on h* for H = ker(sigma).

    Functionals agree on h = ker(gamma restricted to the superdiagonal
    sum) exactly when they differ by a multiple of gamma, so h* is
    swept as the classes of n* modulo gamma, canonicalized by zeroing
    the (1,2) coordinate.  The C-invariance flag is left False: C is
    trivial on h."""
    field = field_make(q)
    npos = n * (n - 1) // 2
    classes = q ** max(npos - 1, 0)
    if classes > bound:
        raise SpaceTooLarge(bound, classes, f"h* classes for U_{n}(F_{q})")
    positions = triangle_positions(n)
    idx12 = positions.index((1, 2)) if n >= 2 else None
    gamma = _gamma_codes(n)

    def canon(codes):
        t = codes[idx12]
        if not t:
            return codes
        return tuple(field.sub_code(v, field.mul_code(t, g))
                     for v, g in zip(codes, gamma))

    gens = _h_generators(n, field)
    left_mats = [_action_matrix(g, "left") for g in gens]
    right_mats = [_action_matrix(g, "right") for g in gens]

    def stepper(mats):
        def step(codes):
            for m in mats:
                yield canon(_apply_matrix(m, codes, field))
        return step

    left = stepper(left_mats)
    right = stepper(right_mats)

    def both(codes):
        yield from left(codes)
        yield from right(codes)

    free = [a for a in range(npos) if a != idx12]
    seen = set()
    out = []
    for values in product(range(q), repeat=len(free)):
        codes = [0] * npos
        for a, v in zip(free, values):
            codes[a] = v
        codes = tuple(codes)
        if codes in seen:
            continue
        two_sided = _bfs(codes, both, bound, "two-sided H-orbit")
        seen |= two_sided
        left_orbit = _bfs(codes, left, bound, "left H-orbit")
        right_orbit = _bfs(codes, right, bound, "right H-orbit")
        meet = left_orbit & right_orbit
        out.append(_FunctionalOrbit(codes, len(two_sided), len(meet) == 1,
                                    _kills_n3(codes, n), False))
    return tuple(out)


def count_supercharacter_families(n: int, q: int, group: str = "full",
                                  limit: int | None = None) -> SupercharacterCounts:
    """Count supercharacters, irreducible supercharacters, and
    Heisenberg (irreducible, killing 1 + n^3) supercharacters of
    U_n(F_q) or of its alternating subgroup ker(sigma), by brute-force
    orbit censuses."""
    if group not in GROUPS:
        raise UnknownFamily(f"unknown group {group!r}")
    bound = space_limit(limit)
    census = _full_census(n, q, bound) if group == "full" else _alt_census(n, q, bound)
    irr = [o for o in census if o.irreducible]
    return SupercharacterCounts(
        supercharacters=len(census),
        irreducible_supercharacters=len(irr),
        heisenberg_supercharacters=sum(1 for o in irr if o.kills_n3))


def count_heisenberg_characters(n: int, q: int, method: str = "xi_census",
                                group: str = "full",
                                limit: int | None = None) -> HeisenbergCount:
    """Count Heisenberg characters (irreducible characters whose kernel
    contains 1 + n^3) by one of two independent routes.

    quotient_classes counts conjugacy classes of the group modulo
    1 + n^3 (for the alternating subgroup: of its image in the
    quotient).  xi_census, available for the full group, enumerates the
    coadjoint orbits of functionals killing n^3, keeps those whose xi
    is irreducible, and also reports the degree-exponent histogram.
    """
    if method not in HEISENBERG_METHODS:
        raise UnknownFamily(f"unknown method {method!r}")
    if group not in GROUPS:
        raise UnknownFamily(f"unknown group {group!r}")
    if method == "quotient_classes":
        name = "truncated" if group == "full" else "truncated_alternating"
        census = conjugacy_classes(name, n, q, limit)
        return HeisenbergCount(len(census.orbits))
    if group != "full":
        raise UnknownFamily("xi_census covers the full group only; use "
                            "quotient_classes for the alternating subgroup")
    bound = space_limit(limit)
    kept = [(codes, stats) for codes, _, stats, _ in _xi_census(n, q, bound)
            if stats.irreducible]
    histogram: dict[int, int] = {}
    for _, stats in kept:
        histogram[stats.degree_exponent] = histogram.get(stats.degree_exponent, 0) + 1
    return HeisenbergCount(len(kept), dict(sorted(histogram.items())))


def count_c_invariant(n: int, q: int, kind: str, limit: int | None = None) -> int:
    """Count characters of U_n(F_q) of the given kind fixed under
    multiplication by the linear characters theta_{t gamma}.

    Supercharacter kinds apply the two-sided test (lam + t gamma stays
    in the two-sided orbit for every t); heisenberg_characters applies
    the coadjoint test on the orbits of the xi census.
    """
    if kind not in C_INVARIANT_KINDS:
        raise UnknownFamily(f"unknown kind {kind!r}")
    bound = space_limit(limit)
    if kind == "heisenberg_characters":
        return sum(1 for _, _, stats, c_inv in _xi_census(n, q, bound)
                   if stats.irreducible and c_inv)
    census = _full_census(n, q, bound)
    if kind == "supercharacters":
        return sum(1 for o in census if o.c_invariant)
    if kind == "irreducible_supercharacters":
        return sum(1 for o in census if o.irreducible and o.c_invariant)
    return sum(1 for o in census
               if o.irreducible and o.kills_n3 and o.c_invariant)


def tech_lem1_bruteforce(d: int, q: int, limit: int | None = None) -> int:
    """Count label tuples t in (F_q^x)^{2d} such that the second-
    superdiagonal functional sum t_i e*_{i,i+2} on u_{2d+2}, translated
    by the full superdiagonal sum gamma, stays in its own coadjoint
    orbit."""
    n = 2 * d + 2
    field = field_make(q)
    bound = space_limit(limit)
    moves = _sparse_moves(n, field, "coadjoint")
    step = _sparse_stepper(moves, field)
    gamma = _gamma_codes(n)
    positions = triangle_positions(n)
    idx = {ij: a for a, ij in enumerate(positions)}
    count = 0
    for ts in product(range(1, q), repeat=2 * d):
        codes = [0] * len(positions)
        for i, t in enumerate(ts, start=1):
            codes[idx[i, i + 2]] = t
        codes = tuple(codes)
        orb = _bfs(codes, step, bound, "coadjoint orbit")
        if _translate(codes, 1, gamma, field) in orb:
            count += 1
    return count


# ----------------------------------------------------------- conjugacy classes
CONJUGACY_GROUPS = ("unitriangular", "truncated", "truncated_alternating")


def _truncated_generators(n: int, field: FieldSpec, alternating: bool):
    gens = []
    zero1 = (0,) * max(n - 1, 0)
    zero2 = (0,) * max(n - 2, 0)
    for t in range(1, field.q):
        if not alternating:
            for i in range(n - 1):
                d1 = list(zero1)
                d1[i] = t
                gens.append(TruncatedElement(n, field, tuple(d1), zero2))
        else:
            for i in range(n - 2):
                d1 = list(zero1)
                d1[i] = t
                d1[i + 1] = field.neg_code(t)
                gens.append(TruncatedElement(n, field, tuple(d1), zero2))
        for i in range(n - 2):
            d2 = list(zero2)
            d2[i] = t
            gens.append(TruncatedElement(n, field, zero1, tuple(d2)))
    return gens


def conjugacy_classes(group: str, n: int, q: int,
                      limit: int | None = None) -> OrbitCensus:
    """Conjugacy classes of U_n(F_q), of its quotient by 1 + n^3
    ("truncated"), or of the sigma-kernel inside that quotient
    ("truncated_alternating"), by conjugation closure under the group's
    generators.  Class representatives are lexicographically least."""
    if group not in CONJUGACY_GROUPS:
        raise UnknownFamily(f"unknown group {group!r}")
    field = field_make(q)
    bound = space_limit(limit)

    if group == "unitriangular":
        npos = n * (n - 1) // 2
        total = q ** npos
        if total > bound:
            raise SpaceTooLarge(bound, total, f"U_{n}(F_{q})")
        gens = [UnitriangularElement.elementary(n, field, i, i + 1, t)
                for i in range(1, n) for t in range(1, q)]
        pairs = [(g, group_inv(g)) for g in gens]

        def conjugates(codes):
            x = UnitriangularElement.from_above(StrictUpperMatrix(n, field, codes))
            for g, ginv in pairs:
                yield group_mul(group_mul(g, x), ginv).above.codes

        def wrap(codes):
            return UnitriangularElement.from_above(StrictUpperMatrix(n, field, codes))

        elements = product(range(q), repeat=npos)
    else:
        alternating = group == "truncated_alternating"
        n1, n2 = max(n - 1, 0), max(n - 2, 0)
        total = q ** (n1 + n2 - (1 if alternating and n1 else 0))
        if total > bound:
            raise SpaceTooLarge(bound, total, f"{group} group at (n,q)=({n},{q})")
        gens = _truncated_generators(n, field, alternating)
        pairs = [(g, g.inverse()) for g in gens]

        def conjugates(codes):
            x = TruncatedElement(n, field, codes[:n1], codes[n1:])
            for g, ginv in pairs:
                y = g.mul(x).mul(ginv)
                yield y.d1 + y.d2

        def element_iter():
            for d1 in product(range(q), repeat=n1):
                if alternating:
                    acc = 0
                    for a in d1:
                        acc = field.add_code(acc, a)
                    if acc:
                        continue
                for d2 in product(range(q), repeat=n2):
                    yield d1 + d2

        def wrap(codes):
            return TruncatedElement(n, field, codes[:n1], codes[n1:])

        elements = element_iter()

    seen = set()
    orbits = []
    count = 0
    for codes in elements:
        codes = tuple(codes)
        count += 1
        if codes in seen:
            continue
        cls = _bfs(codes, conjugates, bound, f"conjugacy class in {group}")
        seen |= cls
        orbits.append((wrap(codes), len(cls)))
    return OrbitCensus("conjugacy", tuple(orbits), count)
