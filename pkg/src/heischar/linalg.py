"""Strictly upper triangular matrices over F_q, the unitriangular group,
and functionals on its Lie algebra.

Conventions, fixed throughout the package:

* indices are 1-based; the strict upper triangle of an n x n matrix is
  stored row-major as positions (1,2), (1,3), ..., (1,n), (2,3), ...;
* a functional lambda is stored via its matrix X, with
  lambda(Y) = sum_{i<j} X_ij * Y_ij;
* group actions on functionals: (g.lam)(X) = lam(g^{-1} X) on the left,
  (lam.g)(X) = lam(X g^{-1}) on the right, and the coadjoint action is
  X |-> lam(g^{-1} X g), i.e. right action by g^{-1} after left by g.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch
from .gf import FieldSpec


@lru_cache(maxsize=None)
def triangle_positions(n: int) -> tuple[tuple[int, int], ...]:
    """Row-major list of strict upper-triangle positions (i, j), 1-based."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def _position_index(n: int) -> dict[tuple[int, int], int]:
    return {ij: a for a, ij in enumerate(triangle_positions(n))}


def ideal_positions(n: int, k: int) -> set[tuple[int, int]]:
    """Positions of the ideal n^k: pairs (i, j) with j >= i + k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return {(i, j) for i, j in triangle_positions(n) if j >= i + k}


def _check_same(a, b):
    if a.n != b.n or a.field.q != b.field.q:
        raise DimensionMismatch(
            f"size {a.n} over F_{a.field.q} vs size {b.n} over F_{b.field.q}")


@dataclass(frozen=True)
class StrictUpperMatrix:
    """An element of u_n: a strictly upper triangular n x n matrix.

    ``codes`` holds the field codes of the entries above the diagonal in
    row-major order (length n(n-1)/2).
    """

    n: int
    field: FieldSpec
    codes: tuple[int, ...]

    def __post_init__(self):
        if len(self.codes) != self.n * (self.n - 1) // 2:
            raise DimensionMismatch(
                f"expected {self.n * (self.n - 1) // 2} entries, got {len(self.codes)}")

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "StrictUpperMatrix":
        return cls(n, field, (0,) * (n * (n - 1) // 2))

    @classmethod
    def from_dict(cls, n: int, field: FieldSpec,
                  entries: dict[tuple[int, int], int]) -> "StrictUpperMatrix":
        idx = _position_index(n)
        codes = [0] * (n * (n - 1) // 2)
        for ij, c in entries.items():
            codes[idx[ij]] = c % field.q if isinstance(c, int) else c.code
        return cls(n, field, tuple(codes))

    @classmethod
    def basis_element(cls, n: int, field: FieldSpec, i: int, j: int,
                      code: int = 1) -> "StrictUpperMatrix":
        """c * e_{ij} for a single position i < j."""
        return cls.from_dict(n, field, {(i, j): code})

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if j <= i:
            return 0
        return self.codes[_position_index(self.n)[ij]]

    def add(self, other: "StrictUpperMatrix") -> "StrictUpperMatrix":
        _check_same(self, other)
        f = self.field
        return StrictUpperMatrix(
            self.n, f, tuple(f.add_code(a, b) for a, b in zip(self.codes, other.codes)))

    def neg(self) -> "StrictUpperMatrix":
        f = self.field
        return StrictUpperMatrix(self.n, f, tuple(f.neg_code(a) for a in self.codes))

    def scale(self, c: int) -> "StrictUpperMatrix":
        f = self.field
        return StrictUpperMatrix(self.n, f, tuple(f.mul_code(c, a) for a in self.codes))

    def matmul(self, other: "StrictUpperMatrix") -> "StrictUpperMatrix":
        """Matrix product; the result is again strictly upper triangular."""
        _check_same(self, other)
        f = self.field
        out = {}
        for (i, j) in triangle_positions(self.n):
            acc = 0
            for k in range(i + 1, j):
                acc = f.add_code(acc, f.mul_code(self[i, k], other[k, j]))
            if acc:
                out[(i, j)] = acc
        return StrictUpperMatrix.from_dict(self.n, self.field, out)

    def is_zero(self) -> bool:
        return not any(self.codes)

    def support(self) -> set[tuple[int, int]]:
        return {ij for ij, c in zip(triangle_positions(self.n), self.codes) if c}


@dataclass(frozen=True)
class UnitriangularElement:
    """An element g = 1 + A of the group U_n(F_q), stored via A in u_n."""

    n: int
    field: FieldSpec
    above: StrictUpperMatrix

    @classmethod
    def one(cls, n: int, field: FieldSpec) -> "UnitriangularElement":
        return cls(n, field, StrictUpperMatrix.zero(n, field))

    @classmethod
    def from_above(cls, above: StrictUpperMatrix) -> "UnitriangularElement":
        return cls(above.n, above.field, above)

    @classmethod
    def elementary(cls, n: int, field: FieldSpec, i: int, j: int,
                   t: int = 1) -> "UnitriangularElement":
        """The elementary element 1 + t*e_{ij}."""
        return cls(n, field, StrictUpperMatrix.basis_element(n, field, i, j, t))

    def entry(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return self.above[i, j]

    def mul_matrix_left(self, x: StrictUpperMatrix) -> StrictUpperMatrix:
        """The product g * x (a strictly upper matrix)."""
        return x.add(self.above.matmul(x))

    def mul_matrix_right(self, x: StrictUpperMatrix) -> StrictUpperMatrix:
        """The product x * g (a strictly upper matrix)."""
        return x.add(x.matmul(self.above))


def group_mul(g: UnitriangularElement, h: UnitriangularElement) -> UnitriangularElement:
    """Product in U_n: (1+A)(1+B) = 1 + A + B + AB."""
    _check_same(g, h)
    a, b = g.above, h.above
    return UnitriangularElement(g.n, g.field, a.add(b).add(a.matmul(b)))


def group_inv(g: UnitriangularElement) -> UnitriangularElement:
    """Inverse in U_n via the Neumann series (1+A)^{-1} = sum (-A)^m."""
    a = g.above
    neg_a = a.neg()
    acc = neg_a
    term = neg_a
    for _ in range(g.n - 2):
        term = term.matmul(neg_a)
        acc = acc.add(term)
    return UnitriangularElement(g.n, g.field, acc)


def sigma(g: UnitriangularElement) -> int:
    """Sum of the superdiagonal entries of g (a field code).

    The kernel of sigma on U_n is the subgroup 1 + h with
    h = {X : sum_i X_{i,i+1} = 0}.
    """
    f = g.field
    acc = 0
    for i in range(1, g.n):
        acc = f.add_code(acc, g.entry(i, i + 1))
    return acc


@dataclass(frozen=True)
class Functional:
    """A linear functional on u_n, stored via its matrix."""

    n: int
    field: FieldSpec
    matrix: StrictUpperMatrix

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "Functional":
        return cls(n, field, StrictUpperMatrix.zero(n, field))

    @classmethod
    def from_dict(cls, n: int, field: FieldSpec,
                  entries: dict[tuple[int, int], int]) -> "Functional":
        return cls(n, field, StrictUpperMatrix.from_dict(n, field, entries))

    @classmethod
    def from_codes(cls, n: int, field: FieldSpec, codes: tuple[int, ...]) -> "Functional":
        return cls(n, field, StrictUpperMatrix(n, field, codes))

    @property
    def codes(self) -> tuple[int, ...]:
        return self.matrix.codes

    def evaluate(self, x: StrictUpperMatrix) -> int:
        """lambda(x) as a field code."""
        if x.n != self.n or x.field.q != self.field.q:
            raise DimensionMismatch("functional and matrix sizes differ")
        f = self.field
        acc = 0
        for a, b in zip(self.codes, x.codes):
            if a and b:
                acc = f.add_code(acc, f.mul_code(a, b))
        return acc

    def kills(self, positions: set[tuple[int, int]]) -> bool:
        """True iff the matrix of lambda vanishes on the given positions.

        For an ideal n^k this decides lambda(n^k) = 0, since the e_{ij}
        with (i, j) in ideal_positions(n, k) form a basis of n^k.
        """
        mat = self.matrix
        return all(mat[ij] == 0 for ij in positions)


def e_star(n: int, field: FieldSpec, i: int, j: int, code: int = 1) -> Functional:
    """The dual basis functional c * e*_{ij}."""
    return Functional.from_dict(n, field, {(i, j): code})


def gamma(n: int, field: FieldSpec) -> Functional:
    """The superdiagonal-sum functional e*_{1,2} + ... + e*_{n-1,n}.

    gamma vanishes on n^2, so it is invariant under the one-sided actions;
    translation by multiples of gamma commutes with everything below.
    """
    return Functional.from_dict(n, field, {(i, i + 1): 1 for i in range(1, n)})


_MODES = ("left", "right", "coadjoint")


def act(mode: str, g: UnitriangularElement, lam: Functional) -> Functional:
    """Apply a group action to a functional.

    mode "left":      (g.lam)(X) = lam(g^{-1} X)
    mode "right":     (lam.g)(X) = lam(X g^{-1})
    mode "coadjoint": lam(g^{-1} X g), the composite of the two.

    Computed by evaluating lam on the transformed basis elements e_{ij};
    one code path serves all modes.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    if g.n != lam.n or g.field.q != lam.field.q:
        raise DimensionMismatch("group element and functional sizes differ")
    n, field = lam.n, lam.field
    ginv = group_inv(g)
    out = {}
    for (i, j) in triangle_positions(n):
        e = StrictUpperMatrix.basis_element(n, field, i, j)
        if mode == "left":
            t = ginv.mul_matrix_left(e)
        elif mode == "right":
            t = ginv.mul_matrix_right(e)
        else:
            t = g.mul_matrix_right(ginv.mul_matrix_left(e))
        c = lam.evaluate(t)
        if c:
            out[(i, j)] = c
    return Functional.from_dict(n, field, out)


def upper_form(lam: Functional) -> tuple[tuple[int, ...], ...]:
    """The (n-1) x (n-1) upper form of the matrix of lambda.

    Deleting the first column and last row of the matrix X of lambda leaves
    a square array U with U[a][b] = X[a][b+1] (1-based: rows 1..n-1 and
    columns 2..n of X).  Returned as a tuple of row tuples of codes.
    """
    n = lam.n
    mat = lam.matrix
    return tuple(tuple(mat[a, b + 1] for b in range(1, n)) for a in range(1, n))


def block_decomposition(lam: Functional) -> list[tuple[tuple[int, ...], ...]]:
    """Maximal block-diagonal decomposition of the upper form of lambda.

    A cut after row/column c (1 <= c <= n-2 in the upper form) is valid when
    U[i][j] = 0 whenever exactly one of i, j is <= c.  The decomposition
    cuts at every valid c, so the returned square diagonal blocks
    B_1, ..., B_l are as small as possible and their sizes sum to n-1.
    """
    u = upper_form(lam)
    m = lam.n - 1
    if m <= 0:
        return []
    cuts = [0]
    for c in range(1, m):
        if all(u[i][j] == 0
               for i in range(m) for j in range(m)
               if (i < c) != (j < c)):
            cuts.append(c)
    cuts.append(m)
    blocks = []
    for a, b in zip(cuts, cuts[1:]):
        blocks.append(tuple(tuple(u[i][j] for j in range(a, b)) for i in range(a, b)))
    return blocks


# ------------------------------------------------- linear algebra over F_q
def row_reduce(rows, field: FieldSpec) -> list[list[int]]:
    """Reduced row echelon form of a list of code rows (zero rows dropped)."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    pivot_col = 0
    while rows and pivot_col < ncols:
        pivot = next((r for r in rows if r[pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows.remove(pivot)
        c = field.inv_code(pivot[pivot_col])
        pivot = [field.mul_code(c, v) for v in pivot]
        for other in [*out, *rows]:
            f = other[pivot_col]
            if f:
                for i in range(ncols):
                    other[i] = field.sub_code(other[i], field.mul_code(f, pivot[i]))
        rows = [r for r in rows if any(r)]
        out.append(pivot)
        pivot_col += 1
    # sort by pivot position for a canonical form
    out.sort(key=lambda r: next(i for i, v in enumerate(r) if v))
    return out


def null_space(rows, field: FieldSpec, ncols: int) -> list[list[int]]:
    """Canonical basis of {x : M x = 0} for the matrix with the given rows."""
    red = row_reduce(rows, field)
    pivots = [next(i for i, v in enumerate(r) if v) for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [0] * ncols
        vec[fcol] = 1
        for r, p in zip(red, pivots):
            vec[p] = field.neg_code(r[fcol])
        basis.append(vec)
    return basis


def solve_consistent(rows, rhs, field: FieldSpec) -> bool:
    """Whether M x = rhs has any solution over the field."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red = row_reduce(aug, field)
    ncols = len(rows[0]) if rows else 0
    return all(any(r[:ncols]) for r in red)


def functional_to_text(lam: Functional) -> str:
    """Canonical text form: "n q c1 c2 ... cN" (row-major codes)."""
    return " ".join([str(lam.n), str(lam.field.q)] + [str(c) for c in lam.codes])


def functional_from_text(text: str) -> Functional:
    from .gf import field_make
    parts = text.replace(",", " ").split()
    if len(parts) < 2:
        raise ValueError(f"cannot parse functional from {text!r}")
    n, q = int(parts[0]), int(parts[1])
    codes = tuple(int(c) for c in parts[2:])
    field = field_make(q)
    if any(not 0 <= c < q for c in codes):
        raise ValueError("entry code out of range")
    return Functional.from_codes(n, field, codes)
