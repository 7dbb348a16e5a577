"""Bijections between block functionals, lattice paths and set partitions.

A functional on u_n is *class X* when every diagonal block of the upper
form of its matrix is one of

* (a) a 1 x 1 block (any value),
* (b) an m x m block, m > 1, with nonzero entries exactly on its
  superdiagonal,
* (c) an m x m block, m > 1 odd, with nonzero entries exactly on its
  superdiagonal and in its (1, 1) corner.

*Class Y* allows types (a) and (b) only.  Class-X functionals index the
characters of U_n(F_q) whose kernel contains 1 + n^3, and they are carried
bijectively onto the labeled lattice paths with steps R, N, U, UU from the
origin to the line x + y = n - 1 whose first step is not UU:

* a type (a) block becomes R when zero and U(t) for value t otherwise,
* a type (b) block with superdiagonal t_1, ..., t_{m-1} becomes
  (R, UU(t_1,t_2), UU(t_3,t_4), ...) for odd m and
  (N(t_1), UU(t_2,t_3), ...) for even m,
* a type (c) block with corner u becomes (U(u), UU(t_1,t_2), ...).

The character attached to a path P has degree q^e where e counts the N
and UU steps of P.  Paths without UU steps (Pell paths) correspond to
set partitions with arcs of the form (i, i+1) or (i, i+2) only, and
these index the irreducible supercharacters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .combinat import LabeledLatticePath, LabeledSetPartition, enumerate_paths
from .errors import NotClassX, NotInFamily
from .gf import FieldSpec, field_make
from .linalg import Functional, block_decomposition, solve_consistent

STEP_R = (1, 0)
STEP_N = (1, 1)
STEP_U = (0, 1)
STEP_UU = (0, 2)

CLASS_X = "class_X"
CLASS_Y = "class_Y"
NEITHER = "neither"


@dataclass(frozen=True)
class ClassXWitness:
    """The block decomposition of a functional with each block's type.

    ``blocks`` are the diagonal blocks of the upper form (tuples of row
    tuples of codes), ``kinds`` holds "a", "b", "c" per block or None
    when the block fits no type, ``offending_block`` is the index of the
    first untyped block.  ``classification`` is "class_Y" when all
    blocks are of types (a)/(b), "class_X" when a type (c) block also
    occurs, and "neither" otherwise.
    """

    classification: str
    blocks: tuple[tuple[tuple[int, ...], ...], ...]
    kinds: tuple[str | None, ...]
    offending_block: int | None


def _block_kind(block) -> str | None:
    m = len(block)
    if m == 1:
        return "a"
    support = {(r, s) for r in range(m) for s in range(m) if block[r][s]}
    superdiag = {(i, i + 1) for i in range(m - 1)}
    if support == superdiag:
        return "b"
    if m % 2 == 1 and support == superdiag | {(0, 0)}:
        return "c"
    return None


def classify_functional(lam: Functional) -> ClassXWitness:
    """Type every block of the upper form of lambda and classify it."""
    blocks = tuple(block_decomposition(lam))
    kinds = tuple(_block_kind(b) for b in blocks)
    offending = next((i for i, k in enumerate(kinds) if k is None), None)
    if offending is not None:
        classification = NEITHER
    elif "c" in kinds:
        classification = CLASS_X
    else:
        classification = CLASS_Y
    return ClassXWitness(classification, blocks, kinds, offending)


def _check_steps(path: LabeledLatticePath, allowed, family: str) -> None:
    for k, (step, _) in enumerate(path.steps):
        if step not in allowed:
            raise NotInFamily(f"step {k} is not a {family} step")
    if path.steps and path.steps[0][0] == STEP_UU:
        raise NotInFamily(f"a {family} path cannot start with UU")


def path_to_functional(path: LabeledLatticePath,
                       field: FieldSpec | None = None) -> Functional:
    """The functional of a path with steps R, N, U, UU not starting in UU.

    The step starting at coordinate sum d, with i = d + 1, contributes
    nothing for R, t e*_{i,i+1} for U(t), t e*_{i,i+2} for N(t) and
    t e*_{i-1,i+1} + u e*_{i,i+2} for UU(t,u).  The result lives on u_n
    for n = span + 1.
    """
    _check_steps(path, (STEP_R, STEP_N, STEP_U, STEP_UU), "heis")
    field = field or field_make(path.q)
    n = path.span + 1
    entries: dict[tuple[int, int], int] = {}
    d = 0
    for step, labels in path.steps:
        i = d + 1
        if step == STEP_U:
            entries[i, i + 1] = labels[0]
        elif step == STEP_N:
            entries[i, i + 2] = labels[0]
        elif step == STEP_UU:
            entries[i - 1, i + 1] = labels[0]
            entries[i, i + 2] = labels[1]
        d += step[0] + step[1]
    return Functional.from_dict(n, field, entries)


def functional_to_path(lam: Functional) -> LabeledLatticePath:
    """The inverse of path_to_functional on class-X functionals.

    Raises NotClassX (carrying the block index) when some block of the
    upper form of lambda has no valid type.
    """
    witness = classify_functional(lam)
    if witness.offending_block is not None:
        raise NotClassX(witness.offending_block)
    steps = []
    for block, kind in zip(witness.blocks, witness.kinds):
        m = len(block)
        ts = [block[i][i + 1] for i in range(m - 1)]
        if kind == "a":
            value = block[0][0]
            steps.append((STEP_U, (value,)) if value else (STEP_R, ()))
            continue
        if kind == "b" and m % 2 == 1:
            steps.append((STEP_R, ()))
        elif kind == "b":
            steps.append((STEP_N, (ts[0],)))
            ts = ts[1:]
        else:
            steps.append((STEP_U, (block[0][0],)))
        for a in range(0, len(ts), 2):
            steps.append((STEP_UU, (ts[a], ts[a + 1])))
    return LabeledLatticePath(lam.field.q, tuple(steps))


def pell_path_to_partition(path: LabeledLatticePath) -> LabeledSetPartition:
    """The set partition of a path with steps R, N, U only.

    The step starting at coordinate sum s contributes no arc for R, the
    arc (s+1, s+2) for U and the arc (s+1, s+3) for N, labels carried
    along.  This is a bijection onto the noncrossing partitions of
    [span + 1] whose arcs all have the form (i, i+1) or (i, i+2); the
    crossing shapes (i, i+2), (i+1, i+3) cannot occur because an N step
    advances the coordinate sum by two.
    """
    _check_steps(path, (STEP_R, STEP_N, STEP_U), "pell")
    arcs = []
    s = 0
    for step, labels in path.steps:
        if step == STEP_U:
            arcs.append((s + 1, s + 2, labels[0]))
        elif step == STEP_N:
            arcs.append((s + 1, s + 3, labels[0]))
        s += step[0] + step[1]
    return LabeledSetPartition(path.span + 1, path.q, tuple(sorted(arcs)))


def heis_degree_exponent(path: LabeledLatticePath) -> int:
    """log_q of the degree of the character attached to the path: the
    number of N steps plus the number of UU steps."""
    _check_steps(path, (STEP_R, STEP_N, STEP_U, STEP_UU), "heis")
    return sum(1 for step, _ in path.steps if step in (STEP_N, STEP_UU))


def heis_degree_histogram(n: int, q: int, limit: int | None = None) -> dict[int, int]:
    """How many paths to x + y = n - 1 (no leading UU) have each degree
    exponent; the count at e equals the number of degree-q^e characters
    of U_n(F_q) with kernel containing 1 + n^3."""
    hist = Counter(heis_degree_exponent(p)
                   for p in enumerate_paths("heis_tilde", n, q, limit))
    return dict(sorted(hist.items()))


def _odd_block_translation_solvable(ts, field: FieldSpec) -> bool:
    """Whether an odd block with superdiagonal labels ts absorbs the
    all-ones superdiagonal translation.

    The coadjoint orbit of t_1 e*_{1,3} + ... + t_{m-1} e*_{m-1,m+1} on
    u_{m+1} meets the translate by e*_{1,2} + ... + e*_{m,m+1} exactly
    when M g = (1, ..., 1) is solvable, where M is the m x m tridiagonal
    matrix with subdiagonal t_1, ..., t_{m-1} and superdiagonal
    -t_1, ..., -t_{m-1}.
    """
    m = len(ts) + 1
    rows = []
    for r in range(m):
        row = [0] * m
        if r >= 1:
            row[r - 1] = ts[r - 1]
        if r <= m - 2:
            row[r + 1] = field.neg_code(ts[r])
        rows.append(row)
    return solve_consistent(rows, [1] * m, field)


def is_c_invariant_heis_path(path: LabeledLatticePath) -> bool:
    """Whether the character attached to the path is fixed under
    multiplication by the q linear characters that factor through the
    superdiagonal entry sum.

    Block by block: a 1 x 1 block never absorbs the superdiagonal
    translation, an even block always does, and an odd block does
    exactly when its tridiagonal system is solvable.
    """
    lam = path_to_functional(path)
    witness = classify_functional(lam)
    for block in witness.blocks:
        m = len(block)
        if m == 1:
            return False
        if m % 2 == 0:
            continue
        ts = [block[i][i + 1] for i in range(m - 1)]
        if not _odd_block_translation_solvable(ts, lam.field):
            return False
    return True


def is_linear_invariant_heis_path(path: LabeledLatticePath) -> bool:
    """Whether the character attached to the path is fixed under
    multiplication by every one of the q^{n-1} linear characters of the
    group, a strictly stronger condition than is_c_invariant_heis_path.

    This holds exactly when the path uses only N and UU steps.  Both
    step kinds advance the coordinate sum by two, so such paths exist
    only for odd n = 2k + 1, where they number q^{k-1} (q-1)^k.
    """
    _check_steps(path, (STEP_R, STEP_N, STEP_U, STEP_UU), "heis")
    return all(step in (STEP_N, STEP_UU) for step, _ in path.steps)


def is_c_invariant_partition(part: LabeledSetPartition) -> bool:
    """Whether the supercharacter of the partition is fixed under
    multiplication by the q linear characters that factor through the
    superdiagonal entry sum: for every j in [n-1] some arc (i, j+1) with
    i < j or some arc (j, k+1) with j < k must be present."""
    pairs = part.arc_pairs()
    for j in range(1, part.n):
        if any(tgt == j + 1 and src < j for src, tgt in pairs):
            continue
        if any(src == j and tgt > j + 1 for src, tgt in pairs):
            continue
        return False
    return True
