"""F_q-labeled set partitions and F_q-labeled lattice paths.

A labeled set partition of [n] is determined by its arcs: the covering
pairs (i, j), i < j adjacent in a block, each carrying a nonzero label.
Arc sets are exactly the pair sets with pairwise distinct sources and
pairwise distinct targets, so partitions are stored as sorted arc tuples.

A labeled lattice path starts at the origin and takes steps from a fixed
step alphabet; a step of height dy carries dy nonzero labels.  The five
families used here:

* pell:       steps (1,0), (1,1), (0,1), ending on x + y = n - 1
* heis:       pell steps plus (0,2)
* heis_tilde: heis paths not starting with (0,2)
* inv:        steps (2,1), (1,2), (0,1), ending on x + y = n - 1
* inv_tilde:  nonempty paths with inv steps starting with (0,1) ending on
              x + y = n - 1 or x + y = n - 2

Enumerators yield lazily in a deterministic lexicographic order and check
the expected stream size against a guard before starting.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from itertools import product

from . import counting
from .errors import NotAPartition, SpaceTooLarge, UnknownFamily
from .gf import FieldSpec, field_make
from .linalg import Functional

DEFAULT_SPACE_LIMIT = 1 << 24

# canonical step order; labels per step = its height
STEP_ORDER = ((1, 0), (1, 1), (0, 1), (0, 2), (2, 1), (1, 2))
STEP_NAMES = {(1, 0): "R", (1, 1): "N", (0, 1): "U", (0, 2): "UU",
              (2, 1): "D21", (1, 2): "D12"}
_NAME_STEPS = {v: k for k, v in STEP_NAMES.items()}

PATH_FAMILIES = {
    "pell": ((1, 0), (1, 1), (0, 1)),
    "heis": ((1, 0), (1, 1), (0, 1), (0, 2)),
    "heis_tilde": ((1, 0), (1, 1), (0, 1), (0, 2)),
    "inv": ((2, 1), (1, 2), (0, 1)),
    "inv_tilde": ((2, 1), (1, 2), (0, 1)),
}

PARTITION_FILTERS = ("all", "noncrossing", "feasible", "heis_support")


def space_limit(limit: int | None = None) -> int:
    """The active size guard: explicit argument, else HEISCHAR_SPACE_LIMIT,
    else the default of 2^24 items."""
    if limit is not None:
        return limit
    env = os.environ.get("HEISCHAR_SPACE_LIMIT")
    if env:
        return int(env)
    return DEFAULT_SPACE_LIMIT


def _check_labels(q: int, labels) -> None:
    for t in labels:
        if not 1 <= t < q:
            raise ValueError(f"label {t} is not a nonzero code of F_{q}")


@dataclass(frozen=True)
class LabeledSetPartition:
    """A set partition of [n] with F_q-labeled arcs.

    ``arcs`` is a sorted tuple of (i, j, label) with i < j, sources
    pairwise distinct, targets pairwise distinct, labels in 1 .. q-1.
    """

    n: int
    q: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen_src, seen_tgt = set(), set()
        for i, j, t in self.arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"arc ({i},{j}) out of range for n={self.n}")
            if i in seen_src or j in seen_tgt:
                raise ValueError(f"({i},{j}): repeated arc source or target")
            seen_src.add(i)
            seen_tgt.add(j)
            _check_labels(self.q, (t,))
        if self.arcs != tuple(sorted(self.arcs)):
            raise ValueError("arcs must be sorted")

    def arc_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, _ in self.arcs]

    def blocks(self) -> list[list[int]]:
        """The blocks of the underlying set partition, sorted by minimum."""
        nxt = {i: j for i, j, _ in self.arcs}
        starts = set(range(1, self.n + 1)) - {j for _, j, _ in self.arcs}
        out = []
        for s in sorted(starts):
            block = [s]
            while block[-1] in nxt:
                block.append(nxt[block[-1]])
            out.append(block)
        return out

    def __str__(self):
        return partition_to_text(self)


def arcs_of(blocks) -> list[tuple[int, int]]:
    """The arc set of a set partition given as an iterable of blocks.

    Arcs are the covering pairs (i, j): i < j in the same block with no
    block element strictly between them.  Raises NotAPartition when the
    blocks do not partition {1, ..., n} for n = max element.
    """
    blocks = [sorted(b) for b in blocks]
    seen = set()
    for b in blocks:
        if not b:
            raise NotAPartition("empty block")
        for v in b:
            if not isinstance(v, int) or v < 1:
                raise NotAPartition(f"invalid element {v!r}")
            if v in seen:
                raise NotAPartition(f"element {v} appears twice")
            seen.add(v)
    if seen and seen != set(range(1, max(seen) + 1)):
        raise NotAPartition("blocks do not cover {1, ..., n}")
    arcs = []
    for b in blocks:
        arcs.extend(zip(b, b[1:]))
    return sorted(arcs)


def from_blocks(n: int, q: int, blocks, labels=None) -> LabeledSetPartition:
    """Build a labeled partition from blocks; labels (default all 1) are
    assigned to the sorted arc list in order."""
    pairs = arcs_of(blocks)
    if max((0, *(j for _, j in pairs)), default=0) > n:
        raise NotAPartition(f"block element exceeds n={n}")
    if labels is None:
        labels = [1] * len(pairs)
    if len(labels) != len(pairs):
        raise ValueError("one label per arc required")
    return LabeledSetPartition(n, q, tuple((i, j, t) for (i, j), t in zip(pairs, labels)))


def is_noncrossing(part: LabeledSetPartition) -> bool:
    """True iff no two arcs (i, k), (j, l) satisfy i < j < k < l."""
    pairs = part.arc_pairs()
    for a in range(len(pairs)):
        i, k = pairs[a]
        for b in range(len(pairs)):
            j, l = pairs[b]
            if i < j < k < l:
                return False
    return True


def is_feasible(part: LabeledSetPartition) -> bool:
    """True iff the partition has no singleton blocks."""
    covered = {i for i, _, _ in part.arcs} | {j for _, j, _ in part.arcs}
    return covered == set(range(1, part.n + 1))


def has_heis_support(part: LabeledSetPartition) -> bool:
    """True iff every arc has the form (i, i+1) or (i, i+2)."""
    return all(j - i <= 2 for i, j, _ in part.arcs)


def shift(part: LabeledSetPartition) -> LabeledSetPartition:
    """The arc shift (i, j) -> (i, j+1), labels carried along.

    Maps partitions of [n] to partitions of [n+1]; injective, and its
    image consists of partitions whose arcs all satisfy j > i + 1.
    """
    arcs = tuple(sorted((i, j + 1, t) for i, j, t in part.arcs))
    return LabeledSetPartition(part.n + 1, part.q, arcs)


def partition_to_functional(part: LabeledSetPartition,
                            field: FieldSpec | None = None) -> Functional:
    """The functional sum of t * e*_{ij} over the arcs (i, j, t)."""
    field = field or field_make(part.q)
    return Functional.from_dict(part.n, field,
                                {(i, j): t for i, j, t in part.arcs})


@dataclass(frozen=True)
class LabeledLatticePath:
    """A lattice path with labeled steps.

    ``steps`` is a tuple of ((dx, dy), labels) where labels is a tuple of
    dy nonzero codes of F_q.
    """

    q: int
    steps: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    def __post_init__(self):
        for step, labels in self.steps:
            if step not in STEP_NAMES:
                raise ValueError(f"unknown step {step}")
            if len(labels) != step[1]:
                raise ValueError(f"step {step} needs {step[1]} labels, got {len(labels)}")
            _check_labels(self.q, labels)

    @property
    def endpoint(self) -> tuple[int, int]:
        x = sum(s[0] for s, _ in self.steps)
        y = sum(s[1] for s, _ in self.steps)
        return (x, y)

    @property
    def span(self) -> int:
        """x + y of the endpoint; the path ends on the line x + y = span."""
        x, y = self.endpoint
        return x + y

    def __str__(self):
        return path_to_text(self)


def _expected_count(family: str, n: int, q: int) -> int:
    x = q - 1
    if family == "pell":
        return counting.poly("del", n)(x)
    if family == "heis":
        return counting.poly("pre_he", n)(x)
    if family == "heis_tilde":
        return counting.poly("he", n)(x)
    if family == "inv":
        return counting.poly("pre_in", n)(x)
    if family == "inv_tilde":
        return counting.poly("inv", n)(x)
    raise UnknownFamily(f"unknown path family {family!r}")


def enumerate_paths(family: str, n: int, q: int, limit: int | None = None):
    """Yield the family's paths for U_n(F_q) in lexicographic order.

    Order: at each position, steps compare by STEP_ORDER and label tuples
    lexicographically.  The expected stream size (the family's counting
    polynomial at x = q-1) is checked against the size guard up front;
    SpaceTooLarge carries the bound.
    """
    if family not in PATH_FAMILIES:
        raise UnknownFamily(f"unknown path family {family!r}")
    field_make(q)  # validates q
    bound = space_limit(limit)
    expected = _expected_count(family, n, q)
    if expected > bound:
        raise SpaceTooLarge(bound, expected, f"path family {family}({n}, F_{q})")

    steps = [s for s in STEP_ORDER if s in PATH_FAMILIES[family]]
    if family == "inv_tilde":
        targets = {t for t in (n - 1, n - 2) if t >= 1}
        top = max(targets, default=0)
    else:
        targets = {n - 1}
        top = n - 1

    def rec(acc, total):
        if total in targets and (family != "inv_tilde" or acc):
            yield LabeledLatticePath(q, tuple(acc))
        if total >= top:
            return
        first = not acc
        for step in steps:
            if first and family == "heis_tilde" and step == (0, 2):
                continue
            if first and family == "inv_tilde" and step != (0, 1):
                continue
            adv = step[0] + step[1]
            if total + adv > top:
                continue
            for labels in product(range(1, q), repeat=step[1]):
                acc.append((step, labels))
                yield from rec(acc, total + adv)
                acc.pop()

    if n >= 1 and 0 in targets:
        # the empty path, for families that allow n = 1
        yield LabeledLatticePath(q, ())
        targets.discard(0)
    if n >= 1:
        yield from rec([], 0)


def enumerate_partitions(n: int, q: int, filter: str = "all",
                         limit: int | None = None):
    """Yield labeled set partitions of [n] over F_q lazily.

    filter selects "all", "noncrossing", "feasible" or "heis_support"
    (arcs of the form (i, i+1) or (i, i+2) only).  Streams are ordered
    lexicographically by arc position list, then by label vector.  The
    expected stream size is checked against the size guard.
    """
    if filter not in PARTITION_FILTERS:
        raise UnknownFamily(f"unknown partition filter {filter!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    field_make(q)
    bound = space_limit(limit)
    expected = counting.poly("bell", n)(q - 1)
    if expected > bound:
        raise SpaceTooLarge(bound, expected, f"partitions of [{n}] over F_{q}")

    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]

    def keep(chosen) -> bool:
        part = LabeledSetPartition(n, q, tuple((i, j, 1) for i, j in chosen))
        if filter == "noncrossing":
            return is_noncrossing(part)
        if filter == "feasible":
            return is_feasible(part)
        if filter == "heis_support":
            return has_heis_support(part)
        return True

    def rec(start, chosen, used_src, used_tgt):
        if keep(chosen):
            for labels in product(range(1, q), repeat=len(chosen)):
                yield LabeledSetPartition(
                    n, q, tuple((i, j, t) for (i, j), t in zip(chosen, labels)))
        for a in range(start, len(pairs)):
            i, j = pairs[a]
            if i in used_src or j in used_tgt:
                continue
            chosen.append((i, j))
            yield from rec(a + 1, chosen, used_src | {i}, used_tgt | {j})
            chosen.pop()

    yield from rec(0, [], frozenset(), frozenset())


# -------------------------------------------------------------- serialization
def path_to_text(path: LabeledLatticePath) -> str:
    """Text form like "R N(1) U(2) UU(1,1)"; the empty path is "-"."""
    if not path.steps:
        return "-"
    parts = []
    for step, labels in path.steps:
        name = STEP_NAMES[step]
        parts.append(name if not labels else f"{name}({','.join(map(str, labels))})")
    return " ".join(parts)


_TOKEN = re.compile(r"^([A-Z][A-Z0-9]*)(?:\(([0-9,]+)\))?$")


def path_from_text(text: str, q: int) -> LabeledLatticePath:
    """Inverse of path_to_text; labels are validated against F_q."""
    text = text.strip()
    if text in ("", "-"):
        return LabeledLatticePath(q, ())
    steps = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m or m.group(1) not in _NAME_STEPS:
            raise ValueError(f"cannot parse path token {token!r}")
        step = _NAME_STEPS[m.group(1)]
        labels = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
        steps.append((step, labels))
    return LabeledLatticePath(q, tuple(steps))


def partition_to_text(part: LabeledSetPartition) -> str:
    """Text form like "arc 1-3:1 arc 2-4:2"; no arcs gives "(no arcs)"."""
    if not part.arcs:
        return "(no arcs)"
    return " ".join(f"arc {i}-{j}:{t}" for i, j, t in part.arcs)


def partition_from_text(text: str, n: int, q: int) -> LabeledSetPartition:
    """Inverse of partition_to_text given the ambient n and q."""
    text = text.strip()
    if text in ("", "(no arcs)"):
        return LabeledSetPartition(n, q, ())
    tokens = text.split()
    arcs = []
    for kw, spec in zip(tokens[::2], tokens[1::2]):
        if kw != "arc":
            raise ValueError(f"cannot parse partition text {text!r}")
        pos, _, label = spec.partition(":")
        i, _, j = pos.partition("-")
        arcs.append((int(i), int(j), int(label)))
    if 2 * len(arcs) != len(tokens):
        raise ValueError(f"cannot parse partition text {text!r}")
    return LabeledSetPartition(n, q, tuple(sorted(arcs)))
