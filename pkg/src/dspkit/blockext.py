"""Two-block decompositions of diagonalizable instances.

A split sends each eigenvalue multiplicity m_i of every class to a pair
(m'_i, m''_i) with the left parts summing to l and the right parts to n-l.
From the per-class quantities s_j = l(n-l) - sum(m'_i m''_i) one reads off
the extension dimension delta = sum(s_j) - 2l(n-l) and the dimension counts
d', d'', d''' of the reducible-tuple varieties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classes import ClassSpec, Instance, class_spec
from .errors import BoundExceededError
from .partitions import MultiplicityVector, d_of_jnf, d_of_mv, r_of_mv

SPLIT_ENUMERATION_BOUND = 200_000

CASE_TAGS = ("B", "C", "D", "E", "F")


@dataclass(frozen=True)
class BlockSplit:
    """A two-block multiplicity split of every class of an instance.

    pairs[j][k] = (m', m'') for eigenvalue slot k of class j.
    """

    l: int
    pairs: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple(tuple((int(a), int(b)) for a, b in cls) for cls in self.pairs)
        )
        if self.l < 1:
            raise ValueError("left block must have size >= 1")
        lefts = {sum(a for a, _ in cls) for cls in self.pairs}
        rights = {sum(b for _, b in cls) for cls in self.pairs}
        if lefts != {self.l}:
            raise ValueError(f"left multiplicities must sum to l={self.l}, got {lefts}")
        if len(rights) != 1 or next(iter(rights)) < 1:
            raise ValueError("right block must have a consistent size >= 1")

    @property
    def n(self) -> int:
        return self.l + sum(b for _, b in self.pairs[0])

    def left_mv(self, j: int) -> MultiplicityVector:
        return MultiplicityVector(a for a, _ in self.pairs[j])

    def right_mv(self, j: int) -> MultiplicityVector:
        return MultiplicityVector(b for _, b in self.pairs[j])

    def swapped(self) -> "BlockSplit":
        """Exchange the roles of the two blocks."""
        return BlockSplit(
            self.n - self.l,
            tuple(tuple((b, a) for a, b in cls) for cls in self.pairs),
        )


@dataclass(frozen=True)
class ExtReport:
    """Extension-dimension report for one split."""

    l: int
    n: int
    s: tuple[int, ...]
    delta: int
    d1: tuple[int, ...]
    d2: tuple[int, ...]
    r1: tuple[int, ...]
    r2: tuple[int, ...]
    dprime: int
    ddprime: int
    dtriple: int
    case_tag: str
    # Advisory hypothesis flags, not decisions: the extension-dimension
    # formula assumes trivial centralizers of the two block tuples, which we
    # approximate by the necessary inequalities at block size.
    first_class_split_simple: bool
    left_block_alpha_beta: bool
    right_block_alpha_beta: bool


def _require_diagonalizable(instance: Instance):
    for idx, c in enumerate(instance.classes):
        if not c.is_diagonalizable():
            raise ValueError(f"class {idx + 1} is not diagonalizable; splits are undefined")


def s_of_split(sp: BlockSplit, j: int) -> int:
    """Degrees of freedom of the off-diagonal block map for class j.

    Invariant under exchanging the two blocks.
    """
    m = sp.l * (sp.n - sp.l)
    return m - sum(a * b for a, b in sp.pairs[j])


def _alpha_beta_of_mvs(mvs: list[MultiplicityVector], size: int) -> bool:
    if size == 1:
        return True
    d = [d_of_mv(mv) for mv in mvs]
    r = [r_of_mv(mv) for mv in mvs]
    alpha = sum(d) >= 2 * size * size - 2
    total_r = sum(r)
    beta = all(total_r - rj >= size for rj in r)
    return alpha and beta


def delta_of_split(instance: Instance, sp: BlockSplit) -> ExtReport:
    """Full extension report: s_j, delta, block invariants, dimension counts."""
    _require_diagonalizable(instance)
    n = instance.n
    if sp.n != n or len(sp.pairs) != len(instance.classes):
        raise ValueError("split does not match the instance shape")
    for c, cls_pairs in zip(instance.classes, sp.pairs):
        if tuple(a + b for a, b in cls_pairs) != c.multiplicities:
            raise ValueError("split pairs do not add up to the class multiplicities")

    l = sp.l
    m = l * (n - l)
    s = tuple(s_of_split(sp, j) for j in range(len(instance.classes)))
    delta = sum(s) - 2 * m

    left_mvs = [sp.left_mv(j) for j in range(len(instance.classes))]
    right_mvs = [sp.right_mv(j) for j in range(len(instance.classes))]
    d1 = tuple(d_of_mv(mv) for mv in left_mvs)
    d2 = tuple(d_of_mv(mv) for mv in right_mvs)
    r1 = tuple(r_of_mv(mv) for mv in left_mvs)
    r2 = tuple(r_of_mv(mv) for mv in right_mvs)

    sum_d = sum(d_of_jnf(c.jnf) for c in instance.classes)
    dprime = sum_d - n * n + 1
    # d''' assembled from the three block contributions, independently of d'.
    dtriple = (sum(d1) - l * l + 1) + (sum(d2) - (n - l) * (n - l) + 1) + (sum(s) - m)
    ddprime = dtriple + m

    c1 = sp.pairs[0]
    first_simple = instance.classes[0].is_diagonalizable() and all(
        a + b == 1 for a, b in c1
    )
    return ExtReport(
        l=l,
        n=n,
        s=s,
        delta=delta,
        d1=d1,
        d2=d2,
        r1=r1,
        r2=r2,
        dprime=dprime,
        ddprime=ddprime,
        dtriple=dtriple,
        case_tag=detect_case_BF(instance, sp),
        first_class_split_simple=first_simple,
        left_block_alpha_beta=_alpha_beta_of_mvs(left_mvs, l),
        right_block_alpha_beta=_alpha_beta_of_mvs(right_mvs, n - l),
    )


def _signature(sp: BlockSplit, j: int) -> tuple[tuple[int, int], ...]:
    """Multiset of (m', m'') pairs of class j, zero slots dropped."""
    return tuple(sorted(p for p in sp.pairs[j] if p != (0, 0)))


def _case_signatures(l: int, nl: int) -> dict[str, tuple[tuple[tuple[int, int], ...], ...]]:
    """Expected class-2/class-3 pair multisets for each low-extension case."""
    sigs: dict[str, tuple] = {}
    if l == 2 and nl == 2:
        shared_two = tuple(sorted([(1, 1), (1, 1)]))
        shared_one = tuple(sorted([(1, 1), (1, 0), (0, 1)]))
        sigs["B"] = (shared_two, shared_two)
        sigs["C"] = (shared_two, shared_one)
    if l == 3 and nl == 3:
        sigs["D"] = (tuple(sorted([(1, 1), (1, 1), (1, 1)])), tuple(sorted([(1, 1), (2, 2)])))
    if nl == 2 and l >= 3 and l % 2 == 1:
        q = (l - 1) // 2
        sigs["E"] = (
            tuple(sorted([(q, 1), (q, 1), (1, 0)])),
            tuple(sorted([(q + 1, 1), (q, 1)])),
        )
    if nl == 2 and l >= 2 and l % 2 == 0:
        q = l // 2
        sigs["F"] = (
            tuple(sorted([(q, 1), (q - 1, 1), (1, 0)])),
            tuple(sorted([(q, 1), (q, 1)])),
        )
    return sigs


def detect_case_BF(instance: Instance, sp: BlockSplit) -> str:
    """Match a p=2 split against the low-extension sharing patterns B..F.

    Matching is structural (multiplicity patterns and eigenvalue sharing, up
    to relabeling) and allows swapping the roles of classes 2 and 3.
    Returns "none" outside the patterns or their preconditions.
    """
    if instance.p != 2:
        return "none"
    n = instance.n
    l, nl = sp.l, n - sp.l
    if not (l >= nl >= 2):
        return "none"
    sig2, sig3 = _signature(sp, 1), _signature(sp, 2)
    for tag, (want_a, want_b) in _case_signatures(l, nl).items():
        if (sig2, sig3) in ((want_a, want_b), (want_b, want_a)):
            return tag
    return "none"


def enumerate_splits(instance: Instance, l: int,
                     bound: int = SPLIT_ENUMERATION_BOUND) -> list[BlockSplit]:
    """All multiplicity splits of the instance at left-block size l."""
    _require_diagonalizable(instance)
    n = instance.n
    if not 1 <= l <= n - 1:
        raise ValueError(f"block size must satisfy 1 <= l <= n-1, got {l}")
    work = 1
    for c in instance.classes:
        for m in c.multiplicities:
            work *= m + 1
    if work > bound:
        raise BoundExceededError(f"split enumeration needs {work} candidates, bound {bound}")

    per_class: list[list[tuple[tuple[int, int], ...]]] = []
    for c in instance.classes:
        mults = c.multiplicities
        choices = []
        for left in itertools.product(*(range(m + 1) for m in mults)):
            if sum(left) == l:
                choices.append(tuple((a, m - a) for a, m in zip(left, mults)))
        per_class.append(choices)

    return [BlockSplit(l, combo) for combo in itertools.product(*per_class)]


def sub_instances(instance: Instance, sp: BlockSplit) -> tuple[Instance, Instance]:
    """The two diagonal-block sub-instances carved out by a split."""
    _require_diagonalizable(instance)

    def carve(side: int) -> Instance:
        classes = []
        for c, cls_pairs in zip(instance.classes, sp.pairs):
            entries = []
            for ev, pair in zip(c.eigenvalues, cls_pairs):
                m = pair[side]
                if m > 0:
                    entries.append((ev.value, (1,) * m))
            classes.append(class_spec(entries, mode=instance.mode))
        return Instance(mode=instance.mode, classes=tuple(classes))

    return carve(0), carve(1)


def sub_trace_ok(instance: Instance, sp: BlockSplit) -> bool:
    """Both blocks satisfy their own exact zero-sum / integer-product condition."""
    from .classes import trace_condition

    left, right = sub_instances(instance, sp)
    return trace_condition(left) and trace_condition(right)
