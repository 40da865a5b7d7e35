"""Integer partitions, Jordan structures, and the dual-partition correspondence.

A Jordan structure of size n is a family of block-size partitions, one per
distinct eigenvalue.  Its "diagonal companion" is the multiplicity vector
obtained by dualizing every per-eigenvalue partition and uniting the parts;
the orbit dimension d and the rank invariant r are unchanged by this map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceededError

JNF_ENUMERATION_BOUND = 12


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of a non-negative integer, parts stored weakly decreasing."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def dual_partition(p: Partition) -> Partition:
    """Conjugate partition: transpose of the Young diagram."""
    if not p.parts:
        return Partition(())
    return Partition(sum(1 for part in p.parts if part > i) for i in range(p.parts[0]))


@dataclass(frozen=True)
class MultiplicityVector:
    """Eigenvalue multiplicities of a diagonalizable class, up to permutation.

    Canonical form is weakly decreasing with zero components dropped.
    """

    mults: tuple[int, ...]

    def __init__(self, mults=()):
        mults = tuple(sorted((int(m) for m in mults if int(m) != 0), reverse=True))
        if mults and mults[-1] < 0:
            raise ValueError(f"multiplicities must be non-negative, got {mults}")
        object.__setattr__(self, "mults", mults)

    @property
    def size(self) -> int:
        return sum(self.mults)

    def __len__(self) -> int:
        return len(self.mults)

    def __iter__(self):
        return iter(self.mults)

    def __repr__(self) -> str:
        return f"MultiplicityVector({list(self.mults)})"


@dataclass(frozen=True, eq=False)
class Jnf:
    """Jordan structure: one block-size partition per distinct eigenvalue.

    Slot order is preserved (callers align eigenvalue data positionally) but
    equality and hashing ignore it.
    """

    slots: tuple[Partition, ...]

    def __init__(self, slots):
        slots = tuple(s if isinstance(s, Partition) else Partition(s) for s in slots)
        if not slots:
            raise ValueError("a Jordan structure needs at least one eigenvalue slot")
        if any(s.weight < 1 for s in slots):
            raise ValueError("every eigenvalue slot must have weight >= 1")
        object.__setattr__(self, "slots", slots)

    @property
    def size(self) -> int:
        return sum(s.weight for s in self.slots)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted((s.parts for s in self.slots), reverse=True))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jnf):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Jnf({[list(s.parts) for s in self.slots]})"


def diagonal_jnf(mv: MultiplicityVector) -> Jnf:
    """The diagonalizable Jordan structure with the given multiplicities."""
    return Jnf(tuple(Partition((1,) * m) for m in mv.mults))


def is_diagonal(j: Jnf) -> bool:
    return all(all(b == 1 for b in s.parts) for s in j.slots)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, largest-first order."""
    if n < 0:
        return ()
    if n == 0:
        return (Partition(()),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return tuple(out)


@lru_cache(maxsize=None)
def all_jnfs(n: int) -> tuple[Jnf, ...]:
    """All Jordan structures of size n, one representative per slot multiset."""

    def extend(remaining: int, ceiling: tuple[int, ...]) -> list[tuple[tuple[int, ...], ...]]:
        # Slots chosen in weakly decreasing order of their parts-tuple so each
        # multiset appears exactly once.
        if remaining == 0:
            return [()]
        out = []
        for w in range(remaining, 0, -1):
            for p in partitions_of(w):
                if p.parts > ceiling:
                    continue
                for tail in extend(remaining - w, p.parts):
                    out.append((p.parts,) + tail)
        return out

    top = (n + 1,)  # larger than any parts-tuple of weight <= n
    return tuple(Jnf(tuple(Partition(p) for p in combo)) for combo in extend(n, top))


def corresponding_diagonal(j: Jnf) -> MultiplicityVector:
    """Multiplicity vector of the diagonal Jordan structure corresponding to j.

    Each slot's partition is dualized and the resulting parts are united into
    one multiset.
    """
    mults: list[int] = []
    for slot in j.slots:
        mults.extend(dual_partition(slot).parts)
    return MultiplicityVector(mults)


def corresponding_jnfs(mv: MultiplicityVector, n: int | None = None,
                       bound: int = JNF_ENUMERATION_BOUND) -> tuple[Jnf, ...]:
    """All Jordan structures of size n whose diagonal companion equals mv.

    Brute-force enumeration; includes the diagonal structure itself.
    """
    if n is None:
        n = mv.size
    if n != mv.size:
        raise ValueError(f"multiplicity vector has size {mv.size}, expected {n}")
    if n > bound:
        raise BoundExceededError(f"size {n} exceeds enumeration bound {bound}")
    return tuple(j for j in all_jnfs(n) if corresponding_diagonal(j) == mv)


def r_of_jnf(j: Jnf) -> int:
    """Size minus the maximal number of Jordan blocks sharing one eigenvalue."""
    return j.size - max(len(s.parts) for s in j.slots)


def d_of_jnf(j: Jnf) -> int:
    """Conjugacy-orbit dimension: n^2 minus the centralizer dimension.

    The centralizer of a Jordan matrix has dimension sum(min(b, b')) over all
    ordered block pairs within each eigenvalue slot.
    """
    n = j.size
    cent = 0
    for slot in j.slots:
        for b in slot.parts:
            for b2 in slot.parts:
                cent += min(b, b2)
    return n * n - cent


def d_of_mv(mv: MultiplicityVector) -> int:
    """Orbit dimension of a diagonalizable class: n^2 - sum of squared mults."""
    n = mv.size
    return n * n - sum(m * m for m in mv.mults)


def r_of_mv(mv: MultiplicityVector) -> int:
    """Rank invariant of a diagonalizable class: n minus the top multiplicity."""
    return mv.size - max(mv.mults)


def is_regular(j: Jnf) -> bool:
    """True when every eigenvalue carries exactly one Jordan block."""
    return all(len(s.parts) == 1 for s in j.slots)
