"""Exhaustive enumeration of non-genericity relations.

An N-relation picks N eigenvalues (with multiplicity) from every class so
that the total is exactly zero (additive) or an exact real integer
(multiplicative, in log form).  Everything here is exact rational
arithmetic; no relation is ever missed or invented within the size bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classes import ADDITIVE, GaussianRational, Instance, trace_condition
from .errors import BoundExceededError

GENERICITY_BOUND = 10


@dataclass(frozen=True)
class RelationWitness:
    """A concrete non-genericity relation.

    picks[j][k] is how many copies of eigenvalue k of class j participate;
    target is the exact value of the sum (0 additive, an integer otherwise).
    """

    N: int
    picks: tuple[tuple[int, ...], ...]
    target: int

    def complement(self, mults: tuple[tuple[int, ...], ...], total_target: int) -> "RelationWitness":
        picks = tuple(
            tuple(m - e for m, e in zip(class_mults, class_picks))
            for class_mults, class_picks in zip(mults, self.picks)
        )
        n = sum(mults[0])
        return RelationWitness(n - self.N, picks, total_target - self.target)


def _class_data(instance: Instance):
    """Per class: eigenvalue values and multiplicities, in slot order."""
    values = []
    mults = []
    for c in instance.classes:
        values.append(tuple(ev.value for ev in c.eigenvalues))
        mults.append(c.multiplicities)
    return values, mults


def _pick_vectors(mults: tuple[int, ...], N: int) -> list[tuple[int, ...]]:
    """All sub-multiplicity vectors summing to N, lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(idx: int, left: int, acc: list[int]):
        if idx == len(mults):
            if left == 0:
                out.append(tuple(acc))
            return
        # Remaining capacity prune.
        if left > sum(mults[idx:]):
            return
        for e in range(0, min(mults[idx], left) + 1):
            acc.append(e)
            rec(idx + 1, left - e, acc)
            acc.pop()

    rec(0, N, [])
    return out


def _pick_sum(values, pick) -> GaussianRational:
    total = GaussianRational()
    for v, e in zip(values, pick):
        if e:
            total = total + v.scaled(e)
    return total


def _extreme_sums(values, mults, N: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(min_re, max_re, min_im, max_im) over all N-picks, by greedy fill."""

    def greedy(keyed):
        picked = Fraction(0)
        left = N
        for key, m in keyed:
            take = min(m, left)
            picked += key * take
            left -= take
            if left == 0:
                break
        return picked

    re_sorted = sorted(zip((v.re for v in values), mults))
    im_sorted = sorted(zip((v.im for v in values), mults))
    min_re = greedy(re_sorted)
    max_re = greedy([(-k, m) for k, m in reversed(re_sorted)])
    min_im = greedy(im_sorted)
    max_im = greedy([(-k, m) for k, m in reversed(im_sorted)])
    return min_re, -max_re, min_im, -max_im


def enumerate_relations(instance: Instance, N: int,
                        bound: int = GENERICITY_BOUND) -> list[RelationWitness]:
    """All N-relations of the instance, deterministic (lexicographic) order."""
    n = instance.n
    if not 1 <= N < n:
        raise ValueError(f"N must satisfy 1 <= N < n, got N={N}, n={n}")
    if n > bound:
        raise BoundExceededError(f"size {n} exceeds genericity bound {bound}")
    values, mults = _class_data(instance)
    if any(sum(m) < N for m in mults):
        return []

    per_class = [_pick_vectors(m, N) for m in mults]
    extremes = [_extreme_sums(v, m, N) for v, m in zip(values, mults)]
    # Suffix-wise achievable ranges for pruning.
    p1 = len(instance.classes)
    suff = [(Fraction(0), Fraction(0), Fraction(0), Fraction(0))] * (p1 + 1)
    for j in range(p1 - 1, -1, -1):
        lo_re, hi_re, lo_im, hi_im = extremes[j]
        s = suff[j + 1]
        suff[j] = (lo_re + s[0], hi_re + s[1], lo_im + s[2], hi_im + s[3])

    additive = instance.mode == ADDITIVE
    found: list[RelationWitness] = []

    def feasible(partial: GaussianRational, j: int) -> bool:
        lo_re, hi_re, lo_im, hi_im = suff[j]
        if not (partial.im + lo_im <= 0 <= partial.im + hi_im):
            return False
        lo, hi = partial.re + lo_re, partial.re + hi_re
        if additive:
            return lo <= 0 <= hi
        # Some integer must fit in [lo, hi].
        return math.floor(hi) >= math.ceil(lo)

    def rec(j: int, partial: GaussianRational, acc: list[tuple[int, ...]]):
        if j == p1:
            if additive:
                if partial.is_zero():
                    found.append(RelationWitness(N, tuple(acc), 0))
            elif partial.is_real_integer():
                found.append(RelationWitness(N, tuple(acc), int(partial.re)))
            return
        if not feasible(partial, j):
            return
        for pick in per_class[j]:
            acc.append(pick)
            rec(j + 1, partial + _pick_sum(values[j], pick), acc)
            acc.pop()

    rec(0, GaussianRational(), [])
    return found


def has_relation(instance: Instance, N: int, bound: int = GENERICITY_BOUND) -> bool:
    return bool(enumerate_relations(instance, N, bound))


def min_relation_N(instance: Instance, bound: int = GENERICITY_BOUND) -> int | None:
    """Smallest N in 1..n-1 carrying a relation, or None if none exists.

    With the trace condition holding, an N-relation exists iff an
    (n-N)-relation does, so scanning N <= n/2 is exhaustive.
    """
    n = instance.n
    if n > bound:
        raise BoundExceededError(f"size {n} exceeds genericity bound {bound}")
    top = n // 2 if trace_condition(instance) else n - 1
    for N in range(1, top + 1):
        if has_relation(instance, N, bound):
            return N
    return None


def is_generic(instance: Instance, bound: int = GENERICITY_BOUND) -> bool:
    return min_relation_N(instance, bound) is None


def is_k_generic(instance: Instance, k: int, bound: int = GENERICITY_BOUND) -> bool:
    """Relations, if any, only occur with N >= k."""
    m = min_relation_N(instance, bound)
    return m is None or m >= k
