"""Conjugacy-class and instance specifications with exact eigenvalue data.

Eigenvalues live in Q(i).  In multiplicative mode the stored value q is the
logarithm of the actual eigenvalue sigma = exp(2*pi*i*q), so equality is
"q differs by a real integer" and every product condition becomes an exact
integer-membership test on sums of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInstanceError
from .partitions import Jnf, MultiplicityVector, d_of_jnf, r_of_jnf

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"
MODES = (ADDITIVE, MULTIPLICATIVE)


@dataclass(frozen=True)
class GaussianRational:
    """Exact element of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def scaled(self, k: int) -> "GaussianRational":
        return GaussianRational(self.re * k, self.im * k)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else ''}{self.im}i"


ZERO = GaussianRational()


def gr(re, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints, strings, or Fractions."""
    return GaussianRational(Fraction(re), Fraction(im))


@dataclass(frozen=True)
class Eigenvalue:
    """An exact eigenvalue slot value together with its interpretation mode."""

    value: GaussianRational
    mode: str = ADDITIVE

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidInstanceError(f"unknown mode {self.mode!r}")

    def same_as(self, other: "Eigenvalue") -> bool:
        """Mode-aware equality; multiplicative values agree modulo Z."""
        if self.mode != other.mode:
            return False
        diff = self.value - other.value
        if self.mode == ADDITIVE:
            return diff.is_zero()
        return diff.is_real_integer()


@dataclass(frozen=True)
class ClassSpec:
    """One conjugacy class: Jordan structure plus one eigenvalue per slot."""

    jnf: Jnf
    eigenvalues: tuple[Eigenvalue, ...]
    mode: str = ADDITIVE

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", tuple(self.eigenvalues))
        if self.mode not in MODES:
            raise InvalidInstanceError(f"unknown mode {self.mode!r}")
        if len(self.eigenvalues) != len(self.jnf.slots):
            raise InvalidInstanceError(
                f"{len(self.eigenvalues)} eigenvalues for {len(self.jnf.slots)} slots"
            )
        if any(ev.mode != self.mode for ev in self.eigenvalues):
            raise InvalidInstanceError("eigenvalue mode differs from class mode")
        for a in range(len(self.eigenvalues)):
            for b in range(a + 1, len(self.eigenvalues)):
                if self.eigenvalues[a].same_as(self.eigenvalues[b]):
                    raise InvalidInstanceError(
                        f"duplicate eigenvalues in one class: slots {a} and {b}"
                    )

    @property
    def n(self) -> int:
        return self.jnf.size

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """Algebraic multiplicity of each eigenvalue slot, in slot order."""
        return tuple(s.weight for s in self.jnf.slots)

    def is_diagonalizable(self) -> bool:
        return all(all(b == 1 for b in s.parts) for s in self.jnf.slots)

    def mv(self) -> MultiplicityVector:
        """Multiplicity vector; only meaningful shape-wise for diagonalizable classes."""
        return MultiplicityVector(self.multiplicities)


def class_spec(blocks_per_eigenvalue, mode: str = ADDITIVE) -> ClassSpec:
    """Build a ClassSpec from (value, blocks) pairs.

    `value` may be anything Fraction accepts or a (re, im) pair; `blocks` is
    the tuple of Jordan block sizes for that eigenvalue.
    """
    slots = []
    evs = []
    for value, blocks in blocks_per_eigenvalue:
        if isinstance(value, GaussianRational):
            g = value
        elif isinstance(value, tuple):
            g = gr(*value)
        else:
            g = gr(value)
        slots.append(tuple(blocks))
        evs.append(Eigenvalue(g, mode))
    return ClassSpec(Jnf(tuple(slots)), tuple(evs), mode)


def diagonal_class(values, mults=None, mode: str = ADDITIVE) -> ClassSpec:
    """Diagonalizable class from eigenvalues and multiplicities (default all 1)."""
    if mults is None:
        mults = [1] * len(values)
    return class_spec([(v, (1,) * m) for v, m in zip(values, mults)], mode)


@dataclass(frozen=True)
class Instance:
    """p+1 conjugacy classes of a common size, sharing a mode."""

    mode: str
    classes: tuple[ClassSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        if self.mode not in MODES:
            raise InvalidInstanceError(f"unknown mode {self.mode!r}")
        if len(self.classes) < 2:
            raise InvalidInstanceError("an instance needs at least two classes (p >= 1)")
        sizes = {c.n for c in self.classes}
        if len(sizes) != 1:
            raise InvalidInstanceError(f"classes have mismatched sizes {sorted(sizes)}")
        if any(c.mode != self.mode for c in self.classes):
            raise InvalidInstanceError("class mode differs from instance mode")

    @property
    def n(self) -> int:
        return self.classes[0].n

    @property
    def p(self) -> int:
        return len(self.classes) - 1


@dataclass(frozen=True)
class DerivedQuantities:
    """Scalar invariants of an instance."""

    d: tuple[int, ...]
    r: tuple[int, ...]
    kappa: int
    trace_ok: bool
    convention2: bool

    @property
    def sum_d(self) -> int:
        return sum(self.d)


def weighted_eigenvalue_sum(instance: Instance) -> GaussianRational:
    """Sum over all classes of eigenvalue times multiplicity."""
    total = ZERO
    for c in instance.classes:
        for ev, m in zip(c.eigenvalues, c.multiplicities):
            total = total + ev.value.scaled(m)
    return total


def trace_condition(instance: Instance) -> bool:
    """Exact zero-sum (additive) or identity-product (multiplicative) test."""
    total = weighted_eigenvalue_sum(instance)
    if instance.mode == ADDITIVE:
        return total.is_zero()
    return total.is_real_integer()


def has_distinct_first_class(instance: Instance) -> bool:
    """True when class 1 is diagonal with n distinct eigenvalues."""
    c = instance.classes[0]
    return len(c.jnf.slots) == c.n and all(s.weight == 1 for s in c.jnf.slots)


def validate_instance(instance: Instance) -> DerivedQuantities:
    """Compute d_j, r_j, the rigidity index, and the standing-condition flags."""
    d = tuple(d_of_jnf(c.jnf) for c in instance.classes)
    r = tuple(r_of_jnf(c.jnf) for c in instance.classes)
    n = instance.n
    kappa = 2 * n * n - sum(d)
    return DerivedQuantities(
        d=d,
        r=r,
        kappa=kappa,
        trace_ok=trace_condition(instance),
        convention2=has_distinct_first_class(instance),
    )


def exponentiate_instance(instance: Instance) -> Instance:
    """Map an additive instance to the multiplicative one with sigma = exp(2*pi*i*q).

    Jordan structures and q values are kept verbatim; fails when two additive
    eigenvalues of one class collide modulo Z.
    """
    if instance.mode != ADDITIVE:
        raise InvalidInstanceError("exponentiation applies to additive instances only")
    new_classes = []
    for idx, c in enumerate(instance.classes):
        for a in range(len(c.eigenvalues)):
            for b in range(a + 1, len(c.eigenvalues)):
                diff = c.eigenvalues[a].value - c.eigenvalues[b].value
                if diff.is_real_integer():
                    raise InvalidInstanceError(
                        f"class {idx + 1}: eigenvalues in slots {a} and {b} differ "
                        "by an integer and collide under exponentiation"
                    )
        new_classes.append(
            ClassSpec(
                jnf=c.jnf,
                eigenvalues=tuple(Eigenvalue(ev.value, MULTIPLICATIVE) for ev in c.eigenvalues),
                mode=MULTIPLICATIVE,
            )
        )
    return Instance(mode=MULTIPLICATIVE, classes=tuple(new_classes))
