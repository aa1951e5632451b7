"""Multisets over [n], their difference forms, classes and patterns.

A sorted t-multiset of [n] = {1, ..., n} has a *form*: the t-tuple of
consecutive differences read cyclically mod n, with n written instead of
0 in the closing coordinate.  Forms that are cyclic rotations of one
another are equivalent, and forms that are arbitrary permutations of one
another share a *class*; a class is just a partition of n recorded as a
nonincreasing tuple.  Counting how many parts of a class share each size
yields its *pattern*, a partition of t, which is *good* when some
multiplicity equals 1 (that value can then serve as an unambiguous class
representative) and *bad* otherwise.

Everything here is exact integer arithmetic on immutable values.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace

MULTISET = "multiset"
SUBSET = "subset"
KINDS = (MULTISET, SUBSET)


def check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


@dataclass(frozen=True)
class Multiset:
    """A nondecreasing t-tuple of symbols from 1..n."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set size must be >= 1")
        if not self.elements:
            raise ValueError("multiset must be nonempty")
        if any(not 1 <= e <= self.n for e in self.elements):
            raise ValueError(f"elements must lie in 1..{self.n}: {self.elements}")
        if any(a > b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError(f"elements must be nondecreasing: {self.elements}")

    @property
    def t(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Form:
    """Difference tuple of a sorted multiset: t-1 gaps, then the wrap gap.

    Interior gaps lie in 0..n-1 (1..n-1 for subsets); the wrap gap lies in
    1..n, with n standing in for 0.  The coordinates always sum to n.
    """

    diffs: tuple[int, ...]
    n: int
    kind: str = MULTISET

    def __post_init__(self):
        check_kind(self.kind)
        if not self.diffs:
            raise ValueError("form must be nonempty")
        lo = 0 if self.kind == MULTISET else 1
        interior, last = self.diffs[:-1], self.diffs[-1]
        if any(not lo <= d <= self.n - 1 for d in interior):
            raise ValueError(f"interior differences out of range: {self.diffs}")
        if not 1 <= last <= self.n:
            raise ValueError(f"final difference out of range: {self.diffs}")
        if sum(self.diffs) != self.n:
            raise ValueError(f"differences of {self.diffs} do not sum to {self.n}")

    @property
    def t(self) -> int:
        return len(self.diffs)


@dataclass(frozen=True)
class DifferenceClass:
    """Unordered multiset of a form's differences: a partition of n.

    ``parts`` is nonincreasing and sums to n.  ``distinguished`` is the
    part chosen as class representative (must have multiplicity one), or
    None while no choice has been made.
    """

    parts: tuple[int, ...]
    n: int
    kind: str = MULTISET
    distinguished: int | None = None

    def __post_init__(self):
        check_kind(self.kind)
        if not self.parts:
            raise ValueError("class must have at least one part")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")
        lo = 0 if self.kind == MULTISET else 1
        if any(not lo <= p <= self.n for p in self.parts):
            raise ValueError(f"parts out of range: {self.parts}")
        if sum(self.parts) != self.n:
            raise ValueError(f"parts {self.parts} do not sum to {self.n}")
        if self.distinguished is not None:
            if self.parts.count(self.distinguished) != 1:
                raise ValueError(
                    f"distinguished value {self.distinguished} does not have "
                    f"multiplicity 1 in {self.parts}"
                )

    @property
    def t(self) -> int:
        return len(self.parts)

    def with_distinguished(self, value: int) -> "DifferenceClass":
        return replace(self, distinguished=value)


@dataclass(frozen=True)
class Pattern:
    """Multiplicities of equal parts in a class, sorted nonincreasing."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if not self.multiplicities or any(m < 1 for m in self.multiplicities):
            raise ValueError(f"bad multiplicities: {self.multiplicities}")
        if any(a < b for a, b in zip(self.multiplicities, self.multiplicities[1:])):
            raise ValueError(f"multiplicities must be nonincreasing: {self.multiplicities}")

    @property
    def good(self) -> bool:
        return 1 in self.multiplicities


def form_of(s: Multiset, kind: str = MULTISET) -> Form:
    """Form of a sorted multiset: consecutive gaps, wrap gap last.

    The wrap gap n - (max - min) replaces the 0 that pure modular
    arithmetic would give for constant multisets.
    """
    check_kind(kind)
    e = s.elements
    diffs = [e[i + 1] - e[i] for i in range(len(e) - 1)]
    diffs.append(s.n - (e[-1] - e[0]))
    return Form(tuple(diffs), s.n, kind)


def rotations(tup: tuple) -> list[tuple]:
    return [tup[i:] + tup[:i] for i in range(len(tup))]


def is_cyclic_equivalent(f: Form, g: Form) -> bool:
    """True when one form is a cyclic rotation of the other."""
    if (f.n, f.t, f.kind) != (g.n, g.t, g.kind):
        raise ValueError("forms live in different (n, t, kind) universes")
    return g.diffs in rotations(f.diffs)


def class_of(f: Form) -> DifferenceClass:
    """The class of a form: its differences sorted nonincreasing."""
    return DifferenceClass(tuple(sorted(f.diffs, reverse=True)), f.n, f.kind)


def _partitions_at_most(remaining: int, max_part: int, slots: int):
    # nonincreasing positive parts, at most `slots` of them, descending lex
    if remaining == 0:
        yield ()
        return
    if slots == 0:
        return
    for p in range(min(max_part, remaining), 0, -1):
        for rest in _partitions_at_most(remaining - p, p, slots - 1):
            yield (p,) + rest


def _partitions_exact(remaining: int, max_part: int, slots: int):
    # nonincreasing positive parts, exactly `slots` of them, descending lex
    if slots == 0:
        if remaining == 0:
            yield ()
        return
    hi = min(max_part, remaining - (slots - 1))
    for p in range(hi, 0, -1):
        if remaining - p > p * (slots - 1):
            break  # remaining parts could not stay <= p
        for rest in _partitions_exact(remaining - p, p, slots - 1):
            yield (p,) + rest


def enumerate_classes(n: int, t: int, kind: str = MULTISET) -> list[DifferenceClass]:
    """All classes for (n, t, kind), in descending lexicographic order.

    Multiset kind: partitions of n into at most t parts, zero-padded to
    length t.  Subset kind: partitions of n into exactly t positive parts.
    """
    check_kind(kind)
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    out = []
    if kind == MULTISET:
        for p in _partitions_at_most(n, n, t):
            padded = p + (0,) * (t - len(p))
            out.append(DifferenceClass(padded, n, kind))
    else:
        for p in _partitions_exact(n, n, t):
            out.append(DifferenceClass(p, n, kind))
    return out


def pattern_of(c: DifferenceClass) -> Pattern:
    """Pattern of a class: how many parts share each size."""
    mults = sorted(Counter(c.parts).values(), reverse=True)
    return Pattern(tuple(mults))


def has_bad_pattern(n: int, t: int, kind: str = MULTISET) -> bool:
    """Whether any class of (n, t, kind) has a bad pattern."""
    return any(not pattern_of(c).good for c in enumerate_classes(n, t, kind))


def shift_down(c: DifferenceClass) -> DifferenceClass:
    """Map a subset class of [n] to the multiset class of [n-t] obtained
    by decreasing every part by one.  Bijective; inverse is shift_up."""
    if c.kind != SUBSET:
        raise ValueError("shift_down expects a subset-kind class")
    parts = tuple(p - 1 for p in c.parts)
    dist = None if c.distinguished is None else c.distinguished - 1
    return DifferenceClass(parts, c.n - c.t, MULTISET, dist)


def shift_up(c: DifferenceClass) -> DifferenceClass:
    """Inverse of shift_down: multiset class of [n] to subset class of [n+t]."""
    if c.kind != MULTISET:
        raise ValueError("shift_up expects a multiset-kind class")
    parts = tuple(p + 1 for p in c.parts)
    dist = None if c.distinguished is None else c.distinguished + 1
    return DifferenceClass(parts, c.n + c.t, SUBSET, dist)


def expected_length(n: int, t: int, kind: str = MULTISET) -> int:
    """Length of a universal cycle for (n, t, kind): C(n+t-1, t) or C(n, t)."""
    check_kind(kind)
    if kind == MULTISET:
        return math.comb(n + t - 1, t)
    return math.comb(n, t)


def necessary_condition(n: int, t: int, kind: str = MULTISET) -> bool:
    """Divisibility condition a universal cycle must satisfy: n divides the
    number of t-multisets (resp. t-subsets) of [n]."""
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    return expected_length(n, t, kind) % n == 0
