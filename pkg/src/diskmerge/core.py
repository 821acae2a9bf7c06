"""Exact-arithmetic core types for the disk merging problem.

A problem instance is a finite set of disks in the plane with rational
centres and radii.  A candidate solution is an idempotent self-map of the
disk set: every disk either keeps itself (it is *selected*) or is merged
into a selected disk.  Two verifiers are provided:

* :func:`verify_proper` -- the strict notion.  Each selected disk may only
  absorb a prefix of its distance-ordered neighbour sequence, every
  absorbed centre must fall strictly inside the growing aggregate disk,
  and selected disks must be pairwise centre-disjoint.
* :func:`verify_uproper` -- the relaxed notion.  The prefix requirement is
  dropped; absorbed centres must be reachable (non-strictly) when taken in
  distance order, and centre-disjointness still applies.

All comparisons are performed on squared distances with
:class:`fractions.Fraction`, so no floating point is involved anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class FormatError(ValueError):
    """Raised for malformed documents or values."""


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int or a ``"p/q"`` / integer string."""
    if isinstance(value, bool):
        raise FormatError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise FormatError(f"not a rational number: {value!r}")
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise FormatError(f"zero denominator: {value!r}") from None
    raise FormatError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational as the canonical ``"p/q"`` (or integer) string."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def dist2(self, other: "Point") -> Fraction:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy


@dataclass(frozen=True)
class Disk:
    id: int
    center: Point
    radius: Fraction


class DisjointnessMode(Enum):
    """How centre-disjointness of two selected disks is interpreted.

    ``MAX`` requires ``dist(p_i, p_j) >= max(R_i, R_j)``: neither aggregate
    disk contains the other's centre.  ``SUM`` requires
    ``dist(p_i, p_j) >= R_i + R_j``: the aggregate disks are fully disjoint.
    ``MAX`` is the default used throughout the solvers and reductions.
    """

    MAX = "max"
    SUM = "sum"


class Instance:
    """An immutable set of disks with ids ``1..n`` plus cached geometry."""

    def __init__(self, disks: Iterable[Disk]):
        disks = tuple(sorted(disks, key=lambda d: d.id))
        ids = [d.id for d in disks]
        if ids != list(range(1, len(disks) + 1)):
            raise FormatError(f"disk ids must be exactly 1..n, got {ids}")
        for d in disks:
            if d.radius <= 0:
                raise FormatError(f"disk {d.id} has non-positive radius")
        self.disks = disks
        self.n = len(disks)
        self._dist2: dict[tuple[int, int], Fraction] = {}
        self._neighbors: dict[int, tuple[int, ...]] = {}

    def disk(self, i: int) -> Disk:
        return self.disks[i - 1]

    def radius(self, i: int) -> Fraction:
        return self.disks[i - 1].radius

    def center(self, i: int) -> Point:
        return self.disks[i - 1].center

    def dist2(self, i: int, j: int) -> Fraction:
        if i > j:
            i, j = j, i
        key = (i, j)
        cached = self._dist2.get(key)
        if cached is None:
            cached = self.disks[i - 1].center.dist2(self.disks[j - 1].center)
            self._dist2[key] = cached
        return cached

    def neighbor_sequence(self, i: int) -> tuple[int, ...]:
        seq = self._neighbors.get(i)
        if seq is None:
            others = [j for j in range(1, self.n + 1) if j != i]
            others.sort(key=lambda j: (self.dist2(i, j), j))
            seq = tuple(others)
            self._neighbors[i] = seq
        return seq

    def __eq__(self, other) -> bool:
        return isinstance(other, Instance) and self.disks == other.disks

    def __hash__(self) -> int:
        return hash(self.disks)

    def __repr__(self) -> str:
        return f"Instance(n={self.n})"


def neighbor_sequence(instance: Instance, i: int) -> tuple[int, ...]:
    """Other disks ordered by increasing centre distance; ties by id."""
    return instance.neighbor_sequence(i)


class Assignment:
    """A total self-map of disk ids.  Disk ``i`` is selected iff ``φ(i) == i``."""

    def __init__(self, target: Mapping[int, int] | Sequence[int]):
        if isinstance(target, Mapping):
            n = len(target)
            if sorted(target) != list(range(1, n + 1)):
                raise FormatError("assignment keys must be exactly 1..n")
            tup = tuple(target[i] for i in range(1, n + 1))
        else:
            tup = tuple(target)
            n = len(tup)
        for t in tup:
            if not isinstance(t, int) or not (1 <= t <= n):
                raise FormatError(f"assignment target {t!r} out of range 1..{n}")
        self.target = tup
        self.n = n

    def __call__(self, i: int) -> int:
        return self.target[i - 1]

    def is_selected(self, i: int) -> bool:
        return self.target[i - 1] == i

    def selected(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.target[i - 1] == i)

    def merged_into(self, i: int) -> tuple[int, ...]:
        return tuple(
            j for j in range(1, self.n + 1) if j != i and self.target[j - 1] == i
        )

    def is_idempotent(self) -> bool:
        return all(self.target[t - 1] == t for t in self.target)

    def as_dict(self) -> dict[int, int]:
        return {i: t for i, t in enumerate(self.target, start=1)}

    def __eq__(self, other) -> bool:
        return isinstance(other, Assignment) and self.target == other.target

    def __hash__(self) -> int:
        return hash(self.target)

    def __repr__(self) -> str:
        return f"Assignment({self.target})"


def cardinality(assignment: Assignment) -> int:
    """Number of selected disks."""
    return len(assignment.selected())


def aggregate_radius(instance: Instance, assignment: Assignment, i: int) -> Fraction:
    """Sum of the radii of all disks mapped to ``i`` (including ``i`` itself
    when it is selected)."""
    return sum(
        (instance.radius(j) for j in range(1, instance.n + 1) if assignment(j) == i),
        Fraction(0),
    )


def prefix_aggregate_radius(instance: Instance, i: int, j: int) -> Fraction:
    """Radius of disk ``i`` after absorbing the first ``j`` neighbours."""
    if not (0 <= j <= instance.n - 1):
        raise ValueError(f"prefix length {j} out of range 0..{instance.n - 1}")
    seq = instance.neighbor_sequence(i)
    total = instance.radius(i)
    for k in range(j):
        total += instance.radius(seq[k])
    return total


@dataclass
class VerificationReport:
    ok: bool
    cardinality: int
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _check_shape(instance: Instance, assignment: Assignment,
                 violations: list[str]) -> bool:
    if assignment.n != instance.n:
        violations.append(
            f"assignment covers {assignment.n} disks, instance has {instance.n}"
        )
        return False
    ok = True
    for i in range(1, instance.n + 1):
        t = assignment(i)
        if assignment(t) != t:
            violations.append(f"not idempotent: {i} -> {t} -> {assignment(t)}")
            ok = False
    return ok


def _check_disjoint(instance: Instance, assignment: Assignment,
                    mode: DisjointnessMode, violations: list[str]) -> None:
    selected = assignment.selected()
    agg = {i: aggregate_radius(instance, assignment, i) for i in selected}
    for a in range(len(selected)):
        for b in range(a + 1, len(selected)):
            i, j = selected[a], selected[b]
            d2 = instance.dist2(i, j)
            if mode is DisjointnessMode.MAX:
                bound = max(agg[i], agg[j])
            else:
                bound = agg[i] + agg[j]
            if d2 < bound * bound:
                violations.append(
                    f"selected disks {i} and {j} are not centre-disjoint "
                    f"({mode.value} rule)"
                )


def verify_proper(instance: Instance, assignment: Assignment,
                  mode: DisjointnessMode = DisjointnessMode.MAX,
                  ) -> VerificationReport:
    """Check the strict (prefix-ordered) merging rules.

    For every selected disk, the set of disks merged into it must be exactly
    a prefix of its neighbour sequence; walking that prefix in order, each
    centre must lie strictly inside the aggregate disk accumulated so far;
    and all selected pairs must be centre-disjoint under ``mode``.
    """
    violations: list[str] = []
    if not _check_shape(instance, assignment, violations):
        return VerificationReport(False, 0, violations)

    for i in assignment.selected():
        members = set(assignment.merged_into(i))
        seq = instance.neighbor_sequence(i)
        prefix = seq[: len(members)]
        if set(prefix) != members:
            violations.append(
                f"disks merged into {i} are not a neighbour-sequence prefix"
            )
            continue
        reach = instance.radius(i)
        for j in prefix:
            if instance.dist2(i, j) >= reach * reach:
                violations.append(
                    f"disk {j} is out of reach of disk {i} when merged"
                )
                break
            reach += instance.radius(j)

    _check_disjoint(instance, assignment, mode, violations)
    ok = not violations
    return VerificationReport(ok, cardinality(assignment), violations)


def verify_uproper(instance: Instance, assignment: Assignment,
                   mode: DisjointnessMode = DisjointnessMode.MAX,
                   ) -> VerificationReport:
    """Check the relaxed merging rules.

    The merged set of a selected disk may be arbitrary; its members, taken
    in increasing distance order (ties by id), must each lie within
    (non-strictly) the aggregate radius accumulated from the previous
    members.  Centre-disjointness of selected pairs still applies.
    """
    violations: list[str] = []
    if not _check_shape(instance, assignment, violations):
        return VerificationReport(False, 0, violations)

    for i in assignment.selected():
        members = sorted(assignment.merged_into(i),
                         key=lambda j: (instance.dist2(i, j), j))
        reach = instance.radius(i)
        for j in members:
            if instance.dist2(i, j) > reach * reach:
                violations.append(
                    f"disk {j} is out of reach of disk {i} when merged (relaxed)"
                )
                break
            reach += instance.radius(j)

    _check_disjoint(instance, assignment, mode, violations)
    ok = not violations
    return VerificationReport(ok, cardinality(assignment), violations)
