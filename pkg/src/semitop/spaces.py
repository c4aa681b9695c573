"""Finite topological spaces on bitmask subsets.

A space has points 0..n-1 carrying string labels; a subset of the
carrier is an int whose bit i is set iff point i belongs to it.
Families of subsets (the topology, semi-open sets, ...) are `SetFamily`
values: deduplicated mask tuples in ascending numeric order.  That
ascending order is the canonical order used everywhere for witness
selection, rendering and reports.

Every finite topology is Alexandrov: each point has a smallest open
neighbourhood, and the table of those neighbourhoods is fixed at
validation time.  Interior and closure are then O(n) mask loops:

    interior(A) = {x : min_nbhd[x] subset of A}
    closure(A)  = complement(interior(complement(A)))
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_POINTS = 20

_LABEL_FORBIDDEN = set(" \t\r\n,{}#:")


class SpaceError(Exception):
    """Base class for invalid space construction or lookup."""


class EmptyCarrier(SpaceError):
    pass


class DuplicateLabel(SpaceError):
    pass


class UnknownLabel(SpaceError):
    pass


class TooManyPoints(SpaceError):
    pass


class MissingEmptyOrUniverse(SpaceError):
    pass


class _NotClosed(SpaceError):
    """Family closure failure; carries the first offending pair of masks."""

    def __init__(self, message: str, pair: tuple):
        super().__init__(message)
        self.pair = pair


class NotClosedUnderUnion(_NotClosed):
    pass


class NotClosedUnderIntersection(_NotClosed):
    pass


def iter_points(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Every subset of `mask`, descending in numeric value, ending at 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SetFamily:
    """Deduplicated collection of subset masks, ascending, O(1) membership."""

    __slots__ = ("members", "_index")

    def __init__(self, masks: Iterable[int]):
        self.members = tuple(sorted(set(masks)))
        self._index = frozenset(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self._index

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, SetFamily) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"SetFamily({list(self.members)!r})"


@dataclass(frozen=True)
class FiniteSpace:
    """A validated finite topological space.

    Construct through `build_space` (label lists) or `space_from_masks`;
    both validate the family and precompute the minimal open
    neighbourhood of every point.  `name` is a catalog id or file path
    used in reports and never takes part in equality.
    """

    names: tuple
    opens: SetFamily
    min_nbhd: tuple
    name: str | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def check_mask(self, a: int) -> None:
        if a < 0 or a > self.full:
            raise ValueError(f"mask {a} out of range for {self.n} points")

    def complement(self, a: int) -> int:
        self.check_mask(a)
        return self.full ^ a

    def interior(self, a: int) -> int:
        """Largest open subset of `a`."""
        self.check_mask(a)
        out = 0
        for x, m in enumerate(self.min_nbhd):
            if m & ~a == 0:
                out |= 1 << x
        return out

    def closure(self, a: int) -> int:
        """Smallest closed superset of `a`."""
        return self.full ^ self.interior(self.full ^ a)

    def minimal_neighborhood(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise ValueError(f"point index {x} out of range")
        return self.min_nbhd[x]

    def is_open(self, a: int) -> bool:
        self.check_mask(a)
        return a in self.opens

    def is_closed(self, a: int) -> bool:
        return (self.full ^ a) in self.opens

    def closed_family(self) -> SetFamily:
        return SetFamily(self.full ^ o for o in self.opens)

    def subspace(self, s: int) -> "FiniteSpace":
        """Relative topology on the points of `s`, original labels kept."""
        self.check_mask(s)
        if s == 0:
            raise EmptyCarrier("subspace carrier is empty")
        keep = list(iter_points(s))
        pos = {old: new for new, old in enumerate(keep)}
        names = tuple(self.names[i] for i in keep)

        def compress(mask):
            out = 0
            for i in iter_points(mask & s):
                out |= 1 << pos[i]
            return out

        return space_from_masks(names, (compress(o) for o in self.opens))

    def mask_of(self, labels: Iterable[str]) -> int:
        out = 0
        for lab in labels:
            try:
                out |= 1 << self.names.index(lab)
            except ValueError:
                raise UnknownLabel(f"unknown point label {lab!r}") from None
        return out

    def labels_of(self, a: int) -> tuple:
        self.check_mask(a)
        return tuple(self.names[i] for i in iter_points(a))

    def render(self, a: int) -> str:
        """Subset as text: empty set and carrier get their usual symbols."""
        if a == 0:
            return "∅"
        if a == self.full:
            return "X"
        return "{" + ",".join(self.labels_of(a)) + "}"

    def render_family(self, masks: Iterable[int]) -> str:
        return "{" + ",".join(self.render(m) for m in masks) + "}"

    def describe(self) -> str:
        if self.name is not None:
            return self.name
        pts = ",".join(self.names)
        return f"points={{{pts}}} opens={self.render_family(self.opens)}"


def _validate_names(names: tuple, max_points: int) -> None:
    if len(names) == 0:
        raise EmptyCarrier("a space needs at least one point")
    if len(names) > max_points:
        raise TooManyPoints(f"{len(names)} points exceeds the limit of {max_points}")
    seen = set()
    for lab in names:
        if not isinstance(lab, str) or not lab or _LABEL_FORBIDDEN & set(lab):
            raise ValueError(f"bad point label {lab!r}")
        if lab in seen:
            raise DuplicateLabel(f"duplicate point label {lab!r}")
        seen.add(lab)


def _min_table(members, n: int) -> list:
    full = (1 << n) - 1
    mins = [full] * n
    for m in members:
        for x in iter_points(m):
            mins[x] &= m
    return mins


def _pairwise_witness(members, index):
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if (a | b) not in index:
                return ("union", a, b)
            if (a & b) not in index:
                return ("intersection", a, b)
    return None


def _closure_witness(members, n: int):
    """First pair breaking union/intersection closure, or None.

    For large families the quadratic pair scan is screened first by the
    Alexandrov criterion: a family containing the empty set and the
    carrier is closed under pairwise union and intersection iff it
    equals the family of sets saturated under its own minimal
    neighbourhood table.  The pair scan then runs only to locate a
    witness.
    """
    index = frozenset(members)
    if len(members) ** 2 <= (1 << n) * max(n, 1) * 4:
        return _pairwise_witness(members, index)
    mins = _min_table(members, n)
    count = 0
    for m in range(1 << n):
        ok = True
        for x in iter_points(m):
            if mins[x] & ~m:
                ok = False
                break
        if ok:
            count += 1
    if count == len(members):
        return None
    return _pairwise_witness(members, index)


def space_from_masks(names: Iterable[str], masks: Iterable[int], *,
                     max_points: int = MAX_POINTS,
                     name: str | None = None) -> FiniteSpace:
    """Validate a topology given as subset masks and build the space."""
    names = tuple(names)
    _validate_names(names, max_points)
    n = len(names)
    full = (1 << n) - 1
    fam = SetFamily(masks)
    for m in fam:
        if m < 0 or m > full:
            raise ValueError(f"mask {m} out of range for {n} points")
    if 0 not in fam or full not in fam:
        raise MissingEmptyOrUniverse(
            "the topology must contain the empty set and the whole carrier")

    def render(mask):
        if mask == 0:
            return "∅"
        return "{" + ",".join(names[i] for i in iter_points(mask)) + "}"

    hit = _closure_witness(fam.members, n)
    if hit is not None:
        kind, a, b = hit
        msg = f"{render(a)} and {render(b)} are opens but their {kind} is not"
        if kind == "union":
            raise NotClosedUnderUnion(msg, (a, b))
        raise NotClosedUnderIntersection(msg, (a, b))
    mins = _min_table(fam.members, n)
    return FiniteSpace(names, fam, tuple(mins), name)


def build_space(names: Iterable[str], opens: Iterable[Iterable[str]], *,
                max_points: int = MAX_POINTS,
                name: str | None = None) -> FiniteSpace:
    """Build a space from point labels and opens given as label lists."""
    names = tuple(names)
    _validate_names(names, max_points)
    pos = {lab: i for i, lab in enumerate(names)}
    masks = []
    for subset in opens:
        m = 0
        for lab in subset:
            if lab not in pos:
                raise UnknownLabel(f"unknown point label {lab!r} in an open set")
            m |= 1 << pos[lab]
        masks.append(m)
    return space_from_masks(names, masks, max_points=max_points, name=name)
