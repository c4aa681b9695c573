"""Ready-made spaces: named fixtures, digital-line windows, and the
exhaustive enumeration of labeled topologies on up to five points.

Named ids are reserved words, never file paths: the fixed fixtures
("e1", "e33", "e3a", "sierpinski") plus the parametric families
"discrete:N", "indiscrete:N" and "khalimsky:LO:HI".
"""

from dataclasses import dataclass

from .spaces import (MAX_POINTS, FiniteSpace, SpaceError, TooManyPoints,
                     iter_points, space_from_masks)

_LETTERS = "abcdefghijklmnopqrst"


class UnknownId(SpaceError):
    pass


class EmptyWindow(SpaceError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    space: FiniteSpace


def _letters(n: int) -> tuple:
    if n > len(_LETTERS):
        raise TooManyPoints(f"no label scheme for {n} points")
    return tuple(_LETTERS[:n])


def _fixed(sid: str) -> FiniteSpace | None:
    if sid == "e1":
        # three points; the only proper opens are {a} and {b,c}
        return space_from_masks("abc", [0b000, 0b001, 0b110, 0b111], name="e1")
    if sid == "e33":
        return space_from_masks("abc", [0b000, 0b011, 0b111], name="e33")
    if sid == "e3a":
        return space_from_masks("abc", [0b000, 0b001, 0b010, 0b011, 0b111],
                                name="e3a")
    if sid == "sierpinski":
        return space_from_masks("ab", [0b00, 0b01, 0b11], name="sierpinski")
    return None


def discrete_space(n: int, *, max_points: int = MAX_POINTS) -> FiniteSpace:
    names = _letters(n)
    return space_from_masks(names, range(1 << n), max_points=max_points,
                            name=f"discrete:{n}")


def indiscrete_space(n: int, *, max_points: int = MAX_POINTS) -> FiniteSpace:
    names = _letters(n)
    return space_from_masks(names, [0, (1 << n) - 1], max_points=max_points,
                            name=f"indiscrete:{n}")


def named_space(sid: str, *, max_points: int = MAX_POINTS) -> FiniteSpace:
    """Resolve a reserved space id."""
    space = _fixed(sid)
    if space is not None:
        return space
    parts = sid.split(":")
    try:
        if len(parts) == 2 and parts[0] in ("discrete", "indiscrete"):
            n = int(parts[1])
            if n < 1:
                raise UnknownId(f"bad point count in {sid!r}")
            maker = discrete_space if parts[0] == "discrete" else indiscrete_space
            return maker(n, max_points=max_points)
        if len(parts) == 3 and parts[0] == "khalimsky":
            lo, hi = int(parts[1]), int(parts[2])
            return khalimsky_window(lo, hi, max_points=max_points).space
    except ValueError:
        raise UnknownId(f"unknown space id {sid!r}") from None
    raise UnknownId(f"unknown space id {sid!r}")


def is_named_id(sid: str) -> bool:
    try:
        named_space(sid)
    except UnknownId:
        return False
    except SpaceError:
        return True  # well-formed id, bad parameters
    return True


@dataclass(frozen=True)
class Window:
    """A finite stretch of the digital line with its subspace topology."""

    space: FiniteSpace
    lo: int
    hi: int
    boundary_warning: bool

    def mask_of_ints(self, ints) -> int:
        out = 0
        for i in ints:
            if not self.lo <= i <= self.hi:
                raise ValueError(f"{i} outside window [{self.lo},{self.hi}]")
            out |= 1 << (i - self.lo)
        return out


def khalimsky_window(lo: int, hi: int, *,
                     max_points: int = MAX_POINTS) -> Window:
    """Digital-line window [lo, hi].

    On the full line each odd point is open on its own and each even
    point 2n has {2n-1, 2n, 2n+1} as smallest neighbourhood; the window
    carries the subspace topology, so an even endpoint keeps only the
    truncated part of its cell.  `boundary_warning` flags that
    truncation.
    """
    if lo > hi:
        raise EmptyWindow(f"window [{lo},{hi}] has no points")
    w = hi - lo + 1
    if w > max_points:
        raise TooManyPoints(f"window [{lo},{hi}] has {w} points, limit {max_points}")
    names = tuple(str(i) for i in range(lo, hi + 1))
    mins = []
    for i in range(lo, hi + 1):
        if i % 2:
            cell = [i]
        else:
            cell = [j for j in (i - 1, i, i + 1) if lo <= j <= hi]
        mins.append(sum(1 << (j - lo) for j in cell))
    opens = []
    for m in range(1 << w):
        if all(mins[x] & ~m == 0 for x in iter_points(m)):
            opens.append(m)
    space = space_from_masks(names, opens, max_points=max_points,
                             name=f"khalimsky:{lo}:{hi}")
    return Window(space, lo, hi, boundary_warning=(lo % 2 == 0 or hi % 2 == 0))


# -- enumeration ------------------------------------------------------

def naive_topology_families(n: int) -> list:
    """Every topology on n labeled points by brute family filtering.

    Tries all 2**(2**n - 2) families containing the empty set and the
    carrier and keeps those closed under pairwise union and
    intersection.  Practical through n = 4; serves as the oracle for
    the table-driven generator.
    """
    if not 1 <= n <= 4:
        raise ValueError("naive filter is only practical for 1 <= n <= 4")
    full = (1 << n) - 1
    middles = list(range(1, full))
    out = []
    for choice in range(1 << len(middles)):
        members = [0, full]
        members += [middles[i] for i in iter_points(choice)]
        index = frozenset(members)
        ok = True
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if (a | b) not in index or (a & b) not in index:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(sorted(index)))
    out.sort()
    return out


def _table_families(n: int) -> list:
    """Topologies via minimal-neighbourhood tables.

    A table m assigns each point x a mask with x in m[x] such that
    y in m[x] implies m[y] subset-of m[x]; tables correspond one-to-one
    with topologies (opens = the m-saturated sets).  Depth-first search
    with early pruning of incompatible pairs.
    """
    candidates = [[m for m in range(1 << n) if m >> x & 1] for x in range(n)]
    table = [0] * n
    families = []

    def emit():
        opens = []
        for m in range(1 << n):
            if all(table[x] & ~m == 0 for x in iter_points(m)):
                opens.append(m)
        families.append(tuple(opens))

    def place(x):
        if x == n:
            emit()
            return
        for m in candidates[x]:
            ok = True
            for y in range(x):
                if m >> y & 1 and table[y] & ~m:
                    ok = False
                    break
                if table[y] >> x & 1 and m & ~table[y]:
                    ok = False
                    break
            if ok:
                table[x] = m
                place(x + 1)
        table[x] = 0

    place(0)
    families.sort()
    return families


def enumerate_topologies(n: int):
    """All labeled topologies on n points, ascending by opens tuple.

    The naive family filter is the implementation through n = 3; the
    table generator takes over for n = 4 and 5 and is held to the naive
    answer by the tests.
    """
    if not 1 <= n <= 5:
        raise TooManyPoints("enumeration supports 1 <= n <= 5")
    names = _letters(n)
    families = naive_topology_families(n) if n <= 3 else _table_families(n)
    for i, fam in enumerate(families):
        yield space_from_masks(names, fam, name=f"enum:{n}:{i}")


def catalog_entries() -> list:
    """The standard fixtures, one validated entry per id."""
    ids = [
        ("e1", "three points, opens generated by {a} and {b,c}"),
        ("e33", "three points, one proper open {a,b}"),
        ("e3a", "three points, opens generated by {a} and {b}"),
        ("sierpinski", "two points, one of them open"),
        ("discrete:2", "two isolated points"),
        ("discrete:3", "three isolated points"),
        ("indiscrete:2", "two points, no proper opens"),
        ("indiscrete:3", "three points, no proper opens"),
        ("khalimsky:-3:3", "digital-line window with odd endpoints"),
        ("khalimsky:-7:7", "wider digital-line window with odd endpoints"),
    ]
    return [CatalogEntry(sid, desc, named_space(sid)) for sid, desc in ids]
