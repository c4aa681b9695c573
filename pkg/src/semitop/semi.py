"""Semi-open set machinery for one finite space.

`SemiAnalysis` scans all 2**n subsets once with the interior/closure
test A subset-of Cl(Int(A)) and keeps the semi-open family SO, its
complement family SC, and the per-point semi-kernels.  Per-query
operators follow their set definitions:

    semi_closure(B) = intersection of the semi-closed supersets of B
    semi_kernel(B)  = union of the cached point kernels over B
    v_s(B)          = union of the semi-closed subsets of B

Family-wide scans on larger spaces go through a subset-lattice reach
index instead of the quadratic loops; the index answers "is some
semi-closed set wedged between here and there" in O(n) per subset and
is checked against the plain loops by the test suite.
"""

from dataclasses import dataclass

from .spaces import FiniteSpace, SetFamily, iter_points

# past this many (subset, family-member) probes a bulk scan switches to
# the reach index
_BULK_LIMIT = 1 << 21

_pattern_cache: dict = {}


def _subset_patterns(n: int) -> list:
    """pattern[i]: big-int bitset of the mask indices with bit i clear."""
    pats = _pattern_cache.get(n)
    if pats is None:
        size = 1 << n
        ones = (1 << size) - 1
        pats = []
        for i in range(n):
            period = 2 << i
            block = (1 << (1 << i)) - 1
            pats.append(ones // ((1 << period) - 1) * block)
        _pattern_cache[n] = pats
    return pats


def _spread(marks: int, n: int, upward: bool) -> int:
    """Close a set of lattice positions under adding (or removing) points.

    `marks` has bit m set for every seed mask m; the result marks every
    superset (upward) or subset (downward) of a seed.
    """
    pats = _subset_patterns(n)
    for i in range(n):
        step = 1 << i
        if upward:
            marks |= (marks & pats[i]) << step
        else:
            marks |= (marks >> step) & pats[i]
    return marks


def _seed_bits(masks, n: int) -> int:
    size = 1 << n
    buf = bytearray((size + 7) // 8)
    for m in masks:
        buf[m >> 3] |= 1 << (m & 7)
    return int.from_bytes(bytes(buf), "little")


class _ReachIndex:
    """Per-point reachability bitsets over the subset lattice.

    up[x] answers: does some semi-closed set containing x sit inside B?
    down[y] answers: does some semi-closed superset of B avoid y?
    Both are what the dual operator and the semi-closure quantify over.
    """

    __slots__ = ("up", "down")

    def __init__(self, semi_closed, n: int):
        size = 1 << n
        nbytes = (size + 7) // 8
        self.up = []
        self.down = []
        for x in range(n):
            bit = 1 << x
            with_x = [f for f in semi_closed if f & bit]
            without_x = [f for f in semi_closed if not f & bit]
            grown = _spread(_seed_bits(with_x, n), n, upward=True)
            shrunk = _spread(_seed_bits(without_x, n), n, upward=False)
            self.up.append(grown.to_bytes(nbytes, "little"))
            self.down.append(shrunk.to_bytes(nbytes, "little"))

    @staticmethod
    def _test(table: bytes, m: int) -> int:
        return table[m >> 3] >> (m & 7) & 1


class SemiAnalysis:
    """Semi-open structure of a fixed space."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        n = space.n
        full = space.full
        so = []
        for a in range(1 << n):
            if a & ~space.closure(space.interior(a)) == 0:
                so.append(a)
        self.semi_open = SetFamily(so)
        self.semi_closed = SetFamily(full ^ a for a in so)
        kernels = [full] * n
        for o in so:
            for x in iter_points(o):
                kernels[x] &= o
        self.point_kernels = tuple(kernels)
        self._reach = None

    # -- per-query operators ------------------------------------------

    def semi_closure(self, b: int) -> int:
        """Smallest semi-closed superset of b."""
        self.space.check_mask(b)
        acc = self.space.full
        for f in self.semi_closed:
            if f & b == b:
                acc &= f
                if acc == b:
                    break
        return acc

    def semi_kernel(self, b: int) -> int:
        """Intersection of the semi-open supersets of b, via point kernels."""
        self.space.check_mask(b)
        acc = 0
        for x in iter_points(b):
            acc |= self.point_kernels[x]
        return acc

    def v_s(self, b: int) -> int:
        """Union of the semi-closed subsets of b."""
        self.space.check_mask(b)
        acc = 0
        for f in self.semi_closed:
            if f & b == f:
                acc |= f
        return acc

    def is_lambda_s_set(self, b: int) -> bool:
        return self.semi_kernel(b) == b

    def is_v_s_set(self, b: int) -> bool:
        return self.v_s(b) == b

    # -- reach-index routes -------------------------------------------

    def build_reach_index(self) -> None:
        if self._reach is None:
            self._reach = _ReachIndex(self.semi_closed.members, self.space.n)

    def _bulk(self) -> bool:
        """Whether family-wide scans should use the reach index."""
        if self._reach is not None:
            return True
        if (1 << self.space.n) * len(self.semi_closed) > _BULK_LIMIT:
            self.build_reach_index()
            return True
        return False

    def semi_closure_indexed(self, b: int) -> int:
        self.build_reach_index()
        test = _ReachIndex._test
        out = b
        for y in range(self.space.n):
            if not b >> y & 1 and not test(self._reach.down[y], b):
                out |= 1 << y
        return out

    def v_s_indexed(self, b: int) -> int:
        self.build_reach_index()
        test = _ReachIndex._test
        out = 0
        for x in iter_points(b):
            if test(self._reach.up[x], b):
                out |= 1 << x
        return out

    def _scl(self, b: int) -> int:
        return self.semi_closure_indexed(b) if self._bulk() else self.semi_closure(b)

    def _vs(self, b: int) -> int:
        return self.v_s_indexed(b) if self._bulk() else self.v_s(b)

    # -- fixed-point families -----------------------------------------

    def lambda_s_sets(self) -> SetFamily:
        """All subsets equal to their semi-kernel."""
        kern = self.semi_kernel
        return SetFamily(b for b in range(1 << self.space.n) if kern(b) == b)

    def v_s_sets(self) -> SetFamily:
        """All subsets equal to the union of their semi-closed subsets."""
        if self._bulk():
            vs = self.v_s_indexed
        else:
            vs = self.v_s
        return SetFamily(b for b in range(1 << self.space.n) if vs(b) == b)


def semi_open_family(space: FiniteSpace) -> SetFamily:
    return SemiAnalysis(space).semi_open


@dataclass(frozen=True)
class SetClass:
    """Openness grades of one subset."""

    preopen: bool
    beta_open: bool
    nowhere_dense: bool
    regular_open: bool
    simply_open: bool


def set_class(space: FiniteSpace, a: int) -> SetClass:
    """Classify `a` by the usual interior/closure composites.

    simply_open uses the operational form: the part of `a` outside its
    interior is nowhere dense.
    """
    space.check_mask(a)
    cl_a = space.closure(a)
    int_cl = space.interior(cl_a)
    rest = a & ~space.interior(a)
    return SetClass(
        preopen=a & ~int_cl == 0,
        beta_open=a & ~space.closure(int_cl) == 0,
        nowhere_dense=int_cl == 0,
        regular_open=a == int_cl,
        simply_open=space.interior(space.closure(rest)) == 0,
    )
