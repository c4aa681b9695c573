"""Slow independent reimplementations used to cross-check the package.

Everything here quantifies literally over the relevant family; nothing
reuses the cached kernels, the reach index, or the single-containment
rewrites from the package.
"""

from semitop.semi import SemiAnalysis
from semitop.spaces import FiniteSpace, space_from_masks

_LETTERS = "abcdefghijklmnopqrst"


def interior_oracle(space: FiniteSpace, a: int) -> int:
    acc = 0
    for o in space.opens:
        if o & a == o:
            acc |= o
    return acc


def closure_oracle(space: FiniteSpace, a: int) -> int:
    acc = space.full
    for o in space.opens:
        f = space.full ^ o
        if f & a == a:
            acc &= f
    return acc


def semi_open_oracle(space: FiniteSpace, a: int) -> bool:
    """Open witness form: some open O with O inside a inside Cl(O)."""
    for o in space.opens:
        if o & a == o and a & ~closure_oracle(space, o) == 0:
            return True
    return False


def semi_kernel_oracle(an: SemiAnalysis, b: int) -> int:
    acc = an.space.full
    for o in an.semi_open:
        if o & b == b:
            acc &= o
    return acc


def semi_closure_oracle(an: SemiAnalysis, b: int) -> int:
    acc = an.space.full
    for f in an.semi_closed:
        if f & b == b:
            acc &= f
    return acc


def v_s_oracle(an: SemiAnalysis, b: int) -> int:
    acc = 0
    for f in an.semi_closed:
        if f & b == f:
            acc |= f
    return acc


def sg_closed_oracle(an: SemiAnalysis, b: int) -> bool:
    """sCl(b) lands inside every semi-open superset of b."""
    scl = semi_closure_oracle(an, b)
    for o in an.semi_open:
        if o & b == b and scl & ~o:
            return False
    return True


def g_lambda_oracle(an: SemiAnalysis, b: int) -> bool:
    """Kernel of b lands inside every semi-closed superset of b."""
    kern = semi_kernel_oracle(an, b)
    for f in an.semi_closed:
        if f & b == b and kern & ~f:
            return False
    return True


def g_v_oracle(an: SemiAnalysis, b: int) -> bool:
    return g_lambda_oracle(an, an.space.full ^ b)


def naive_is_topology(masks, n: int) -> bool:
    """Axioms checked directly on a candidate family."""
    fam = set(masks)
    if 0 not in fam or (1 << n) - 1 not in fam:
        return False
    for a in fam:
        for b in fam:
            if a | b not in fam or a & b not in fam:
                return False
    return True


def random_space(rng, n: int, name=None) -> FiniteSpace:
    """Random topology via a random reachability preorder.

    Each point gets a few random out-neighbours; the transitive closure
    of that relation is the specialization preorder and the open sets
    are its up-closed sets.
    """
    nbhd = []
    for x in range(n):
        m = 1 << x
        for _ in range(rng.randrange(3)):
            m |= 1 << rng.randrange(n)
        nbhd.append(m)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = nbhd[x]
            for y in range(n):
                if nbhd[x] >> y & 1:
                    acc |= nbhd[y]
            if acc != nbhd[x]:
                nbhd[x] = acc
                changed = True
    opens = []
    for a in range(1 << n):
        for x in range(n):
            if a >> x & 1 and nbhd[x] & ~a:
                break
        else:
            opens.append(a)
    return space_from_masks(_LETTERS[:n], opens, name=name)


def random_lattice_space(rng, n: int, name=None) -> FiniteSpace:
    """Random topology by closing random generator masks under cup/cap."""
    fam = {0, (1 << n) - 1}
    for _ in range(rng.randrange(1, n + 2)):
        pending = [rng.randrange(1 << n)]
        while pending:
            cur = pending.pop()
            if cur in fam:
                continue
            for m in list(fam):
                for made in (cur | m, cur & m):
                    if made not in fam and made != cur:
                        pending.append(made)
            fam.add(cur)
    return space_from_masks(_LETTERS[:n], sorted(fam), name=name)
