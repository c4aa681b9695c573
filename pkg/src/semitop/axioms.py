"""Separation axiom checkers.

Each axiom is decided by its own definition; the textbook equivalences
between them are left to the law registry.  Every `*_witness` helper
returns the first counterexample in canonical order (ascending point
index, then ascending subset mask) or None, and the `is_*` predicate is
just "no witness".
"""

from dataclasses import dataclass, field

from .generalized import GeneralizedFamilies
from .semi import SemiAnalysis
from .spaces import FiniteSpace, iter_points

AXIOM_KEYS = ("t1", "r0", "semi_t1", "semi_r0", "semi_t_half")


@dataclass(frozen=True)
class AxiomProfile:
    """The five axiom verdicts plus a rendered witness per failure."""

    t1: bool
    r0: bool
    semi_t1: bool
    semi_r0: bool
    semi_t_half: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def items(self):
        return [(k, getattr(self, k)) for k in AXIOM_KEYS]


def t1_witness(space: FiniteSpace):
    """First point whose singleton is not closed."""
    for x in range(space.n):
        if space.closure(1 << x) != 1 << x:
            return x
    return None


def is_t1(space: FiniteSpace) -> bool:
    return t1_witness(space) is None


def r0_witness(space: FiniteSpace):
    """First (open, point) with the point's closure escaping the open."""
    for o in space.opens:
        for x in iter_points(o):
            if space.closure(1 << x) & ~o:
                return o, x
    return None


def is_r0(space: FiniteSpace) -> bool:
    return r0_witness(space) is None


def semi_t1_witness(an: SemiAnalysis):
    """First point whose singleton is not semi-closed."""
    for x in range(an.space.n):
        if 1 << x not in an.semi_closed:
            return x
    return None


def is_semi_t1(an: SemiAnalysis) -> bool:
    return semi_t1_witness(an) is None


def semi_r0_witness(an: SemiAnalysis):
    """First (semi-open, point) with the semi-closure escaping the set."""
    scl = [an.semi_closure(1 << x) for x in range(an.space.n)]
    for o in an.semi_open:
        for x in iter_points(o):
            if scl[x] & ~o:
                return o, x
    return None


def is_semi_r0(an: SemiAnalysis) -> bool:
    return semi_r0_witness(an) is None


def semi_t_half_witness(an: SemiAnalysis, fams: GeneralizedFamilies):
    """First sg-closed subset that is not semi-closed."""
    for b in fams.sg_closed:
        if b not in an.semi_closed:
            return b
    return None


def is_semi_t_half(an: SemiAnalysis, fams: GeneralizedFamilies) -> bool:
    return semi_t_half_witness(an, fams) is None


def axiom_profile(space: FiniteSpace,
                  analysis: SemiAnalysis | None = None,
                  families: GeneralizedFamilies | None = None) -> AxiomProfile:
    """Run all five axioms, collecting a witness for each failure."""
    from .generalized import generalized_families

    an = analysis if analysis is not None else SemiAnalysis(space)
    fams = families if families is not None else generalized_families(an)
    witnesses = {}

    w = t1_witness(space)
    t1 = w is None
    if w is not None:
        witnesses["t1"] = (f"Cl({space.render(1 << w)}) = "
                           f"{space.render(space.closure(1 << w))}")

    w = r0_witness(space)
    r0 = w is None
    if w is not None:
        o, x = w
        witnesses["r0"] = (f"open {space.render(o)} contains {space.names[x]} "
                           f"but not Cl({space.render(1 << x)}) = "
                           f"{space.render(space.closure(1 << x))}")

    w = semi_t1_witness(an)
    semi_t1 = w is None
    if w is not None:
        witnesses["semi_t1"] = f"{space.render(1 << w)} is not semi-closed"

    w = semi_r0_witness(an)
    semi_r0 = w is None
    if w is not None:
        o, x = w
        witnesses["semi_r0"] = (f"semi-open {space.render(o)} contains "
                                f"{space.names[x]} but not sCl({space.render(1 << x)}) = "
                                f"{space.render(an.semi_closure(1 << x))}")

    w = semi_t_half_witness(an, fams)
    semi_t_half = w is None
    if w is not None:
        witnesses["semi_t_half"] = (f"{space.render(w)} is sg-closed "
                                    "but not semi-closed")

    return AxiomProfile(t1, r0, semi_t1, semi_r0, semi_t_half, witnesses)
