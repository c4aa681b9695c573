"""Generalized set classes built on the semi-kernel and its dual.

A subset B is g.Lambda_s when its semi-kernel sits inside every
semi-closed superset of B; since those supersets are closed under
intersection, that is the single containment

    semi_kernel(B) subset-of semi_closure(B)

and the sg-closed condition is the mirror image

    semi_closure(B) subset-of semi_kernel(B)

(a set is inside every semi-open superset of B iff it is inside their
intersection).  B is g.V_s when its complement is g.Lambda_s; the
second route through the dual operator is evaluated as well and the two
must agree.
"""

from dataclasses import dataclass

from .semi import SemiAnalysis
from .spaces import FiniteSpace, SetFamily


@dataclass(frozen=True)
class GeneralizedFamilies:
    """The three generalized families of one space."""

    d_lambda: SetFamily
    d_v: SetFamily
    sg_closed: SetFamily


def is_sg_closed(an: SemiAnalysis, b: int) -> bool:
    """Semi-closure of b inside every semi-open superset of b."""
    scl = an.semi_closure(b)
    return scl & an.semi_kernel(b) == scl


def is_g_lambda_s(an: SemiAnalysis, b: int) -> bool:
    """Semi-kernel of b inside every semi-closed superset of b."""
    kern = an.semi_kernel(b)
    return kern & an.semi_closure(b) == kern


def is_g_v_s(an: SemiAnalysis, b: int) -> bool:
    """Complement is g.Lambda_s; checked against the semi-open route.

    The second evaluation asks that every semi-open subset of b land
    inside v_s(b).  Both answers are computed on every call and must
    agree.
    """
    by_complement = is_g_lambda_s(an, an.space.complement(b))
    vs = an.v_s(b)
    by_semi_open = True
    for u in an.semi_open:
        if u & b == u and u & vs != u:
            by_semi_open = False
            break
    assert by_complement == by_semi_open, \
        f"g.V_s routes disagree on {an.space.render(b)}"
    return by_complement


def generalized_families(an: SemiAnalysis) -> GeneralizedFamilies:
    """Scan every subset once; the dual family is taken by complements."""
    space = an.space
    full = space.full
    scl = an._scl
    kern = an.semi_kernel
    d_lambda = []
    sg = []
    for b in range(1 << space.n):
        s = scl(b)
        k = kern(b)
        if k & s == k:
            d_lambda.append(b)
        if s & k == s:
            sg.append(b)
    return GeneralizedFamilies(
        d_lambda=SetFamily(d_lambda),
        d_v=SetFamily(full ^ b for b in d_lambda),
        sg_closed=SetFamily(sg),
    )


def derived_set(space: FiniteSpace) -> int:
    """Points that stay in the closure of the rest of the space."""
    out = 0
    for x in range(space.n):
        bit = 1 << x
        if space.closure(space.full ^ bit) & bit:
            out |= bit
    return out


def g_v_s_singletons(an: SemiAnalysis) -> int:
    """Mask of the points whose singleton is a g.V_s-set."""
    out = 0
    for x in range(an.space.n):
        if is_g_v_s(an, 1 << x):
            out |= 1 << x
    return out
