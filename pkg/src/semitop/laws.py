"""Executable registry of checked claims about the semi-kernel
operators, their generalized set classes, and the low separation
axioms.

Every `Law` pairs a stable id with an anchor quoting the statement it
checks and a checker that exhaustively quantifies the statement over
one analysed space.  Checkers return None on success or a `_Fail`
carrying the first offending subsets/points in canonical mask order;
`run_suite` wraps failures into `Witness` records and aggregates a
deterministic `LawReport` over a stream of spaces.

A law whose statement quantifies over pairs of subsets is checked over
all ordered pairs plus the full subset family (finite associativity
extends pairs to arbitrary finite families); such laws only run on
spaces small enough for the quadratic scan, per-law `max_points`.

Disputed laws are claims the suite expects to fail: reproducing their
documented counterexample keeps the exit code at zero, while a run that
examines the documented space without any failure flags the dispute as
stale.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .axioms import axiom_profile
from .catalog import catalog_entries
from .generalized import derived_set, g_v_s_singletons, generalized_families
from .semi import SemiAnalysis, set_class
from .spaces import FiniteSpace, submasks

PAIR_CAP = 8      # laws quadratic in the subset count
FAMILY_CAP = 11   # laws pairing every subset with a family scan
SUBSET_CAP = 15   # laws linear-per-subset (times O(n))

#: operations the registry is expected to exercise, for coverage checks
OPERATION_NAMES = (
    "semi_open_family", "semi_closure", "semi_kernel", "v_s",
    "is_lambda_s_set", "is_v_s_set", "set_class",
    "is_sg_closed", "is_g_lambda_s", "is_g_v_s", "generalized_families",
    "derived_set", "g_v_s_singletons",
    "is_t1", "is_r0", "is_semi_t1", "is_semi_r0", "is_semi_t_half",
    "axiom_profile",
)


class _Fail(NamedTuple):
    subsets: tuple = ()
    points: tuple = ()
    message: str = ""


@dataclass(frozen=True)
class Witness:
    law_id: str
    space_name: str
    subsets: tuple
    points: tuple
    message: str
    space: FiniteSpace = field(compare=False, repr=False, default=None)
    subset_masks: tuple = field(compare=False, default=())

    def render(self) -> str:
        parts = [f"{self.law_id} @ {self.space_name}: {self.message}"]
        if self.subsets:
            parts.append("subsets " + ", ".join(self.subsets))
        if self.points:
            parts.append("points " + ", ".join(self.points))
        return "; ".join(parts)


@dataclass(frozen=True)
class Law:
    id: str
    anchor: str
    check: Callable
    status: str = "expected"          # or "disputed"
    max_points: int = SUBSET_CAP
    scope: Callable | None = None     # None: every space
    note: str = ""
    dispute_space: str | None = None
    covers: tuple = ()

    def applies(self, space: FiniteSpace) -> bool:
        return self.scope is None or self.scope(space)


class LawScopeError(Exception):
    """Law asked about a space outside its scope or size bound."""


class SpaceContext:
    """Everything the checkers need about one space, computed once."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        self.an = SemiAnalysis(space)
        self.fams = generalized_families(self.an)
        self.prof = axiom_profile(space, self.an, self.fams)
        n = space.n
        self.masks = range(1 << n)
        self.so = self.an.semi_open
        self.sc = self.an.semi_closed
        self.kern = [self.an.semi_kernel(m) for m in self.masks]
        self.lam_sets = frozenset(m for m in self.masks if self.kern[m] == m)
        if n <= FAMILY_CAP:
            self.vs = [self.an.v_s(m) for m in self.masks]
            self.scl = [self.an.semi_closure(m) for m in self.masks]
            self.vs_sets = frozenset(m for m in self.masks if self.vs[m] == m)
        else:
            self.vs = self.scl = self.vs_sets = None

    def comp(self, m: int) -> int:
        return self.space.full ^ m


# -- checkers: the semi-kernel and its dual ---------------------------

def _chk_3_2a(ctx):
    for b in ctx.masks:
        if b & ~ctx.kern[b]:
            return _Fail((b,), (), "subset escapes its semi-kernel")


def _chk_3_2b(ctx):
    kern = ctx.kern
    for a in ctx.masks:
        ka = kern[a]
        for b in ctx.masks:
            if a & ~b == 0 and ka & ~kern[b]:
                return _Fail((a, b), (), "semi-kernel not monotone")


def _chk_3_2c(ctx):
    kern = ctx.kern
    for b in ctx.masks:
        if kern[kern[b]] != kern[b]:
            return _Fail((b,), (), "semi-kernel not idempotent")


def _chk_3_2d(ctx):
    kern = ctx.kern
    for a in ctx.masks:
        for b in ctx.masks:
            if kern[a | b] != kern[a] | kern[b]:
                return _Fail((a, b), (), "kernel of union differs from union of kernels")
    whole = 0
    for b in ctx.masks:
        whole |= kern[b]
    if kern[ctx.space.full] != whole:
        return _Fail((), (), "kernel of the full union differs")


def _chk_3_2e(ctx):
    for a in ctx.so:
        if ctx.kern[a] != a:
            return _Fail((a,), (), "semi-open set moved by its semi-kernel")


def _chk_3_2f(ctx):
    for b in ctx.masks:
        if ctx.kern[ctx.comp(b)] != ctx.comp(ctx.vs[b]):
            return _Fail((b,), (), "kernel of complement differs from complement of dual")


def _chk_3_2g(ctx):
    for b in ctx.masks:
        if ctx.vs[b] & ~b:
            return _Fail((b,), (), "dual operator escapes its argument")


def _chk_3_2h(ctx):
    for f in ctx.sc:
        if ctx.vs[f] != f:
            return _Fail((f,), (), "semi-closed set moved by the dual operator")


def _chk_3_2i(ctx):
    kern = ctx.kern
    for a in ctx.masks:
        for b in ctx.masks:
            if kern[a & b] & ~(kern[a] & kern[b]):
                return _Fail((a, b), (), "kernel of intersection escapes the kernels")
    whole = ctx.space.full
    for b in ctx.masks:
        whole &= kern[b]
    if kern[0] & ~whole:
        return _Fail((), (), "kernel of the full intersection escapes")


def _chk_3_2j(ctx):
    vs = ctx.vs
    for a in ctx.masks:
        for b in ctx.masks:
            if (vs[a] | vs[b]) & ~vs[a | b]:
                return _Fail((a, b), (), "dual of union misses a dual")
    whole = 0
    for b in ctx.masks:
        whole |= vs[b]
    if whole & ~vs[ctx.space.full]:
        return _Fail((), (), "dual of the full union misses a dual")


def _chk_3_3(ctx):
    b1 = ctx.space.mask_of("b")
    b2 = ctx.space.mask_of("c")
    if ctx.kern[b1 & b2] == ctx.kern[b1] & ctx.kern[b2]:
        return _Fail((b1, b2), (), "documented strict pair is not strict here")


def _chk_3_7a(ctx):
    full = ctx.space.full
    if ctx.kern[0] != 0 or ctx.kern[full] != full:
        return _Fail((), (), "empty set or carrier moved by the semi-kernel")
    if ctx.an.v_s(0) != 0 or ctx.an.v_s(full) != full:
        return _Fail((), (), "empty set or carrier moved by the dual")


def _chk_3_7b(ctx):
    lam = sorted(ctx.lam_sets)
    for i, a in enumerate(lam):
        for b in lam[i:]:
            if (a | b) not in ctx.lam_sets:
                return _Fail((a, b), (), "union of kernel-fixed sets is not kernel-fixed")
    vss = sorted(ctx.vs_sets)
    for i, a in enumerate(vss):
        for b in vss[i:]:
            if (a | b) not in ctx.vs_sets:
                return _Fail((a, b), (), "union of dual-fixed sets is not dual-fixed")
    whole = 0
    for a in lam:
        whole |= a
    if whole not in ctx.lam_sets:
        return _Fail((), (), "union of every kernel-fixed set is not kernel-fixed")


def _chk_3_7c(ctx):
    lam = sorted(ctx.lam_sets)
    for i, a in enumerate(lam):
        for b in lam[i:]:
            if (a & b) not in ctx.lam_sets:
                return _Fail((a, b), (), "intersection of kernel-fixed sets is not kernel-fixed")
    vss = sorted(ctx.vs_sets)
    for i, a in enumerate(vss):
        for b in vss[i:]:
            if (a & b) not in ctx.vs_sets:
                return _Fail((a, b), (), "intersection of dual-fixed sets is not dual-fixed")
    whole = ctx.space.full
    for a in lam:
        whole &= a
    if whole not in ctx.lam_sets:
        return _Fail((), (), "intersection of every kernel-fixed set is not kernel-fixed")


def _chk_3_7d(ctx):
    for b in ctx.masks:
        if (ctx.kern[b] == b) != (ctx.vs[ctx.comp(b)] == ctx.comp(b)):
            return _Fail((b,), (), "kernel-fixed and dual-fixed complements disagree")


def _chk_3_8(ctx):
    every_lam = all(ctx.kern[m] == m for m in ctx.masks)
    every_vs = all(ctx.vs[m] == m for m in ctx.masks)
    if not ctx.prof.semi_t1 == every_lam == every_vs:
        return _Fail((), (), f"semi_t1={ctx.prof.semi_t1} but kernel-fixed-all={every_lam}, dual-fixed-all={every_vs}")


# -- checkers: separation axioms --------------------------------------

def _chk_digital_line(ctx):
    prof = ctx.prof
    if prof.t1 or prof.r0 or not prof.semi_t1 or not prof.semi_r0:
        return _Fail((), (), f"expected t1=false r0=false semi_t1=true semi_r0=true, got {prof.t1}/{prof.r0}/{prof.semi_t1}/{prof.semi_r0}")
    space = ctx.space
    ints = [int(lab) for lab in space.names]
    for x, value in enumerate(ints):
        bit = 1 << x
        if value % 2 == 0:
            if space.closure(bit) != bit:
                return _Fail((bit,), (x,), "even singleton is not closed")
        elif min(ints) < value < max(ints):
            if not set_class(space, bit).regular_open:
                return _Fail((bit,), (x,), "interior odd singleton is not regular open")


def _chk_semi_t1_implies_semi_r0(ctx):
    if ctx.prof.semi_t1 and not ctx.prof.semi_r0:
        return _Fail((), (), "semi_t1 space that is not semi_r0")


def _chk_r0_implies_semi_r0(ctx):
    if ctx.prof.r0 and not ctx.prof.semi_r0:
        return _Fail((), (), "r0 space that is not semi_r0")


def _chk_semi_t1_v_sets(ctx):
    space = ctx.space
    pre = all(ctx.vs[m] == m
              for m in ctx.masks if set_class(space, m).preopen)
    beta = all(ctx.vs[m] == m
               for m in ctx.masks if set_class(space, m).beta_open)
    if not ctx.prof.semi_t1 == pre == beta:
        return _Fail((), (), f"semi_t1={ctx.prof.semi_t1} but preopen-fixed={pre}, beta-fixed={beta}")


def _chk_semi_r0_v_sets(ctx):
    space = ctx.space
    so_fixed = all(ctx.vs[o] == o for o in ctx.so)
    open_fixed = all(ctx.vs[o] == o for o in space.opens)
    simply_fixed = all(ctx.vs[m] == m
                       for m in ctx.masks if set_class(space, m).simply_open)
    if not ctx.prof.semi_r0 == so_fixed == open_fixed == simply_fixed:
        return _Fail((), (), f"semi_r0={ctx.prof.semi_r0} but semi-open-fixed={so_fixed}, open-fixed={open_fixed}, simply-open-fixed={simply_fixed}")


def _chk_semi_r0_union(ctx):
    unions_ok = True
    for o in ctx.so:
        u = 0
        for f in ctx.sc:
            if f & o == f:
                u |= f
        if u != o:
            unions_ok = False
            break
    if ctx.prof.semi_r0 != unions_ok:
        return _Fail((), (), f"semi_r0={ctx.prof.semi_r0} but semi-open-as-union-of-semi-closed={unions_ok}")


# -- checkers: openness grades ----------------------------------------

def _chk_singleton_dichotomy(ctx):
    for x in range(ctx.space.n):
        c = set_class(ctx.space, 1 << x)
        if not (c.preopen or c.nowhere_dense):
            return _Fail((1 << x,), (x,), "singleton neither preopen nor nowhere dense")


def _chk_semi_open_levine(ctx):
    space = ctx.space
    cl = {o: space.closure(o) for o in space.opens}
    for m in ctx.masks:
        witnessed = any(o & ~m == 0 and m & ~cl[o] == 0 for o in space.opens)
        if witnessed != (m in ctx.so):
            return _Fail((m,), (), "open-witness and interior/closure forms disagree")


def _chk_beta_open(ctx):
    space = ctx.space
    reg_closed = [r for r in ctx.masks
                  if r == space.closure(space.interior(r))]
    for m in ctx.masks:
        cl_m = space.closure(m)
        dense = any(m & ~r == 0 and r & ~cl_m == 0 for r in reg_closed)
        if dense != set_class(space, m).beta_open:
            return _Fail((m,), (), "dense-in-regular-closed and closure-composite forms disagree")


def _chk_simply_open(ctx):
    space = ctx.space
    nwd = [space.interior(space.closure(m)) == 0 for m in ctx.masks]
    for m in ctx.masks:
        split = any(u & ~m == 0 and nwd[m & ~u] for u in space.opens)
        if split != set_class(space, m).simply_open:
            return _Fail((m,), (), "open-plus-nowhere-dense and boundary forms disagree")


def _chk_beta_containments(ctx):
    space = ctx.space
    for m in ctx.masks:
        c = set_class(space, m)
        if (c.preopen or m in ctx.so) and not c.beta_open:
            return _Fail((m,), (), "preopen or semi-open set that is not beta-open")


# -- checkers: generalized classes ------------------------------------

def _chk_4_5ab(ctx):
    for m in ctx.masks:
        if ctx.kern[m] == m and m not in ctx.fams.d_lambda:
            return _Fail((m,), (), "kernel-fixed set missing from the generalized family")
        if ctx.vs[m] == m and m not in ctx.fams.d_v:
            return _Fail((m,), (), "dual-fixed set missing from the dual generalized family")


def _chk_4_5cd(ctx):
    dl = ctx.fams.d_lambda
    for i, a in enumerate(dl.members):
        for b in dl.members[i:]:
            if (a | b) not in dl:
                return _Fail((a, b), (), "union leaves the generalized family")
    dv = ctx.fams.d_v
    for i, a in enumerate(dv.members):
        for b in dv.members[i:]:
            if (a & b) not in dv:
                return _Fail((a, b), (), "intersection leaves the dual generalized family")
    whole = 0
    for a in dl:
        whole |= a
    if whole not in dl:
        return _Fail((), (), "union of the whole generalized family escapes it")
    whole = ctx.space.full
    for a in dv:
        whole &= a
    if whole not in dv:
        return _Fail((), (), "intersection of the whole dual family escapes it")


def _chk_4_6(ctx):
    a = ctx.space.mask_of("ac")
    b = ctx.space.mask_of("bc")
    c = a & b
    if a not in ctx.fams.d_lambda or b not in ctx.fams.d_lambda:
        return _Fail((a, b), (), "documented generalized sets are not generalized here")
    if c in ctx.fams.d_lambda:
        return _Fail((c,), (), "documented intersection failure does not fail")
    if ctx.kern[a] == a:
        return _Fail((a,), (), "documented non-kernel-fixed set is kernel-fixed")


def _chk_4_7(ctx):
    for o in ctx.so:
        if o not in ctx.fams.d_lambda:
            return _Fail((o,), (), "semi-open set outside the generalized family")
    for f in ctx.sc:
        if f not in ctx.fams.d_v:
            return _Fail((f,), (), "semi-closed set outside the dual generalized family")


def _chk_4_8(ctx):
    for x in range(ctx.space.n):
        bit = 1 << x
        if bit not in ctx.so and ctx.comp(bit) not in ctx.fams.d_lambda:
            return _Fail((bit,), (x,), "singleton neither semi-open nor complement-generalized")
        if bit not in ctx.so and bit not in ctx.fams.d_v:
            return _Fail((bit,), (x,), "singleton neither semi-open nor dual-generalized")


def _chk_cantor_bendixson(ctx):
    der = derived_set(ctx.space)
    gvs = g_v_s_singletons(ctx.an)
    diff = der ^ gvs
    if diff:
        x = (diff & -diff).bit_length() - 1
        if gvs >> x & 1:
            msg = "singleton is dual-generalized but the point is isolated"
        else:
            msg = "point is in the derived set but its singleton is not dual-generalized"
        return _Fail((der, gvs), (x,), msg)


def _chk_4_9(ctx):
    dl = ctx.fams.d_lambda
    for a in dl:
        for gap in submasks(ctx.kern[a] & ~a):
            if (a | gap) not in dl:
                return _Fail((a, a | gap), (), "set between a generalized set and its kernel escapes the family")


def _chk_4_10(ctx):
    sc = ctx.sc.members
    so = ctx.so.members
    kern = ctx.kern
    for b in ctx.masks:
        bc = ctx.comp(b)
        kc = kern[bc]
        by_complement = True
        for f in sc:
            if f & bc == bc and kc & ~f:
                by_complement = False
                break
        vs_b = ctx.vs[b]
        by_semi_open = True
        for u in so:
            if u & b == u and u & ~vs_b:
                by_semi_open = False
                break
        if by_complement != by_semi_open:
            return _Fail((b,), (), f"complement route {by_complement} vs semi-open route {by_semi_open}")


def _chk_4_11(ctx):
    full = ctx.space.full
    for b in ctx.fams.d_v:
        t = ctx.vs[b] | ctx.comp(b)
        for f in ctx.sc:
            if t & ~f == 0 and f != full:
                return _Fail((b, f), (), "proper semi-closed set above dual-union of a generalized set")


def _chk_4_12(ctx):
    for b in ctx.fams.d_v:
        closed_side = (ctx.vs[b] | ctx.comp(b)) in ctx.sc
        fixed_side = ctx.vs[b] == b
        if closed_side != fixed_side:
            return _Fail((b,), (), f"semi-closed test {closed_side} vs dual-fixed test {fixed_side}")


def _chk_4_13(ctx):
    full = ctx.space.full
    for b in ctx.masks:
        if ctx.vs[b] not in ctx.sc:
            continue
        t = ctx.vs[b] | ctx.comp(b)
        if all(f == full for f in ctx.sc if t & ~f == 0):
            if b not in ctx.fams.d_v:
                return _Fail((b,), (), "hypotheses hold but the set is not dual-generalized")


def _chk_5_2(ctx):
    for f in ctx.sc:
        if f not in ctx.fams.sg_closed:
            return _Fail((f,), (), "semi-closed set that is not sg-closed")


def _chk_5_3(ctx):
    every_fixed = all(ctx.vs[b] == b for b in ctx.fams.d_v)
    if ctx.prof.semi_t_half != every_fixed:
        return _Fail((), (), f"semi_t_half={ctx.prof.semi_t_half} but dual-generalized-all-fixed={every_fixed}")


# -- scopes -----------------------------------------------------------

def _scope_e1(space):
    return space.name == "e1"


def _scope_e33(space):
    return space.name == "e33"


def _scope_odd_window(space):
    name = space.name or ""
    if not name.startswith("khalimsky:"):
        return False
    _, lo, hi = name.split(":")
    return int(lo) % 2 == 1 and int(hi) % 2 == 1


# -- registry ---------------------------------------------------------

def register_laws() -> tuple:
    laws = [
        Law("prop-3.2a", "§3: $B \\subseteq B^{\\Lambda_s}$",
            _chk_3_2a, covers=("semi_kernel",)),
        Law("prop-3.2b", "§3: If $A \\subseteq B$, then $A^{\\Lambda_s} \\subseteq B^{\\Lambda_s}$",
            _chk_3_2b, max_points=PAIR_CAP, covers=("semi_kernel",)),
        Law("prop-3.2c", "§3: $B^{\\Lambda_s\\Lambda_s}=B^{\\Lambda_s}$",
            _chk_3_2c, covers=("semi_kernel",)),
        Law("prop-3.2d", "§3: $[\\bigcup B_\\lambda]^{\\Lambda_s}=\\bigcup B_\\lambda^{\\Lambda_s}$",
            _chk_3_2d, max_points=PAIR_CAP,
            note="checked over all pairs plus the full subset family",
            covers=("semi_kernel",)),
        Law("prop-3.2e", "§3: If $A \\in SO(X,\\tau)$, then $A=A^{\\Lambda_s}$",
            _chk_3_2e, covers=("semi_kernel", "semi_open_family")),
        Law("prop-3.2f", "§3: $(B^c)^{\\Lambda_s}=(B^{V_s})^c$",
            _chk_3_2f, max_points=FAMILY_CAP,
            covers=("semi_kernel", "v_s")),
        Law("prop-3.2g", "§3: $B^{V_s} \\subseteq B$",
            _chk_3_2g, max_points=FAMILY_CAP, covers=("v_s",)),
        Law("prop-3.2h", "§3: If $B \\in SC(X,\\tau)$, then $B=B^{V_s}$",
            _chk_3_2h, max_points=FAMILY_CAP, covers=("v_s",)),
        Law("prop-3.2i", "§3: $[\\bigcap B_\\lambda]^{\\Lambda_s} \\subseteq \\bigcap B_\\lambda^{\\Lambda_s}$",
            _chk_3_2i, max_points=PAIR_CAP,
            note="checked over all pairs plus the full subset family",
            covers=("semi_kernel",)),
        Law("prop-3.2j", "§3: $[\\bigcup B_\\lambda]^{V_s} \\supseteq \\bigcup B_\\lambda^{V_s}$",
            _chk_3_2j, max_points=PAIR_CAP,
            note="checked over all pairs plus the full subset family",
            covers=("v_s",)),
        Law("remark-3.3-strictness",
            "§3: $(B_1 \\bigcap B_2)^{\\Lambda_s}=\\emptyset$ but $B_1^{\\Lambda_s} \\bigcap B_2^{\\Lambda_s}=\\{b,c\\}$",
            _chk_3_3, scope=_scope_e1,
            note="existence claim; the documented pair is B1={b}, B2={c}",
            covers=("semi_kernel",)),
        Law("prop-3.7a", "§3: The subsets $\\emptyset$ and $X$ are $\\Lambda_s$-sets and $V_s$-sets",
            _chk_3_7a, covers=("is_lambda_s_set", "is_v_s_set")),
        Law("prop-3.7b", "§3: Every union of $\\Lambda_s$-sets ($V_s$-sets) is a $\\Lambda_s$-set ($V_s$-set)",
            _chk_3_7b, max_points=PAIR_CAP,
            note="checked over all pairs plus the full family",
            covers=("is_lambda_s_set", "is_v_s_set")),
        Law("prop-3.7c", "§3: Every intersection of $\\Lambda_s$-sets ($V_s$-sets) is a $\\Lambda_s$-set ($V_s$-set)",
            _chk_3_7c, max_points=PAIR_CAP,
            note="checked over all pairs plus the full family",
            covers=("is_lambda_s_set", "is_v_s_set")),
        Law("prop-3.7d", "§3: $B$ is a $\\Lambda_s$-set if and only if $B^c$ is a $V_s$-set",
            _chk_3_7d, max_points=FAMILY_CAP,
            covers=("is_lambda_s_set", "is_v_s_set")),
        Law("prop-3.8", "§3: semi-$T_1$ iff every subset is a $\\Lambda_s$-set iff every subset is a $V_s$-set",
            _chk_3_8, max_points=FAMILY_CAP,
            covers=("is_semi_t1", "is_lambda_s_set", "is_v_s_set")),
        Law("example-2-digital-line",
            "§2: a semi-$T_1$ space and a semi-$R_0$-space which is neither $T_1$ nor $R_0$",
            _chk_digital_line, scope=_scope_odd_window,
            note="odd-endpoint digital-line windows; even singletons closed, interior odd singletons regular open",
            covers=("is_t1", "is_r0", "is_semi_t1", "is_semi_r0", "set_class",
                    "axiom_profile")),
        Law("cor-3-semi-t1-semi-r0", "§3: Every semi-$T_1$-space is a semi-$R_0$-space",
            _chk_semi_t1_implies_semi_r0,
            covers=("is_semi_t1", "is_semi_r0")),
        Law("sec-2-r0-semi-r0", "§2: Every $R_0$-space is a semi-$R_0$-space",
            _chk_r0_implies_semi_r0, covers=("is_r0", "is_semi_r0")),
        Law("thm-3-semi-t1-v-sets",
            "§3: semi-$T_1$ iff every preopen set is a $V_s$-set iff every $\\beta$-open set is a $V_s$-set",
            _chk_semi_t1_v_sets, max_points=FAMILY_CAP,
            covers=("is_semi_t1", "set_class", "is_v_s_set")),
        Law("thm-3-semi-r0-v-sets",
            "§3: semi-$R_0$ iff every semi-open, every open and every simply-open set is a $V_s$-set",
            _chk_semi_r0_v_sets, max_points=FAMILY_CAP,
            note="simply-open also goes by the name locally semi-closed; only the simply-open form is implemented",
            covers=("is_semi_r0", "set_class", "is_v_s_set")),
        Law("sec-2-semi-r0-union",
            "§2: semi-$R_0$ iff every semi-open set is a union of semi-closed sets",
            _chk_semi_r0_union, max_points=FAMILY_CAP,
            covers=("is_semi_r0", "semi_open_family")),
        Law("sec-3-singleton-dichotomy",
            "§3: every singleton is either locally dense (= preopen) or nowhere dense",
            _chk_singleton_dichotomy, covers=("set_class",)),
        Law("defn-semi-open-levine",
            "§2: $A$ is semi-open iff there exists $O \\in \\tau$ with $O \\subseteq A \\subseteq {\\rm Cl}(O)$",
            _chk_semi_open_levine, max_points=FAMILY_CAP,
            covers=("semi_open_family",)),
        Law("defn-beta-open",
            "§3: $\\beta$-open iff dense in some regular closed subspace",
            _chk_beta_open, max_points=FAMILY_CAP, covers=("set_class",)),
        Law("defn-simply-open",
            "§3: simply-open iff a union of an open set and a nowhere dense set",
            _chk_simply_open, max_points=FAMILY_CAP, covers=("set_class",)),
        Law("sec-3-beta-containments",
            "§3: every preopen set and every semi-open set is $\\beta$-open",
            _chk_beta_containments,
            covers=("set_class", "semi_open_family")),
        Law("prop-4.5ab",
            "§4: Every $\\Lambda_s$-set is a $g.\\Lambda_s$-set; every $V_s$-set is a $g.V_s$-set",
            _chk_4_5ab, max_points=FAMILY_CAP,
            covers=("is_lambda_s_set", "is_v_s_set", "is_g_lambda_s",
                    "is_g_v_s", "generalized_families")),
        Law("prop-4.5cd",
            "§4: unions of $g.\\Lambda_s$-sets are $g.\\Lambda_s$; intersections of $g.V_s$-sets are $g.V_s$",
            _chk_4_5cd, max_points=PAIR_CAP,
            note="checked over all pairs plus the full family",
            covers=("generalized_families",)),
        Law("example-4.6-intersection",
            "§4: $A \\bigcap B=\\{c\\}$ is not a $g.\\Lambda_s$-set",
            _chk_4_6, scope=_scope_e33,
            note="documented witnesses A={a,c}, B={b,c}; A is also not a $\\Lambda_s$-set",
            covers=("is_g_lambda_s", "is_lambda_s_set",
                    "generalized_families")),
        Law("remark-4.7",
            "§4: If $A \\in SO(X,\\tau)$ then $A$ is a $g.\\Lambda_s$-set; if $A \\in SC(X,\\tau)$ then $A$ is a $g.V_s$-set",
            _chk_4_7, covers=("is_g_lambda_s", "is_g_v_s",
                              "generalized_families")),
        Law("prop-4.8-dichotomy",
            "§4: $\\{x\\}$ is a semi-open set or $\\{x\\}^c$ is a $g.\\Lambda_s$-set",
            _chk_4_8, note="equivalently the singleton itself is a $g.V_s$-set",
            covers=("is_g_lambda_s", "is_g_v_s", "semi_open_family")),
        Law("cor-4-cantor-bendixson",
            "§4: the Cantor-Bendixson derivative $D(X)$ is the set of all points whose singleton is a $g.V_s$-set",
            _chk_cantor_bendixson, status="disputed",
            dispute_space="discrete:2",
            note="fails on discrete spaces: every singleton is semi-closed hence g.V_s, while the derivative is empty",
            covers=("derived_set", "g_v_s_singletons", "is_g_v_s")),
        Law("prop-4.9-sandwich",
            "§4: if $B$ is $g.\\Lambda_s$ and $B \\subseteq C \\subseteq B^{\\Lambda_s}$ then $C$ is $g.\\Lambda_s$",
            _chk_4_9, max_points=PAIR_CAP,
            covers=("is_g_lambda_s", "semi_kernel", "generalized_families")),
        Law("prop-4.10-agreement",
            "§4: $B$ is $g.V_s$ iff $U \\subseteq B^{V_s}$ whenever $U \\subseteq B$ and $U \\in SO(X,\\tau)$",
            _chk_4_10, max_points=FAMILY_CAP,
            covers=("is_g_v_s", "v_s", "semi_open_family")),
        Law("cor-4.11",
            "§4: $B$ $g.V_s$ implies every semi-closed $F \\supseteq B^{V_s} \\bigcup B^c$ is $X$",
            _chk_4_11, max_points=FAMILY_CAP,
            covers=("is_g_v_s", "v_s", "generalized_families")),
        Law("cor-4.12",
            "§4: for $g.V_s$ sets, $B^{V_s} \\bigcup B^c$ is semi-closed iff $B$ is a $V_s$-set",
            _chk_4_12, max_points=FAMILY_CAP,
            covers=("is_g_v_s", "v_s", "is_v_s_set")),
        Law("prop-4.13",
            "§4: if $B^{V_s}$ is semi-closed and $X=F$ for every semi-closed $F \\supseteq B^{V_s} \\bigcup B^c$, then $B$ is $g.V_s$",
            _chk_4_13, max_points=FAMILY_CAP,
            covers=("is_g_v_s", "v_s", "generalized_families")),
        Law("remark-5.2-semi-closed-sg",
            "§5: Every semi-closed set is sg-closed",
            _chk_5_2, covers=("is_sg_closed", "semi_closure",
                              "generalized_families")),
        Law("thm-5.3",
            "§5: semi-$T_{1/2}$ iff every $g.V_s$-set is a $V_s$-set",
            _chk_5_3, max_points=FAMILY_CAP,
            covers=("is_semi_t_half", "is_sg_closed", "semi_closure",
                    "is_g_v_s", "is_v_s_set", "generalized_families")),
    ]
    ids = [law.id for law in laws]
    assert len(ids) == len(set(ids))
    return tuple(laws)


_REGISTRY = None


def registry() -> dict:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = {law.id: law for law in register_laws()}
    return _REGISTRY


# -- running ----------------------------------------------------------

def check_law(law: Law, space, ctx: SpaceContext | None = None):
    """Run one law on one space; None means pass, a Witness means fail."""
    if isinstance(law, str):
        law = registry()[law]
    if not law.applies(space):
        raise LawScopeError(f"{law.id} does not apply to {space.describe()}")
    if space.n > law.max_points:
        raise LawScopeError(
            f"{law.id} is bounded to {law.max_points} points, space has {space.n}")
    if ctx is None:
        ctx = SpaceContext(space)
    fail = law.check(ctx)
    if fail is None:
        return None
    return Witness(
        law_id=law.id,
        space_name=space.describe(),
        subsets=tuple(space.render(m) for m in fail.subsets),
        points=tuple(space.names[x] for x in fail.points),
        message=fail.message,
        space=space,
        subset_masks=tuple(fail.subsets),
    )


@dataclass
class LawResult:
    law_id: str
    status: str
    examined: int = 0
    passed: int = 0
    witnesses: list = field(default_factory=list)
    dispute_space_examined: bool = False

    def verdict(self) -> str:
        failed = self.examined - self.passed
        if self.status == "expected":
            return "ok" if failed == 0 else f"VIOLATED ({failed} spaces)"
        if failed > 0:
            return f"disputed: confirmed ({failed} spaces)"
        if self.dispute_space_examined:
            return "disputed: STALE (no failure reproduced)"
        return "disputed: not exercised"

    def is_fatal(self) -> bool:
        failed = self.examined - self.passed
        if self.status == "expected":
            return failed > 0
        return failed == 0 and self.dispute_space_examined


@dataclass
class LawReport:
    results: list
    spaces_total: int
    wall_time: float = 0.0

    def exit_code(self) -> int:
        return 1 if any(r.is_fatal() for r in self.results) else 0

    def to_dict(self) -> dict:
        return {
            "spaces": self.spaces_total,
            "laws": [
                {
                    "id": r.law_id,
                    "status": r.status,
                    "examined": r.examined,
                    "passed": r.passed,
                    "verdict": r.verdict(),
                    "witnesses": [
                        {
                            "space": w.space_name,
                            "subsets": [sorted(w.space.labels_of(m))
                                        for m in w.subset_masks]
                                       if w.space is not None
                                       else list(w.subsets),
                            "points": list(w.points),
                            "message": w.message,
                        }
                        for w in r.witnesses
                    ],
                }
                for r in self.results
            ],
            "exit_code": self.exit_code(),
        }

    def render_text(self, witness_cap: int = 5) -> str:
        lines = [f"claim suite over {self.spaces_total} spaces"]
        width = max(len(r.law_id) for r in self.results) + 2
        for r in self.results:
            lines.append(f"{r.law_id:<{width}}{r.examined:>6} examined"
                         f"{r.passed:>6} passed  {r.verdict()}")
        shown = [r for r in self.results if r.witnesses]
        if shown:
            lines.append("witnesses:")
            for r in shown:
                for w in r.witnesses[:witness_cap]:
                    lines.append("  " + w.render())
                extra = len(r.witnesses) - witness_cap
                if extra > 0:
                    lines.append(f"  {r.law_id}: ... and {extra} more")
        lines.append(f"exit-code: {self.exit_code()}")
        return "\n".join(lines) + "\n"


def _eval_space(space: FiniteSpace, law_ids):
    """Worker body: evaluate the selected laws on one space."""
    reg = registry()
    ctx = None
    out = []
    for lid in law_ids:
        law = reg[lid]
        if not law.applies(space) or space.n > law.max_points:
            out.append((lid, "skip", None))
            continue
        if ctx is None:
            ctx = SpaceContext(space)
        fail = law.check(ctx)
        out.append((lid, "done", fail))
    return space, out


def _star_eval(args):
    return _eval_space(*args)


def run_suite(spaces: Iterable[FiniteSpace], law_ids=None,
              workers: int = 1) -> LawReport:
    """Evaluate the registry over a stream of spaces.

    The merged report is deterministic in the law registration order and
    the stream order, independent of the worker count.
    """
    reg = registry()
    if law_ids is None:
        law_ids = list(reg)
    else:
        law_ids = list(law_ids)
        for lid in law_ids:
            if lid not in reg:
                raise KeyError(f"unknown law id {lid!r}")
    spaces = list(spaces)
    started = time.perf_counter()
    results = {lid: LawResult(lid, reg[lid].status) for lid in law_ids}

    if workers > 1 and len(spaces) > 1:
        chunk = max(1, len(spaces) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            evaluated = pool.map(_star_eval,
                                 [(s, law_ids) for s in spaces],
                                 chunksize=chunk)
            evaluated = list(evaluated)
    else:
        evaluated = [_eval_space(s, law_ids) for s in spaces]

    for space, outcomes in evaluated:
        for lid, state, fail in outcomes:
            if state == "skip":
                continue
            r = results[lid]
            r.examined += 1
            if reg[lid].dispute_space is not None and \
                    space.name == reg[lid].dispute_space:
                r.dispute_space_examined = True
            if fail is None:
                r.passed += 1
            else:
                r.witnesses.append(Witness(
                    law_id=lid,
                    space_name=space.describe(),
                    subsets=tuple(space.render(m) for m in fail.subsets),
                    points=tuple(space.names[x] for x in fail.points),
                    message=fail.message,
                    space=space,
                    subset_masks=tuple(fail.subsets),
                ))

    report = LawReport([results[lid] for lid in law_ids], len(spaces))
    report.wall_time = time.perf_counter() - started
    return report


def default_named_spaces() -> list:
    return [entry.space for entry in catalog_entries()]
