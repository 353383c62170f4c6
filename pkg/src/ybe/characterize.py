"""Simplicity of a cycle set through the ideal lattice of its brace.

This module ties the two sides of the package together. For a brace with
trivial socle and a transitive cycle base it evaluates three conditions
that are provably equivalent:

  1) the base is a simple cycle set,
  2) every non-zero ideal acts transitively on the base,
  3) there is a unique minimal non-zero ideal and it acts transitively.

and the two translation maps between ideals and congruences behind the
equivalence. Nothing here assumes the equivalence: both sides are always
computed independently and a disagreement raises ConsistencyError, the
package's implementation-bug channel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brace import (LeftBrace, additive_span, all_ideals, ideal_action_orbits,
                    ideal_violation, is_cyclic_additive, is_trivial_brace,
                    lambda_orbits, quotient_brace, socle, sub_cycle_set)
from .cycleset import (Congruence, CycleSet, are_isomorphic, canonical_partition,
                       cyclic_cycle_set, is_congruence, is_indecomposable,
                       is_irretractable, is_simple)
from .errors import ConsistencyError, PreconditionError
from .group_brace import group_brace


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _base_points(base) -> tuple[int, ...]:
    return tuple(sorted(set(base)))


def refines(c1: Congruence, c2: Congruence) -> bool:
    """True iff every class of c1 lies inside a class of c2."""
    return all(c2[x] == c2[c1[x]] for x in range(len(c1)))


def ideal_to_congruence(B: LeftBrace, ideal, base) -> Congruence:
    """Partition of the base into orbits under the lambda maps of an ideal.

    Returned on the points of sub_cycle_set(B, base), i.e. base elements in
    increasing order. The partition is checked to be a congruence of that
    cycle set; a failure would mean the orbit construction is wrong and
    raises ConsistencyError.
    """
    pts = _base_points(base)
    pos = {x: i for i, x in enumerate(pts)}
    orbs = ideal_action_orbits(B, ideal, pts)
    labels = [0] * len(pts)
    for orb in orbs:
        for x in orb:
            labels[pos[x]] = pos[orb[0]]
    c = canonical_partition(labels)
    sub = sub_cycle_set(B, pts)
    if not is_congruence(sub, c):
        raise ConsistencyError(
            "ideal orbits do not form a congruence of the base cycle set")
    return c


def congruence_to_ideal(B: LeftBrace, base, c: Congruence) -> frozenset[int]:
    """Additive span of the differences x-y over base pairs identified by c.

    The span must be an ideal, and the congruence its orbits induce must
    refine c; either failure raises ConsistencyError.
    """
    pts = _base_points(base)
    diffs = set()
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if c[i] == c[j]:
                diffs.add(B.sub(x, y))
    span = additive_span(B, diffs)
    why = ideal_violation(B, span)
    if why is not None:
        raise ConsistencyError(
            f"difference span of a congruence is not an ideal: {why}")
    induced = ideal_to_congruence(B, span, pts)
    if not refines(induced, c):
        raise ConsistencyError(
            "congruence induced by the difference-span ideal does not refine"
            " the original congruence")
    return span


@dataclass(frozen=True)
class TheoremReport:
    """The three equivalence conditions, with their preconditions as data.

    cond1 is the brute-force simplicity of the base cycle set; cond2 and
    cond3 read the ideal lattice. `equivalent` records whether all three
    agree; when the preconditions hold they must.
    """

    soc_trivial: bool
    order_gt_1: bool
    base_transitive: bool
    cond1_simple: bool
    cond2_all_nonzero_ideals_transitive: bool
    cond2_witness: frozenset[int] | None
    cond3_unique_minimal_transitive: bool
    minimal_ideal_sizes: tuple[int, ...]
    ideal_sizes: tuple[int, ...]
    equivalent: bool

    @property
    def preconditions_ok(self) -> bool:
        return self.soc_trivial and self.order_gt_1 and self.base_transitive


def theorem_characterization(B: LeftBrace, base) -> TheoremReport:
    """Evaluate all three conditions independently and report everything.

    No precondition is assumed; each is evaluated and reported. The base
    must at least be lambda-closed so that its cycle set exists.
    """
    pts = _base_points(base)
    m = B.order
    soc_trivial = socle(B) == frozenset({0})
    order_gt_1 = m > 1
    base_set = frozenset(pts)
    single_orbit = base_set in {frozenset(o) for o in lambda_orbits(B)}
    base_transitive = single_orbit and len(additive_span(B, pts)) == m

    sub = sub_cycle_set(B, pts)
    cond1 = is_simple(sub)

    lattice = all_ideals(B)
    cond2 = True
    witness = None
    for ideal in lattice.ideals:
        if len(ideal) == 1:
            continue
        if len(ideal_action_orbits(B, ideal, pts)) != 1:
            cond2 = False
            witness = ideal
            break

    minimal = lattice.minimal
    cond3 = (len(minimal) == 1
             and len(ideal_action_orbits(B, minimal[0], pts)) == 1)

    return TheoremReport(
        soc_trivial=soc_trivial,
        order_gt_1=order_gt_1,
        base_transitive=base_transitive,
        cond1_simple=cond1,
        cond2_all_nonzero_ideals_transitive=cond2,
        cond2_witness=witness,
        cond3_unique_minimal_transitive=cond3,
        minimal_ideal_sizes=tuple(len(i) for i in minimal),
        ideal_sizes=tuple(len(i) for i in lattice.ideals),
        equivalent=(cond1 == cond2 == cond3),
    )


@dataclass(frozen=True)
class MinimalIdealReport:
    """Structure of the unique minimal ideal for a simple base of
    non-prime size: it must equal the additive span of the differences of
    embedded generators, and the quotient by it must be a trivial brace
    with cyclic addition.

    sigma_span_matches records whether spanning with differences of the
    row permutations themselves (instead of their inverses, the embedded
    generators) selects the same subgroup.
    """

    group_order: int
    unique_minimal: bool
    minimal_size: int
    span_matches: bool
    sigma_span_matches: bool
    quotient_order: int
    quotient_trivial: bool
    quotient_cyclic: bool

    @property
    def ok(self) -> bool:
        return (self.unique_minimal and self.span_matches
                and self.quotient_trivial and self.quotient_cyclic)


def check_minimal_ideal(X: CycleSet) -> MinimalIdealReport:
    """Verify the minimal-ideal structure of the brace of a simple cycle
    set of non-prime size."""
    if not is_simple(X):
        raise PreconditionError("cycle set is not simple")
    if is_prime(X.size):
        raise PreconditionError("cycle set has prime size")
    R = group_brace(X)
    B = R.brace
    lattice = all_ideals(B)
    unique = len(lattice.minimal) == 1
    minimal = lattice.minimal[0] if unique else frozenset({0})

    def diff_span(gens: tuple[int, ...]) -> frozenset[int]:
        diffs = {B.sub(a, b) for a in gens for b in gens}
        return additive_span(B, diffs)

    span = diff_span(R.embed)
    sigma_idx = tuple(R.group.index[s] for s in X.sigma)
    sigma_span = diff_span(sigma_idx)

    quotient = quotient_brace(B, minimal)
    return MinimalIdealReport(
        group_order=B.order,
        unique_minimal=unique,
        minimal_size=len(minimal),
        span_matches=span == minimal,
        sigma_span_matches=sigma_span == span,
        quotient_order=quotient.order,
        quotient_trivial=is_trivial_brace(quotient),
        quotient_cyclic=is_cyclic_additive(quotient),
    )


@dataclass(frozen=True)
class Classification:
    """Simplicity verdict of a cycle set with the branch that decided it.

    branch is one of "singleton", "size-2", "prime", "general". The
    brute-force verdict is always computed as well; the constructor of
    this report raises if the two disagree, so a held value is always
    internally consistent.
    """

    size: int
    branch: str
    simple: bool
    oracle_simple: bool
    indecomposable: bool
    irretractable: bool
    theorem: TheoremReport | None
    detail: str


def classify_cycle_set(X: CycleSet) -> Classification:
    """Decide simplicity structurally and cross-check against brute force.

    Size 2 is simple outright. At odd prime sizes, simple means isomorphic
    to the one cycle set whose rows all equal the same n-cycle. Otherwise
    the cycle set must be irretractable and indecomposable and the ideal
    lattice of its brace must satisfy the transitivity conditions. Any
    disagreement with the brute-force verdict raises ConsistencyError.
    """
    n = X.size
    oracle = is_simple(X)
    indec = is_indecomposable(X)
    irret = is_irretractable(X)
    theorem = None

    if n == 1:
        branch, simple, detail = "singleton", False, "a single point is never simple"
    elif n == 2:
        branch, simple, detail = "size-2", True, "every valid cycle set of size 2 is simple"
    elif is_prime(n):
        branch = "prime"
        simple = are_isomorphic(X, cyclic_cycle_set(n)) is not None
        detail = ("isomorphic to the cyclic model" if simple
                  else "not isomorphic to the cyclic model")
    else:
        branch = "general"
        if not (indec and irret):
            simple = False
            detail = ("not indecomposable" if not indec else "not irretractable")
        else:
            R = group_brace(X)
            theorem = theorem_characterization(R.brace, R.embedded_base)
            if not theorem.preconditions_ok:
                raise ConsistencyError(
                    "brace of an irretractable indecomposable cycle set must "
                    "have trivial socle and a transitive embedded base")
            if not theorem.equivalent:
                raise ConsistencyError(
                    "the three simplicity conditions disagree; this is a bug")
            simple = theorem.cond2_all_nonzero_ideals_transitive
            detail = ("every non-zero ideal acts transitively on the base"
                      if simple else "some non-zero ideal acts intransitively")

    if simple != oracle:
        raise ConsistencyError(
            f"classification ({simple}) disagrees with the brute-force "
            f"simplicity check ({oracle}) on a cycle set of size {n}")
    return Classification(
        size=n,
        branch=branch,
        simple=simple,
        oracle_simple=oracle,
        indecomposable=indec,
        irretractable=irret,
        theorem=theorem,
        detail=detail,
    )
