"""The left brace carried by the permutation group of a cycle set.

For a cycle set X with rows sigma_x, the group G generated by the rows
carries a left brace whose multiplication is composition and whose lambda
maps act on the embedded generators e(x) = sigma_x^-1 by

    lam[g](e(x)) = e(g(x)),        g acting on the point x,

which pins the addition down to

    g + e(z) = g o sigma_{g^-1(z)}^-1.

The addition table is built by breadth-first search from the identity,
adding one embedded generator at a time and folding longer sums along the
first-discovered word of the right summand. The construction is never
trusted: the result must pass the complete brace validation (including
commutativity and associativity of the built addition), and the defining
lambda identity above is re-checked exhaustively afterwards. Any failure
raises instead of returning a wrong table.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .brace import LeftBrace, additive_span, lambda_orbits, socle, sub_cycle_set
from .cycleset import CycleSet
from .errors import ConsistencyError
from .perm import PermGroup, compose, group_closure, inverse

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupBraceResult:
    """The brace on the row group of a cycle set.

    Carrier element i is group.elements[i]; embed[x] is the carrier index
    of sigma_x^-1; additive_words[i] spells element i as a sum of embedded
    generators, by their point labels.
    """

    brace: LeftBrace
    group: PermGroup
    embed: tuple[int, ...]
    additive_words: tuple[tuple[int, ...], ...]

    @property
    def embedded_base(self) -> frozenset[int]:
        return frozenset(self.embed)


def group_brace(X: CycleSet) -> GroupBraceResult:
    """Build and fully verify the left brace on the row group of X."""
    n = X.size
    group = group_closure(X.sigma, degree=n)
    m = group.order
    elements, index = group.elements, group.index
    inv_sigma = tuple(inverse(s) for s in X.sigma)
    embed = tuple(index[inv_sigma[x]] for x in range(n))

    # i + e(z) for every carrier element i and point z
    plus_gen = []
    for g in elements:
        ginv = inverse(g)
        plus_gen.append(tuple(index[compose(g, inv_sigma[ginv[z]])]
                              for z in range(n)))

    words: list[tuple[int, ...] | None] = [None] * m
    words[0] = ()
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = plus_gen[i]
        for z in range(n):
            j = row[z]
            if words[j] is None:
                words[j] = words[i] + (z,)
                queue.append(j)
    missing = [i for i in range(m) if words[i] is None]
    if missing:
        raise ConsistencyError(
            f"additive closure from the generators missed {len(missing)} of "
            f"{m} group elements; the input cannot be a valid cycle set")

    add = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = i
            for z in words[j]:
                acc = plus_gen[acc][z]
            row.append(acc)
        add.append(tuple(row))

    mul = tuple(tuple(index[compose(g, h)] for h in elements) for g in elements)

    brace = LeftBrace(tuple(add), mul)

    for i, g in enumerate(elements):
        lam_i = brace.lam[i]
        for x in range(n):
            if lam_i[embed[x]] != embed[g[x]]:
                raise ConsistencyError(
                    f"lambda action disagrees with the point action at group "
                    f"element {i}, point {x + 1}")

    return GroupBraceResult(brace, group, embed, tuple(words))


@dataclass(frozen=True)
class BaseReconstructionReport:
    """Whether rebuilding a brace from one of its transitive cycle bases
    returns the brace itself.

    Preconditions (trivial socle, order above 1, the subset really is a
    transitive cycle base) are reported as data, separately from the
    isomorphism verdict. iso maps carrier indices of the rebuilt brace to
    elements of the original one.
    """

    socle_trivial: bool
    order_gt_1: bool
    base_is_transitive_base: bool
    rebuilt: "GroupBraceResult"
    isomorphic: bool
    iso: tuple[int, ...] | None
    failure: str | None

    @property
    def rebuilt_order(self) -> int:
        return self.rebuilt.brace.order

    @property
    def preconditions_ok(self) -> bool:
        return self.socle_trivial and self.order_gt_1 and self.base_is_transitive_base


def check_base_reconstruction(B: LeftBrace, base) -> BaseReconstructionReport:
    """Rebuild a brace from a cycle base and compare.

    Takes the cycle set that the brace induces on the base, builds the
    brace on its row group, and extends the generator correspondence
    (embedded generator of point i) -> (i-th base element) along parallel
    multiplicative breadth-first searches. Reports whether the extension
    is a well-defined bijection preserving both operations.
    """
    pts = tuple(sorted(set(base)))
    m = B.order
    soc_trivial = socle(B) == frozenset({0})
    order_gt_1 = m > 1
    base_set = frozenset(pts)
    is_tbase = (base_set in {frozenset(o) for o in lambda_orbits(B)}
                and len(additive_span(B, pts)) == m)

    C = sub_cycle_set(B, pts)
    R = group_brace(C)
    k = R.brace.order

    gens = []
    for i in range(len(pts)):
        gens.append((R.embed[i], pts[i]))
        gens.append((R.brace.inv[R.embed[i]], B.inv[pts[i]]))

    phi: list[int | None] = [None] * k
    phi[0] = 0
    queue = deque([0])
    failure = None
    while queue and failure is None:
        g = queue.popleft()
        for hg, hb in gens:
            g2 = R.brace.mul[g][hg]
            b2 = B.mul[phi[g]][hb]
            if phi[g2] is None:
                phi[g2] = b2
                queue.append(g2)
            elif phi[g2] != b2:
                failure = f"extension is not well defined at element {g2}"
                break

    if failure is None and None in phi:
        failure = "multiplicative closure did not reach every element"
    if failure is None and len(set(phi)) != m:
        failure = (f"not a bijection: image has {len(set(phi))} of {m} elements")
    if failure is None:
        for a in range(k):
            for b in range(k):
                if phi[R.brace.add[a][b]] != B.add[phi[a]][phi[b]]:
                    failure = f"addition not preserved at ({a},{b})"
                    break
                if phi[R.brace.mul[a][b]] != B.mul[phi[a]][phi[b]]:
                    failure = f"multiplication not preserved at ({a},{b})"
                    break
            if failure:
                break

    isomorphic = failure is None
    return BaseReconstructionReport(
        socle_trivial=soc_trivial,
        order_gt_1=order_gt_1,
        base_is_transitive_base=is_tbase,
        rebuilt=R,
        isomorphic=isomorphic,
        iso=tuple(phi) if isomorphic else None,
        failure=failure,
    )


@dataclass(frozen=True)
class SocleQuotientReport:
    """Whether the canonical map onto the brace of the derived cycle set is
    a surjective brace homomorphism with kernel exactly the socle."""

    ok: bool
    kernel: frozenset[int]
    group_order: int
    failure: str | None


def socle_quotient_check(A: LeftBrace) -> SocleQuotientReport:
    """Verify that A maps onto the brace of its derived cycle set with
    kernel the socle.

    The derived cycle set lives on the carrier of A, so the canonical map
    sends a to the embedded generator of the point a, i.e. to the group
    element lam[a]. Homomorphism (both operations), surjectivity and the
    kernel are all checked on the full tables.
    """
    d = A.order
    derived = sub_cycle_set(A, range(d))
    R = group_brace(derived)
    psi = R.embed
    failure = None
    if set(psi) != set(range(R.brace.order)):
        failure = "canonical map is not surjective"
    if failure is None:
        for a in range(d):
            for b in range(d):
                if psi[A.add[a][b]] != R.brace.add[psi[a]][psi[b]]:
                    failure = f"addition not preserved at ({a},{b})"
                    break
                if psi[A.mul[a][b]] != R.brace.mul[psi[a]][psi[b]]:
                    failure = f"multiplication not preserved at ({a},{b})"
                    break
            if failure:
                break
    kernel = frozenset(a for a in range(d) if psi[a] == 0)
    if failure is None and kernel != socle(A):
        failure = "kernel differs from the socle"
    return SocleQuotientReport(
        ok=failure is None,
        kernel=kernel,
        group_order=R.brace.order,
        failure=failure,
    )
