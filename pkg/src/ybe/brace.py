"""Finite left braces as explicit operation tables.

A left brace is a set with an abelian group (A,+), a group (A,o) on the
same carrier and the same neutral element, and the compatibility law

    a o (b + c) + a = a o b + a o c.

Carriers are {0..m-1} with 0 the shared neutral element. Both tables are
stored dense; every construction re-runs the complete axiom check, which
is the point at these sizes. The derived data lam[a] (the map
b -> -a + a o b), additive inverses and multiplicative inverses are
precomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cycleset import CheckResult, CycleSet, ValidationReport
from .errors import BraceError, ConsistencyError
from .perm import Perm, identity, inverse, is_perm, orbits

Table = tuple[tuple[int, ...], ...]


def _as_table(rows) -> Table:
    return tuple(tuple(r) for r in rows)


def validate_brace(add, mul) -> ValidationReport:
    """Check a pair of candidate tables against every left-brace axiom.

    Verifies both group structures (with 0 neutral for both), commutativity
    of +, the compatibility law on all m^3 triples, and the two properties
    of the maps lam[a]: additive automorphism, and multiplicativity of
    a -> lam[a]. Carrier elements are abstract 0-based indices throughout.
    """
    add = _as_table(add)
    mul = _as_table(mul)
    m = len(add)
    checks: list[CheckResult] = []

    def fail(name, witness, detail):
        checks.append(CheckResult(name, False, witness, detail))

    def ok(name):
        checks.append(CheckResult(name, True))

    shape_bad = len(mul) != m or any(len(r) != m for r in add) or any(
        len(r) != m for r in mul)
    if m == 0 or shape_bad:
        fail("table shape", None, f"expected two {m}x{m} tables over 0..{m - 1}")
        return ValidationReport(tuple(checks))
    ok("table shape")

    for name, t in (("addition", add), ("multiplication", mul)):
        bad = next((a for a in range(m) if not is_perm(t[a])), None)
        if bad is not None:
            fail(f"{name} rows bijective", (bad,),
                 f"{name} row {bad} is not a permutation of the carrier")
            return ValidationReport(tuple(checks))
        ok(f"{name} rows bijective")

    w = next(((a, b) for a in range(m) for b in range(m)
              if add[a][b] != add[b][a]), None)
    if w:
        fail("addition commutative", w, f"a+b != b+a at {w}")
    else:
        ok("addition commutative")

    for name, t in (("addition", add), ("multiplication", mul)):
        if t[0] != tuple(range(m)) or any(t[a][0] != a for a in range(m)):
            fail(f"{name} neutral", None, f"0 is not a two-sided {name} neutral")
            return ValidationReport(tuple(checks))
        ok(f"{name} neutral")

    rng = range(m)
    for name, t in (("addition", add), ("multiplication", mul)):
        w = None
        for a in rng:
            ta = t[a]
            for b in rng:
                tab = t[ta[b]]
                tb = t[b]
                for c in rng:
                    if tab[c] != ta[tb[c]]:
                        w = (a, b, c)
                        break
                if w:
                    break
            if w:
                break
        if w:
            fail(f"{name} associative", w, f"associativity fails at {w}")
            return ValidationReport(tuple(checks))
        ok(f"{name} associative")

    # inverses exist: rows are bijections and 0 sits in each row
    for name, t in (("addition", add), ("multiplication", mul)):
        bad = next((a for a in rng if 0 not in t[a]), None)
        if bad is not None:
            fail(f"{name} inverses", (bad,), f"{bad} has no {name} inverse")
        else:
            ok(f"{name} inverses")

    w = None
    for a in rng:
        ma, aa = mul[a], add[a]
        for b in rng:
            mab = ma[b]
            for c in rng:
                if add[ma[add[b][c]]][a] != add[mab][ma[c]]:
                    w = (a, b, c)
                    break
            if w:
                break
        if w:
            break
    if w:
        fail("compatibility law", w, f"a o (b+c) + a != a o b + a o c at {w}")
    else:
        ok("compatibility law")

    neg = tuple(add[a].index(0) for a in rng)
    lam = tuple(tuple(add[neg[a]][mul[a][b]] for b in rng) for a in rng)

    bad = next((a for a in rng if not is_perm(lam[a])), None)
    if bad is not None:
        fail("lambda maps bijective", (bad,), f"lam[{bad}] is not a bijection")
    else:
        ok("lambda maps bijective")

    w = None
    for a in rng:
        la = lam[a]
        for b in rng:
            lab = la[b]
            for c in rng:
                if la[add[b][c]] != add[lab][la[c]]:
                    w = (a, b, c)
                    break
            if w:
                break
        if w:
            break
    if w:
        fail("lambda maps additive", w, f"lam[a](b+c) != lam[a](b)+lam[a](c) at {w}")
    else:
        ok("lambda maps additive")

    w = None
    for a in rng:
        la = lam[a]
        for b in rng:
            lab = lam[mul[a][b]]
            lb = lam[b]
            if any(lab[c] != la[lb[c]] for c in rng):
                w = (a, b)
                break
        if w:
            break
    if w:
        fail("lambda multiplicative", w, f"lam[a o b] != lam[a] lam[b] at {w}")
    else:
        ok("lambda multiplicative")

    return ValidationReport(tuple(checks))


@dataclass(frozen=True)
class LeftBrace:
    """A validated left brace; add[a][b] = a+b, mul[a][b] = a o b.

    neg, inv and lam are derived on construction. Construction re-runs the
    full axiom check, so a held value always satisfies every axiom.
    """

    add: Table
    mul: Table
    neg: tuple[int, ...] = field(init=False, compare=False, repr=False)
    inv: tuple[int, ...] = field(init=False, compare=False, repr=False)
    lam: tuple[Perm, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "add", _as_table(self.add))
        object.__setattr__(self, "mul", _as_table(self.mul))
        report = validate_brace(self.add, self.mul)
        if not report.ok:
            first = report.failures[0]
            raise BraceError(f"not a left brace: {first.detail}",
                             [(c.name, c.witness, c.detail) for c in report.failures])
        m = self.order
        neg = tuple(self.add[a].index(0) for a in range(m))
        inv = tuple(self.mul[a].index(0) for a in range(m))
        lam = tuple(tuple(self.add[neg[a]][self.mul[a][b]] for b in range(m))
                    for a in range(m))
        object.__setattr__(self, "neg", neg)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "lam", lam)

    @property
    def order(self) -> int:
        return len(self.add)

    def sub(self, a: int, b: int) -> int:
        """a - b in the additive group."""
        return self.add[a][self.neg[b]]


def trivial_brace(n: int) -> LeftBrace:
    """Both operations addition mod n."""
    t = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return LeftBrace(t, t)


def lambda_map(B: LeftBrace, a: int) -> Perm:
    return B.lam[a]


def is_trivial_brace(B: LeftBrace) -> bool:
    """True iff a+b = a o b everywhere."""
    return B.add == B.mul


def is_cyclic_additive(B: LeftBrace) -> bool:
    """True iff one element generates the additive group."""
    m = B.order
    return any(len(additive_span(B, {g})) == m for g in range(m))


def additive_span(B: LeftBrace, subset: Iterable[int]) -> frozenset[int]:
    """Smallest additively closed subset containing the given elements and 0.

    Closure under + alone suffices in a finite group, where -a is a
    positive multiple of a.
    """
    gens = sorted(set(subset))
    span = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                s = B.add[a][g]
                if s not in span:
                    span.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(span)


def lambda_orbits(B: LeftBrace) -> tuple[tuple[int, ...], ...]:
    """Orbits of the carrier under all the maps lam[a]."""
    return orbits(B.lam, range(B.order))


def is_lambda_closed(B: LeftBrace, subset: Iterable[int]) -> bool:
    pts = set(subset)
    return all(B.lam[a][x] in pts for a in range(B.order) for x in pts)


def sub_cycle_set(B: LeftBrace, subset: Iterable[int]) -> CycleSet:
    """The cycle set x*y = lam[x]^-1(y) restricted to a union of lambda orbits.

    Points of the result are the elements of the subset in increasing
    order. Raises ValueError when the subset is not lambda-closed.
    """
    pts = sorted(set(subset))
    if not is_lambda_closed(B, pts):
        raise ValueError("subset is not a union of lambda orbits")
    pos = {x: i for i, x in enumerate(pts)}
    rows = []
    for x in pts:
        li = inverse(B.lam[x])
        rows.append(tuple(pos[li[y]] for y in pts))
    return CycleSet(tuple(rows))


def derived_cycle_set(B: LeftBrace) -> CycleSet:
    """The cycle set a*b = lam[a]^-1(b) on the whole carrier."""
    return sub_cycle_set(B, range(B.order))


def transitive_cycle_bases(B: LeftBrace) -> tuple[tuple[int, ...], ...]:
    """Every single lambda orbit whose additive span is the whole carrier."""
    m = B.order
    return tuple(o for o in lambda_orbits(B)
                 if len(additive_span(B, o)) == m)


def socle(B: LeftBrace) -> frozenset[int]:
    """The elements with a+b = a o b for all b, i.e. lam[a] = id; an ideal."""
    ident = identity(B.order)
    s = frozenset(a for a in range(B.order) if B.lam[a] == ident)
    why = ideal_violation(B, s)
    if why is not None:
        raise ConsistencyError(f"socle failed the ideal check: {why}")
    return s


def ideal_violation(B: LeftBrace, subset: Iterable[int]) -> str | None:
    """None when the subset is an ideal, else a description of the failure.

    Checks: multiplicative subgroup, invariance under every lam[a],
    normality, and (a consequence, asserted anyway) closure under + and -.
    """
    s = set(subset)
    m = B.order
    if 0 not in s:
        return "does not contain 0"
    for a in s:
        if B.inv[a] not in s:
            return f"not closed under multiplicative inverse at {a}"
        for b in s:
            if B.mul[a][b] not in s:
                return f"not multiplicatively closed at ({a},{b})"
    for a in range(m):
        la = B.lam[a]
        for x in s:
            if la[x] not in s:
                return f"not lambda-invariant: lam[{a}]({x}) outside"
    for g in range(m):
        for x in s:
            if B.mul[B.mul[g][x]][B.inv[g]] not in s:
                return f"not normal: conjugate of {x} by {g} outside"
    for a in s:
        if B.neg[a] not in s:
            return f"not closed under negation at {a}"
        for b in s:
            if B.add[a][b] not in s:
                return f"not additively closed at ({a},{b})"
    return None


def is_left_ideal(B: LeftBrace, subset: Iterable[int]) -> bool:
    """Multiplicative subgroup invariant under every lam[a] (no normality)."""
    s = set(subset)
    if 0 not in s:
        return False
    if any(B.inv[a] not in s or any(B.mul[a][b] not in s for b in s) for a in s):
        return False
    return is_lambda_closed(B, s)


def is_ideal(B: LeftBrace, subset: Iterable[int]) -> bool:
    return ideal_violation(B, subset) is None


def ideal_closure(B: LeftBrace, subset: Iterable[int]) -> frozenset[int]:
    """Smallest ideal containing the given elements.

    Iterates all closure rules (product, inverse, every lam[a],
    conjugation) jointly to a fixpoint, then asserts additive closure,
    which must follow.
    """
    m = B.order
    s = set(subset) | {0}
    while True:
        new = set()
        for a in s:
            if B.inv[a] not in s:
                new.add(B.inv[a])
            for b in s:
                p = B.mul[a][b]
                if p not in s:
                    new.add(p)
        for g in range(m):
            lg = B.lam[g]
            for x in s:
                if lg[x] not in s:
                    new.add(lg[x])
                c = B.mul[B.mul[g][x]][B.inv[g]]
                if c not in s:
                    new.add(c)
        if not new:
            break
        s |= new
    result = frozenset(s)
    why = ideal_violation(B, result)
    if why is not None:
        raise ConsistencyError(f"ideal closure is not an ideal: {why}")
    return result


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of a brace, sorted by size then content; minimal non-zero
    ideals marked."""

    ideals: tuple[frozenset[int], ...]
    minimal: tuple[frozenset[int], ...]


def all_ideals(B: LeftBrace) -> IdealLattice:
    """Every ideal, as the join closure of the principal ideals.

    Every ideal is the join of the principal ideals of its elements, so
    closing the principal family under pairwise join finds them all.
    """
    m = B.order
    zero = frozenset({0})
    found = {zero}
    for a in range(1, m):
        found.add(ideal_closure(B, {a}))
    while True:
        new = set()
        for i in found:
            for j in found:
                if i < j or j < i or i == j:
                    continue
                u = ideal_closure(B, i | j)
                if u not in found:
                    new.add(u)
        if not new:
            break
        found |= new
    ideals = tuple(sorted(found, key=lambda s: (len(s), sorted(s))))
    nonzero = [i for i in ideals if len(i) > 1]
    minimal = tuple(i for i in nonzero
                    if not any(j < i for j in nonzero))
    return IdealLattice(ideals, minimal)


def is_simple_brace(B: LeftBrace) -> bool:
    """True iff the only ideals are {0} and the carrier.

    The order-1 brace has a single ideal and is reported non-simple.
    """
    return len(all_ideals(B).ideals) == 2


def quotient_brace(B: LeftBrace, ideal: Iterable[int]) -> LeftBrace:
    """The brace on the cosets of an ideal.

    Cosets are numbered by least element in increasing order, so the coset
    of 0 is 0. Raises BraceError when the induced tables depend on the
    choice of representatives, which signals non-ideal input.
    """
    m = B.order
    s = set(ideal)
    if 0 not in s:
        raise BraceError("quotient by a subset not containing 0")
    coset_of = [None] * m
    for a in range(m):
        if coset_of[a] is None:
            block = {B.mul[a][i] for i in s}
            if len(block) != len(s):
                raise BraceError("subset does not tile the carrier into cosets")
            least = min(block)
            for b in block:
                if coset_of[b] is not None:
                    raise BraceError("cosets overlap; subset is not a subgroup")
                coset_of[b] = least
    reps = sorted(set(coset_of))
    num = {r: i for i, r in enumerate(reps)}
    proj = [num[coset_of[a]] for a in range(m)]
    k = len(reps)
    qadd = [[None] * k for _ in range(k)]
    qmul = [[None] * k for _ in range(k)]
    for a in range(m):
        pa = proj[a]
        for b in range(m):
            pb = proj[b]
            for table, q in ((B.add, qadd), (B.mul, qmul)):
                v = proj[table[a][b]]
                if q[pa][pb] is None:
                    q[pa][pb] = v
                elif q[pa][pb] != v:
                    raise BraceError(
                        f"quotient operation depends on representatives at"
                        f" coset pair ({pa},{pb}); subset is not an ideal")
    return LeftBrace(_as_table(qadd), _as_table(qmul))


def ideal_action_orbits(B: LeftBrace, ideal: Iterable[int],
                        points: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Orbits of a lambda-closed point set under the maps lam[i], i in the ideal.

    Those maps form a group because lam is multiplicative and the ideal is
    a multiplicative subgroup.
    """
    return orbits([B.lam[i] for i in sorted(set(ideal))], points)
