"""Finite non-degenerate cycle sets and their involutive Yang-Baxter solutions.

A cycle set is a finite set X with one binary operation x*y whose left
multiplications sigma_x: y -> x*y are bijective and satisfy

    (x*y)*(x*z) = (y*x)*(y*z)   for all x, y, z,

and whose squaring map T(x) = x*x is bijective (non-degeneracy).  Such
tables are in one-to-one correspondence with involutive non-degenerate
set-theoretic solutions r(x, y) = (lambda_x(y), rho_y(x)) of the
Yang-Baxter equation via lambda_x = sigma_x^-1.

Points are 0-based internally and 1-based in every message and text format.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ConsistencyError, CycleSetError, SolutionError
from .perm import Perm, compose, cycle_type, identity, inverse, is_perm, orbits

Congruence = tuple[int, ...]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one axiom check; witness is 0-based, detail human-readable."""

    name: str
    ok: bool
    witness: tuple | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if c.ok else f"FAIL {c.detail}"
            lines.append(f"{c.name}: {status}")
        return "\n".join(lines)


def validate(sigma: Iterable[Perm]) -> ValidationReport:
    """Check a candidate sigma table against all cycle-set axioms.

    Reports bijectivity of each row, the cycle-set identity over all n^3
    triples, and bijectivity of the squaring map, each with a witness on
    failure (1-based in the detail text).
    """
    rows = tuple(tuple(r) for r in sigma)
    n = len(rows)
    checks = []

    bad_row = None
    for x, row in enumerate(rows):
        if len(row) != n or not is_perm(row):
            bad_row = x
            break
    if bad_row is None:
        checks.append(CheckResult("left-multiplications bijective", True))
    else:
        checks.append(CheckResult(
            "left-multiplications bijective", False, (bad_row,),
            f"row {bad_row + 1} is not a permutation of 1..{n}"))
        return ValidationReport(tuple(checks))

    witness = None
    for x in range(n):
        sx = rows[x]
        for y in range(n):
            sxy = rows[sx[y]]
            syx = rows[rows[y][x]]
            sy = rows[y]
            for z in range(n):
                if sxy[sx[z]] != syx[sy[z]]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    if witness is None:
        checks.append(CheckResult("cycle-set identity", True))
    else:
        x, y, z = witness
        checks.append(CheckResult(
            "cycle-set identity", False, witness,
            f"(x*y)*(x*z) != (y*x)*(y*z) at (x,y,z) = ({x + 1},{y + 1},{z + 1})"))

    square = tuple(rows[x][x] for x in range(n))
    if is_perm(square):
        checks.append(CheckResult("squaring map bijective", True))
    else:
        pair = None
        for x in range(n):
            for y in range(x + 1, n):
                if square[x] == square[y]:
                    pair = (x, y)
                    break
            if pair:
                break
        checks.append(CheckResult(
            "squaring map bijective", False, pair,
            f"x*x collides for x = {pair[0] + 1} and x = {pair[1] + 1}"))

    return ValidationReport(tuple(checks))


@dataclass(frozen=True)
class CycleSet:
    """A validated non-degenerate cycle set; sigma[x][y] = x*y.

    Construction re-runs the full axiom check, so a held value is always
    valid. Immutable and hashable.
    """

    sigma: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(tuple(r) for r in self.sigma))
        if self.size == 0:
            raise CycleSetError("a cycle set must be non-empty")
        report = validate(self.sigma)
        if not report.ok:
            first = report.failures[0]
            raise CycleSetError(f"not a cycle set: {first.detail}",
                                [(c.name, c.witness, c.detail) for c in report.failures])

    @property
    def size(self) -> int:
        return len(self.sigma)

    def op(self, x: int, y: int) -> int:
        return self.sigma[x][y]


def trivial_cycle_set(n: int) -> CycleSet:
    """x*y = y on n points."""
    return CycleSet(tuple(identity(n) for _ in range(n)))


def cyclic_cycle_set(n: int) -> CycleSet:
    """Every row the same n-cycle i -> i+1; the standard model on Z_n."""
    shift = tuple((i + 1) % n for i in range(n))
    return CycleSet(tuple(shift for _ in range(n)))


@dataclass(frozen=True)
class SolutionYBE:
    """An involutive non-degenerate solution r(x,y) = (lam[x][y], rho[y][x]).

    Construction verifies non-degeneracy, involutivity on all pairs, and
    the braid relation on all triples.
    """

    lam: tuple[Perm, ...]
    rho: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(tuple(p) for p in self.lam))
        object.__setattr__(self, "rho", tuple(tuple(p) for p in self.rho))
        n = len(self.lam)
        if len(self.rho) != n:
            raise SolutionError("lambda and rho families differ in length")
        for fam, name in ((self.lam, "lambda"), (self.rho, "rho")):
            for x, p in enumerate(fam):
                if len(p) != n or not is_perm(p):
                    raise SolutionError(
                        f"degenerate: {name}_{x + 1} is not a permutation",
                        [(f"{name} bijective", (x,), "")])
        for x in range(n):
            for y in range(n):
                u, v = self.r(x, y)
                if self.r(u, v) != (x, y):
                    raise SolutionError(
                        f"not involutive at pair ({x + 1},{y + 1})",
                        [("involutive", (x, y), "")])
        for t in itertools.product(range(n), repeat=3):
            lhs = _r12(self, _r23(self, _r12(self, t)))
            rhs = _r23(self, _r12(self, _r23(self, t)))
            if lhs != rhs:
                x, y, z = t
                raise SolutionError(
                    f"braid relation fails at ({x + 1},{y + 1},{z + 1})",
                    [("braid", t, "")])

    @property
    def size(self) -> int:
        return len(self.lam)

    def r(self, x: int, y: int) -> tuple[int, int]:
        return (self.lam[x][y], self.rho[y][x])


def _r12(s: SolutionYBE, t: tuple[int, int, int]) -> tuple[int, int, int]:
    u, v = s.r(t[0], t[1])
    return (u, v, t[2])


def _r23(s: SolutionYBE, t: tuple[int, int, int]) -> tuple[int, int, int]:
    u, v = s.r(t[1], t[2])
    return (t[0], u, v)


def to_solution(X: CycleSet) -> SolutionYBE:
    """The solution associated to a cycle set: r(x,y) = (s_x^-1(y), s_x^-1(y)*x)."""
    n = X.size
    lam = tuple(inverse(s) for s in X.sigma)
    rho = tuple(tuple(X.sigma[lam[x][y]][x] for x in range(n)) for y in range(n))
    return SolutionYBE(lam, rho)


def from_solution(s: SolutionYBE) -> CycleSet:
    """The cycle set of an involutive solution: sigma_x = lambda_x^-1.

    Inverse of to_solution; round trips are exact in both directions.
    """
    return CycleSet(tuple(inverse(p) for p in s.lam))


def permutation_group(X: CycleSet):
    """The permutation group generated by the rows sigma_x."""
    from .perm import group_closure

    return group_closure(X.sigma, degree=X.size)


def is_indecomposable(X: CycleSet) -> bool:
    """True iff the row group acts transitively on the points."""
    return len(orbits(X.sigma, range(X.size))) == 1


def is_irretractable(X: CycleSet) -> bool:
    """True iff all rows are pairwise distinct."""
    return len(set(X.sigma)) == X.size


def retraction(X: CycleSet) -> tuple[CycleSet, tuple[int, ...]]:
    """Quotient by the relation sigma_x = sigma_y, with the projection map.

    Classes are numbered by first appearance. The induced table is checked
    to be independent of representatives; a dependence would contradict the
    validity of X and raises ConsistencyError.
    """
    n = X.size
    class_of_row: dict[Perm, int] = {}
    proj = []
    reps = []
    for x, row in enumerate(X.sigma):
        if row not in class_of_row:
            class_of_row[row] = len(reps)
            reps.append(x)
        proj.append(class_of_row[row])
    k = len(reps)
    table = tuple(tuple(proj[X.sigma[reps[a]][reps[b]]] for b in range(k))
                  for a in range(k))
    for x in range(n):
        for y in range(n):
            if proj[X.sigma[x][y]] != table[proj[x]][proj[y]]:
                raise ConsistencyError(
                    "retraction table depends on representatives at "
                    f"({x + 1},{y + 1}); input cannot be a valid cycle set")
    return CycleSet(table), tuple(proj)


def multipermutation_level(X: CycleSet) -> int | None:
    """Number of retractions needed to reach a point, or None if stuck.

    Returns the least k with |Ret^k(X)| = 1; None when iteration reaches an
    irretractable cycle set with more than one element.
    """
    level = 0
    cur = X
    while cur.size > 1:
        nxt, _ = retraction(cur)
        if nxt.size == cur.size:
            return None
        cur = nxt
        level += 1
    return level


# -- congruences ------------------------------------------------------------

def canonical_partition(labels: Iterable[int]) -> Congruence:
    """Relabel a class map so each point maps to the least member of its class."""
    labels = tuple(labels)
    least: dict[int, int] = {}
    for x, c in enumerate(labels):
        if c not in least:
            least[c] = x
    return tuple(least[c] for c in labels)


def discrete_congruence(n: int) -> Congruence:
    return tuple(range(n))


def full_congruence(n: int) -> Congruence:
    return tuple(0 for _ in range(n))


def congruence_classes(c: Congruence) -> tuple[tuple[int, ...], ...]:
    classes: dict[int, list[int]] = {}
    for x, r in enumerate(c):
        classes.setdefault(r, []).append(x)
    return tuple(tuple(cl) for cl in sorted(classes.values()))


def is_congruence(X: CycleSet, c: Congruence) -> bool:
    """Exhaustive compatibility check: x~y forces x*c ~ y*c and c*x ~ c*y."""
    n = X.size
    if len(c) != n or canonical_partition(c) != tuple(c):
        return False
    for x in range(n):
        for y in range(x + 1, n):
            if c[x] != c[y]:
                continue
            sx, sy = X.sigma[x], X.sigma[y]
            for z in range(n):
                if c[sx[z]] != c[sy[z]]:
                    return False
                sz = X.sigma[z]
                if c[sz[x]] != c[sz[y]]:
                    return False
    return True


def congruence_closure(X: CycleSet, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence identifying the given pairs.

    Union-find with a work list: whenever a ~ b is established, a*c ~ b*c
    and c*a ~ c*b are queued for every c, until stable.
    """
    n = X.size
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pending = list(pairs)
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        sa, sb = X.sigma[a], X.sigma[b]
        for c in range(n):
            pending.append((sa[c], sb[c]))
            sc = X.sigma[c]
            pending.append((sc[a], sc[b]))
    return canonical_partition(tuple(find(x) for x in range(n)))


def quotient(X: CycleSet, c: Congruence) -> CycleSet:
    """Quotient cycle set on the classes of a congruence.

    Classes are numbered by least member in increasing order. Raises
    CycleSetError when the class map is not actually a congruence (the
    induced table would depend on representatives).
    """
    n = X.size
    c = canonical_partition(c)
    if not is_congruence(X, c):
        raise CycleSetError("class map is not a congruence of the cycle set")
    reps = sorted(set(c))
    num = {r: i for i, r in enumerate(reps)}
    proj = tuple(num[c[x]] for x in range(n))
    k = len(reps)
    table = [[None] * k for _ in range(k)]
    for x in range(n):
        for y in range(n):
            a, b, v = proj[x], proj[y], proj[X.sigma[x][y]]
            if table[a][b] is None:
                table[a][b] = v
            elif table[a][b] != v:
                raise CycleSetError(
                    f"quotient table depends on representatives at class pair"
                    f" ({a + 1},{b + 1})")
    return CycleSet(tuple(tuple(row) for row in table))


def is_simple(X: CycleSet) -> bool:
    """Simplicity by brute force: more than one point, and every pair
    generates the full congruence, so the only quotients are X itself and
    a point."""
    n = X.size
    if n <= 1:
        return False
    full = full_congruence(n)
    for x in range(n):
        for y in range(x + 1, n):
            if congruence_closure(X, [(x, y)]) != full:
                return False
    return True


def all_congruences(X: CycleSet) -> tuple[Congruence, ...]:
    """Every congruence, as the join closure of the principal ones."""
    n = X.size
    found = {discrete_congruence(n)}
    for x in range(n):
        for y in range(x + 1, n):
            found.add(congruence_closure(X, [(x, y)]))
    while True:
        new = set()
        for c1 in found:
            for c2 in found:
                pairs = [(x, c1[x]) for x in range(n)] + [(x, c2[x]) for x in range(n)]
                j = congruence_closure(X, pairs)
                if j not in found:
                    new.add(j)
        if not new:
            break
        found |= new
    return tuple(sorted(found))


# -- isomorphism ------------------------------------------------------------

def relabel(X: CycleSet, g: Perm) -> CycleSet:
    """Transport the structure along g: new sigma_{g(x)} = g sigma_x g^-1."""
    n = X.size
    ginv = inverse(g)
    table = [None] * n
    for x in range(n):
        table[g[x]] = compose(g, compose(X.sigma[x], ginv))
    return CycleSet(tuple(table))


def are_isomorphic(X: CycleSet, Y: CycleSet) -> Perm | None:
    """A bijection f with f(x*y) = f(x)*f(y), or None.

    Backtracking over images with two prunes: candidate images must have
    rows of equal cycle type, and each placed pair forces the image of its
    product, which is propagated immediately.
    """
    n = X.size
    if Y.size != n:
        return None
    tx = [cycle_type(r) for r in X.sigma]
    ty = [cycle_type(r) for r in Y.sigma]
    if sorted(tx) != sorted(ty):
        return None
    cands = [[y for y in range(n) if ty[y] == tx[x]] for x in range(n)]
    f = [-1] * n
    used = [False] * n

    def place(x: int, y: int, trail: list[int]) -> bool:
        f[x] = y
        used[y] = True
        trail.append(x)
        queue = [x]
        while queue:
            a = queue.pop()
            for b in range(n):
                if f[b] < 0:
                    continue
                for u, v in ((a, b), (b, a)):
                    c = X.sigma[u][v]
                    img = Y.sigma[f[u]][f[v]]
                    if f[c] < 0:
                        if used[img]:
                            return False
                        f[c] = img
                        used[img] = True
                        trail.append(c)
                        queue.append(c)
                    elif f[c] != img:
                        return False
        return True

    def unwind(trail: list[int], depth: int):
        while len(trail) > depth:
            c = trail.pop()
            used[f[c]] = False
            f[c] = -1

    def search() -> bool:
        x = next((i for i in range(n) if f[i] < 0), -1)
        if x < 0:
            return True
        for y in cands[x]:
            if used[y]:
                continue
            trail: list[int] = []
            if place(x, y, trail) and search():
                return True
            unwind(trail, 0)
        return False

    if search():
        return tuple(f)
    return None


def canonical_form(X: CycleSet) -> tuple[Perm, ...]:
    """Least sigma table over all relabelings; equal iff isomorphic."""
    n = X.size
    best = None
    for g in itertools.permutations(range(n)):
        t = relabel(X, g).sigma
        if best is None or t < best:
            best = t
    return best


# -- enumeration ------------------------------------------------------------

def enumerate_cycle_sets(n: int, up_to_iso: bool = False,
                         size_guard: int = 5) -> Iterator[CycleSet]:
    """All valid cycle sets on n points, rows in lexicographic order.

    Rows are chosen one at a time; a partial table is abandoned as soon as
    some fully-determined instance of the cycle-set identity fails or the
    squaring map collides on the assigned prefix. With up_to_iso, only the
    least table of each isomorphism class is yielded.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    if n > size_guard:
        raise ValueError(f"size {n} exceeds the enumeration guard {size_guard}")
    all_rows = sorted(itertools.permutations(range(n)))
    rows: list[Perm | None] = [None] * n

    def partial_ok(k: int) -> bool:
        for x in range(k + 1):
            sx = rows[x]
            for y in range(k + 1):
                sy = rows[y]
                a, b = sx[y], sy[x]
                if a > k or b > k or max(x, y, a, b) != k:
                    continue
                sa, sb = rows[a], rows[b]
                for z in range(n):
                    if sa[sx[z]] != sb[sy[z]]:
                        return False
        squares = [rows[x][x] for x in range(k + 1)]
        return len(set(squares)) == len(squares)

    def fill(k: int) -> Iterator[CycleSet]:
        for r in all_rows:
            rows[k] = r
            if not partial_ok(k):
                continue
            if k + 1 == n:
                X = CycleSet(tuple(rows))
                if not up_to_iso or X.sigma == canonical_form(X):
                    yield X
            else:
                yield from fill(k + 1)
        rows[k] = None

    yield from fill(0)
