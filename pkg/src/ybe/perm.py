"""Permutations of {0..n-1} in word form, group closure, orbits.

A permutation of degree n is a tuple of images: p[i] is where i goes.
Composition is right-to-left throughout the package: (p*q)(i) = p(q(i)),
q applied first. Every module states its operations in this convention.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(images: Sequence[int]) -> bool:
    """True iff images lists each of 0..n-1 exactly once."""
    n = len(images)
    seen = [False] * n
    for x in images:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    return True


def perm(images: Iterable[int]) -> Perm:
    p = tuple(images)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: result[i] = p[q[i]]."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Non-trivial cycles of p, each starting at its least point, ordered by that point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Multiset of cycle lengths (fixed points included), sorted descending."""
    lengths = [len(c) for c in cycles(p)]
    lengths += [1] * (len(p) - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by its full element list.

    Elements are listed in breadth-first discovery order starting from the
    identity, so elements[0] is the identity and ids are stable across runs.
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    index: dict[Perm, int] = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.index


def group_closure(gens: Iterable[Perm], degree: int | None = None) -> PermGroup:
    """Close a generating set under composition by breadth-first search.

    Every product of generators is reached; inverses come for free because
    each generator has finite order. Ids follow discovery order.
    """
    gens = tuple(gens)
    for g in gens:
        if not is_perm(g):
            raise ValueError(f"generator is not a permutation: {g}")
    if gens:
        degs = {len(g) for g in gens}
        if len(degs) > 1:
            raise ValueError(f"generators of mixed degree: {sorted(degs)}")
        degree = degs.pop()
    elif degree is None:
        raise ValueError("degree is required when there are no generators")

    ident = identity(degree)
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    return PermGroup(degree, gens, tuple(elements), index)


def orbits(perms: Iterable[Perm], points: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Partition of points into orbits under the group the perms generate.

    The point set must be invariant under every permutation given.
    Classes are sorted, and listed by least member.
    """
    pts = sorted(set(points))
    pos = {x: i for i, x in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p in perms:
        for x in pts:
            y = p[x]
            if y not in pos:
                raise ValueError(f"point set not invariant: {x} -> {y}")
            ri, rj = find(pos[x]), find(pos[y])
            if ri != rj:
                parent[rj] = ri

    classes: dict[int, list[int]] = {}
    for x in pts:
        classes.setdefault(find(pos[x]), []).append(x)
    return tuple(tuple(c) for c in sorted(classes.values()))


def is_transitive(group: PermGroup | Iterable[Perm], points: Iterable[int]) -> bool:
    perms = group.elements if isinstance(group, PermGroup) else group
    return len(orbits(perms, points)) == 1
