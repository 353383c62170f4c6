import itertools
import random

import pytest

from ybe import (CycleSet, CycleSetError, SolutionError, SolutionYBE,
                 are_isomorphic, congruence_closure, cyclic_cycle_set,
                 from_solution, is_congruence, is_indecomposable,
                 is_irretractable, is_simple, multipermutation_level,
                 permutation_group, quotient, relabel, retraction,
                 to_solution, trivial_cycle_set, validate)
from ybe.cycleset import (all_congruences, canonical_partition,
                          congruence_classes, discrete_congruence,
                          full_congruence)
from ybe.io_catalog import parse_perm
from ybe.perm import identity, inverse


def braid_holds(s):
    """Independent braid check, not trusting the SolutionYBE constructor."""
    n = s.size
    for x, y, z in itertools.product(range(n), repeat=3):
        a, b = s.r(x, y)
        c, d = s.r(b, z)
        e, f = s.r(a, c)
        lhs = (e, f, d)
        a2, b2 = s.r(y, z)
        c2, d2 = s.r(x, a2)
        e2, f2 = s.r(d2, b2)
        rhs = (c2, e2, f2)
        if lhs != rhs:
            return False
    return True


def test_trivial_table_is_valid():
    assert validate(trivial_cycle_set(3).sigma).ok


def test_catalog_p4_table_is_valid(entries):
    assert validate(entries["P4"].cycle_set.sigma).ok


def test_invalid_two_point_table_with_witness():
    rows = (identity(2), (1, 0))
    report = validate(rows)
    assert not report.ok
    failed = report.failures[0]
    assert failed.name == "cycle-set identity"
    assert failed.witness == (0, 1, 0)
    with pytest.raises(CycleSetError):
        CycleSet(rows)


def test_non_bijective_row_rejected():
    report = validate(((0, 0), (0, 1)))
    assert not report.ok
    assert report.failures[0].name == "left-multiplications bijective"


def test_empty_cycle_set_rejected():
    with pytest.raises(CycleSetError):
        CycleSet(())


def test_to_solution_of_trivial_is_flip():
    s = to_solution(trivial_cycle_set(3))
    for x in range(3):
        for y in range(3):
            assert s.r(x, y) == (y, x)


def test_to_solution_p4_braid_checked_independently(entries):
    s = to_solution(entries["P4"].cycle_set)
    assert braid_holds(s)
    for x in range(4):
        for y in range(4):
            assert s.r(*s.r(x, y)) == (x, y)


def test_to_solution_cyclic_all_lambdas_equal():
    s = to_solution(cyclic_cycle_set(5))
    back = inverse(tuple((i + 1) % 5 for i in range(5)))
    assert all(l == back for l in s.lam)


def test_solution_round_trips(entries):
    for e in entries.values():
        X = e.cycle_set
        assert from_solution(to_solution(X)) == X
    s = to_solution(entries["P4"].cycle_set)
    t = to_solution(from_solution(s))
    assert (t.lam, t.rho) == (s.lam, s.rho)


def test_from_solution_of_constant_three_cycle():
    lam = tuple(parse_perm("(1,2,3)", 3) for _ in range(3))
    rho = tuple(parse_perm("(1,3,2)", 3) for _ in range(3))
    X = from_solution(SolutionYBE(lam, rho))
    assert len(set(X.sigma)) == 1
    assert are_isomorphic(X, cyclic_cycle_set(3)) is not None


def test_degenerate_solution_rejected():
    bad = ((0, 0, 1), (1, 2, 0), (2, 0, 1))
    with pytest.raises(SolutionError):
        SolutionYBE(bad, bad)


def test_non_involutive_solution_rejected():
    # r(x,y) = (y+1, x) on Z_3 is bijective in each slot but not involutive
    lam = tuple(tuple((i + 1) % 3 for i in range(3)) for _ in range(3))
    rho = tuple(identity(3) for _ in range(3))
    with pytest.raises(SolutionError):
        SolutionYBE(lam, rho)


def test_permutation_group_orders(entries):
    assert permutation_group(entries["P4"].cycle_set).order == 8
    assert permutation_group(entries["E12a"].cycle_set).order == 24
    assert permutation_group(entries["E27"].cycle_set).order == 81


def test_indecomposability():
    assert not is_indecomposable(trivial_cycle_set(2))
    assert is_indecomposable(cyclic_cycle_set(5))


def test_e16_indecomposable(entries):
    assert is_indecomposable(entries["E16"].cycle_set)


def test_retraction_of_cyclic_collapses():
    R, proj = retraction(cyclic_cycle_set(5))
    assert R.size == 1
    assert proj == (0, 0, 0, 0, 0)


def test_retraction_of_p4_is_itself(entries):
    X = entries["P4"].cycle_set
    R, proj = retraction(X)
    assert R.size == 4 and proj == (0, 1, 2, 3)


def test_retraction_of_trivial_three():
    R, _ = retraction(trivial_cycle_set(3))
    assert R.size == 1


def test_retraction_projection_is_epimorphism(entries):
    for X in [cyclic_cycle_set(4), entries["E12b"].cycle_set,
              trivial_cycle_set(3)]:
        R, proj = retraction(X)
        for x in range(X.size):
            for y in range(X.size):
                assert proj[X.op(x, y)] == R.op(proj[x], proj[y])


def test_irretractability(entries):
    assert is_irretractable(entries["E12b"].cycle_set)
    assert not is_irretractable(cyclic_cycle_set(7))
    assert is_irretractable(CycleSet((identity(1),)))


def test_multipermutation_levels(entries):
    assert multipermutation_level(CycleSet((identity(1),))) == 0
    assert multipermutation_level(cyclic_cycle_set(5)) == 1
    assert multipermutation_level(entries["P4"].cycle_set) is None


def test_congruence_closure_empty_is_discrete(entries):
    X = entries["P4"].cycle_set
    assert congruence_closure(X, []) == discrete_congruence(4)


def test_congruence_closure_p4_pair_is_full(entries):
    X = entries["P4"].cycle_set
    assert congruence_closure(X, [(0, 1)]) == full_congruence(4)


def test_congruence_closure_trivial_cycle_set():
    X = trivial_cycle_set(3)
    assert congruence_closure(X, [(0, 1)]) == (0, 0, 2)


def test_congruence_closure_monotone_and_idempotent():
    X = cyclic_cycle_set(4)
    c1 = congruence_closure(X, [(0, 2)])
    c2 = congruence_closure(X, [(0, 2), (0, 1)])
    # monotone: c1 refines c2
    assert all(c2[x] == c2[c1[x]] for x in range(4))
    # idempotent: feeding the classes back changes nothing
    again = congruence_closure(X, [(x, c1[x]) for x in range(4)])
    assert again == c1


def test_quotient_by_discrete_and_full(entries):
    X = entries["P4"].cycle_set
    assert quotient(X, discrete_congruence(4)) == X
    assert quotient(X, full_congruence(4)).size == 1


def test_quotient_of_cyclic_four():
    X = cyclic_cycle_set(4)
    c = canonical_partition((0, 1, 0, 1))
    assert is_congruence(X, c)
    Q = quotient(X, c)
    assert Q == cyclic_cycle_set(2)


def test_quotient_rejects_non_congruence():
    X = cyclic_cycle_set(4)
    with pytest.raises(CycleSetError):
        quotient(X, (0, 0, 2, 3))


def test_quotients_validate_for_all_congruences(entries):
    for X in [cyclic_cycle_set(6), trivial_cycle_set(4),
              entries["P4"].cycle_set]:
        for c in all_congruences(X):
            assert quotient(X, c).size == len(congruence_classes(c))


def test_simplicity_oracle(entries):
    assert is_simple(entries["P4"].cycle_set)
    assert not is_simple(trivial_cycle_set(3))
    assert not is_simple(CycleSet((identity(1),)))
    assert is_simple(cyclic_cycle_set(7))
    assert not is_simple(cyclic_cycle_set(6))


def test_isomorphism_to_self_and_relabeling(entries):
    X = entries["P4"].cycle_set
    assert are_isomorphic(X, X) == (0, 1, 2, 3)
    g = parse_perm("(1,3)", 4)
    Y = relabel(X, g)
    f = are_isomorphic(X, Y)
    assert f is not None
    for x in range(4):
        for y in range(4):
            assert f[X.op(x, y)] == Y.op(f[x], f[y])


def test_isomorphism_distinguishes(entries):
    assert are_isomorphic(entries["P4"].cycle_set, trivial_cycle_set(4)) is None
    assert are_isomorphic(trivial_cycle_set(3), trivial_cycle_set(4)) is None


def test_isomorphism_randomized_relabelings(entries):
    rng = random.Random(11)
    X = entries["E12a"].cycle_set
    for _ in range(3):
        images = list(range(12))
        rng.shuffle(images)
        Y = relabel(X, tuple(images))
        assert are_isomorphic(X, Y) is not None
