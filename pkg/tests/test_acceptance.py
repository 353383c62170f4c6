"""The acceptance gate: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -s` to see the PASS lines and
their timings. Every expected value here is exact; the time bounds are
part of the criteria.
"""

import itertools
import time

from ybe import (all_congruences, all_ideals, catalog,
                 check_minimal_ideal, classify_cycle_set, congruence_to_ideal,
                 enumerate_cycle_sets, from_solution,
                 group_brace, ideal_action_orbits, ideal_to_congruence,
                 is_indecomposable, is_irretractable, is_simple,
                 permutation_group, socle, socle_quotient_check,
                 sub_cycle_set, theorem_characterization, to_solution,
                 validate, validate_brace)
from ybe.characterize import is_prime
from ybe.io_catalog import catalog_get
from ybe.perm import is_perm


class Timer:
    def __init__(self, label, limit):
        self.label = label
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        verdict = "PASS" if exc_type is None else "FAIL"
        print(f"{self.label}: {verdict} ({elapsed:.2f}s, limit {self.limit:.0f}s)")
        if exc_type is None:
            assert elapsed < self.limit, (
                f"{self.label} exceeded its time budget: {elapsed:.2f}s")
        return False


def catalog_entry_checks(entry_id, group_order, ideal_sizes, proper_ideal_size):
    """Shared body for criteria 1 to 5: orders, ideals, transitivity,
    simplicity, and the three-way equivalence."""
    X = catalog_get(entry_id).cycle_set
    assert validate(X.sigma).ok
    assert is_indecomposable(X)
    assert is_irretractable(X)
    assert is_simple(X)
    assert permutation_group(X).order == group_order
    R = group_brace(X)
    assert socle(R.brace) == frozenset({0})
    lattice = all_ideals(R.brace)
    assert tuple(len(i) for i in lattice.ideals) == ideal_sizes
    base = sorted(R.embedded_base)
    proper = next(i for i in lattice.ideals if len(i) == proper_ideal_size)
    assert len(ideal_action_orbits(R.brace, proper, base)) == 1
    rep = theorem_characterization(R.brace, R.embedded_base)
    assert rep.preconditions_ok
    assert rep.cond1_simple is True
    assert rep.cond2_all_nonzero_ideals_transitive is True
    assert rep.cond3_unique_minimal_transitive is True
    assert rep.equivalent
    return X, R, rep


def test_criterion_1_size_4_example():
    with Timer("criterion 1 (size-4 example)", 1.0):
        catalog_entry_checks("P4", 8, (1, 4, 8), 4)


def test_criterion_2_size_12_simple_brace():
    with Timer("criterion 2 (size-12, simple brace)", 10.0):
        X, R, rep = catalog_entry_checks("E12a", 24, (1, 24), 24)
        from ybe import is_simple_brace

        assert is_simple_brace(R.brace)
        # simple brace plus transitive base forces a simple base cycle set
        c = classify_cycle_set(X)
        assert c.simple and c.branch == "general"


def test_criterion_3_size_12_order_48():
    with Timer("criterion 3 (size-12, order-48 brace)", 30.0):
        catalog_entry_checks("E12b", 48, (1, 24, 48), 24)


def test_criterion_4_size_16():
    with Timer("criterion 4 (size-16 example)", 30.0):
        catalog_entry_checks("E16", 32, (1, 16, 32), 16)


def test_criterion_5_size_27_and_minimal_ideal():
    with Timer("criterion 5 (size-27 example)", 120.0):
        X, R, rep = catalog_entry_checks("E27", 81, (1, 27, 81), 27)
        mrep = check_minimal_ideal(X)
        assert mrep.ok
        assert mrep.unique_minimal and mrep.minimal_size == 27
        assert mrep.span_matches and mrep.sigma_span_matches
        assert mrep.quotient_order == 3
        assert mrep.quotient_trivial and mrep.quotient_cyclic


def corpus_with_braces():
    """Catalog entries plus every cycle set of sizes 2 to 4, with braces."""
    items = [(e.id, e.cycle_set) for e in catalog()]
    for n in (2, 3, 4):
        for k, X in enumerate(enumerate_cycle_sets(n)):
            items.append((f"enum{n}-{k}", X))
    return [(name, X, group_brace(X)) for name, X in items]


def test_criterion_6_theorem_equivalence_harness():
    with Timer("criterion 6 (three-way equivalence, full corpus)", 120.0):
        checked = 0
        for name, X, R in corpus_with_braces():
            rep = theorem_characterization(R.brace, R.embedded_base)
            if rep.preconditions_ok:
                assert rep.equivalent, name
                checked += 1
        assert checked > 0
        print(f"  (equivalence asserted on {checked} instances)", end=" ")


def test_criterion_7_galois_correspondence():
    with Timer("criterion 7 (ideal/congruence correspondence)", 120.0):
        for name, X, R in corpus_with_braces():
            B = R.brace
            base = R.embedded_base
            rep = theorem_characterization(B, base)
            if not rep.preconditions_ok:
                continue
            # every ideal induces a congruence; the check is internal and
            # raises on a compatibility failure
            for ideal in all_ideals(B).ideals:
                ideal_to_congruence(B, ideal, base)
            # every congruence of the base cycle set spans an ideal whose
            # induced congruence refines it (checked inside, raising)
            sub = sub_cycle_set(B, base)
            for c in all_congruences(sub):
                congruence_to_ideal(B, base, c)


def test_criterion_8_solution_round_trips():
    with Timer("criterion 8 (solution round trips)", 120.0):
        for e in catalog():
            X = e.cycle_set
            n = X.size
            s = to_solution(X)
            assert from_solution(s) == X
            # independent re-checks, not trusting the constructor
            for lamx in s.lam:
                assert is_perm(lamx)
            for rhoy in s.rho:
                assert is_perm(rhoy)
            for x in range(n):
                for y in range(n):
                    assert s.r(*s.r(x, y)) == (x, y)
            for x, y, z in itertools.product(range(n), repeat=3):
                a, b = s.r(x, y)
                c, d = s.r(b, z)
                e1, f1 = s.r(a, c)
                a2, b2 = s.r(y, z)
                c2, d2 = s.r(x, a2)
                e2, f2 = s.r(d2, b2)
                assert (e1, f1, d) == (c2, e2, f2)


def test_criterion_9_group_brace_integrity():
    with Timer("criterion 9 (group brace integrity)", 120.0):
        for name, X, R in corpus_with_braces():
            B = R.brace
            assert B.order == R.group.order == len(R.additive_words)
            assert validate_brace(B.add, B.mul).ok
            for i, g in enumerate(R.group.elements):
                for x in range(X.size):
                    assert B.lam[i][R.embed[x]] == R.embed[g[x]]
            assert socle_quotient_check(B).ok, name


def test_criterion_10_classification_consistency():
    with Timer("criterion 10 (classification vs brute force)", 120.0):
        seen_simple = []
        for n in (1, 2, 3, 4):
            for X in enumerate_cycle_sets(n):
                c = classify_cycle_set(X)  # raises on any disagreement
                if n == 2:
                    assert c.simple
                if c.simple:
                    seen_simple.append(c)
        for e in catalog():
            c = classify_cycle_set(e.cycle_set)
            assert c.simple == e.expected["simple"]
            if c.simple:
                seen_simple.append(c)
        for c in seen_simple:
            if c.size > 2:
                assert c.indecomposable
            if not is_prime(c.size):
                assert c.irretractable
        assert any(c.size == 4 for c in seen_simple)
