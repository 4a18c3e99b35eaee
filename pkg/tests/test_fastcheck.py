"""The integer fast path must agree with the Fraction-level reference
implementations, exhaustively on small ambients."""

from fractions import Fraction

import numpy as np

from orthofrac.algebra import (
    indicator_from_design,
    theta_vector,
    verify_theta,
)
from orthofrac.designs import Design, full_factorial, has_strength, invariant_triple
from orthofrac.fastcheck import BatchChecker, get_checker, runs_matrix


def _all_subsets(amb):
    m = amb.run_count
    return [tuple(i for i in range(m) if bits >> i & 1) for bits in range(2**m)]


def test_theta_scaled_matches_exact_theta():
    amb = full_factorial([2, 2, 2])
    checker = BatchChecker(amb)
    subsets = _all_subsets(amb)
    y = runs_matrix(subsets, amb.run_count)
    scaled = checker.theta_scaled(y)
    for runs, row in zip(subsets, scaled):
        exact = theta_vector(indicator_from_design(Design(amb, runs)), amb)
        assert [Fraction(int(v), checker.w_scale) for v in row] == list(exact)


def test_batch_verify_agrees_with_verify_theta_exhaustively():
    amb = full_factorial([2, 2, 2])
    checker = get_checker(amb)
    subsets = _all_subsets(amb)
    y = runs_matrix(subsets, amb.run_count)
    for t in (1, 2, 3):
        for s in (2, 4):
            batch = checker.verify(y, s, t)
            for runs, got in zip(subsets, batch):
                poly = indicator_from_design(Design(amb, runs))
                assert bool(got) == verify_theta(poly, amb, s, t)


def test_batch_strength_agrees_with_has_strength():
    amb = full_factorial([2, 3])
    checker = get_checker(amb)
    subsets = _all_subsets(amb)
    y = runs_matrix(subsets, amb.run_count)
    for t in (1, 2):
        batch = checker.strength_ok(y, 3, t)
        for runs, got in zip(subsets, batch):
            expected = len(runs) == 3 and has_strength(Design(amb, runs), t)
            assert bool(got) == expected


def test_indicator_identity_checks():
    amb = full_factorial([2, 2, 2])
    checker = get_checker(amb)
    subsets = _all_subsets(amb)
    y = runs_matrix(subsets, amb.run_count)
    assert bool(np.all(checker.interpolation_ok(y)))
    assert bool(np.all(checker.constant_term_ok(y)))
    assert bool(np.all(checker.idempotent_ok(y)))


def test_scaling_paths_on_rational_level_ambient():
    # Levels with nontrivial denominators force x_scale > 1 and a rational
    # reduction tensor; the fast path must still agree with the exact route.
    from orthofrac.designs import from_level_sets

    amb = from_level_sets([(0, Fraction(1, 2)), (-1, Fraction(1, 3), 2)])
    checker = BatchChecker(amb)
    assert checker.x_scale > 1
    subsets = _all_subsets(amb)
    y = runs_matrix(subsets, amb.run_count)
    scaled = checker.theta_scaled(y)
    for runs, row in zip(subsets, scaled):
        exact = theta_vector(indicator_from_design(Design(amb, runs)), amb)
        assert [Fraction(int(v), checker.w_scale) for v in row] == list(exact)
    for t in (1, 2):
        for s in (2, 3):
            batch = checker.verify(y, s, t)
            strength = checker.strength_ok(y, s, t)
            for runs, got, got_s in zip(subsets, batch, strength):
                design = Design(amb, runs)
                poly = indicator_from_design(design)
                assert bool(got) == verify_theta(poly, amb, s, t)
                assert bool(got_s) == (len(runs) == s and has_strength(design, t))
    assert bool(np.all(checker.idempotent_ok(y)))
    assert bool(np.all(checker.interpolation_ok(y)))
    # theta_0 == |F|/m is a property of symmetric level codings, not a
    # theorem for arbitrary levels; here the checker must simply agree
    # with the exact constant coefficient.
    const = checker.constant_term_ok(y)
    for runs, got in zip(subsets, const):
        theta0 = indicator_from_design(Design(amb, runs)).coefficient((0, 0))
        assert bool(got) == (theta0 == Fraction(len(runs), amb.run_count))


def test_batch_invariant_triples_match_reference():
    amb = full_factorial([2, 2, 2, 2, 3])
    checker = get_checker(amb)
    import random

    rng = random.Random(29)
    designs = []
    for _ in range(20):
        designs.append(tuple(sorted(rng.sample(range(48), 24))))
    y = runs_matrix(designs, 48)
    batch = checker.invariant_triples(y)
    for runs, got in zip(designs, batch):
        assert got == invariant_triple(Design(amb, runs))
