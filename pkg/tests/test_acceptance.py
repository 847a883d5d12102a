"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL
line per criterion.  Counts and tolerances are fixed here, not tunable.
"""

import random

from flowring import verify


def _report(number, label, outcomes):
    ok = all(o.passed for o in outcomes)
    print(f"ACCEPTANCE {number:02d} {label}: {'PASS' if ok else 'FAIL'}")
    for o in outcomes:
        assert o.passed, f"{o.name}: {o.detail}"


def test_criterion_01_hurwitz_ring_axioms():
    rng = random.Random(1001)
    _report(1, "hurwitz ring axioms and inverses", [
        verify.hurwitz_ring_axioms(rng, triples=200, order=16),
        verify.hurwitz_inverse(rng, count=100, order=16),
    ])


def test_criterion_02_exp_ring():
    rng = random.Random(1002)
    _report(2, "exp ring under both products", [
        verify.exp_ring(rng, pairs=50, order=16),
        verify.hadamard_exp_distributivity(rng, count=25, order=16),
    ])


def test_criterion_03_bell_path_equivalence():
    rng = random.Random(1003)
    _report(3, "bell path equals product path", [
        verify.bell_path_equivalence(rng, fields=50, order_t=8, order=16, max_degree=4),
    ])


def test_criterion_04_displayed_term_formulas():
    rng = random.Random(1004)
    _report(4, "displayed term formulas (n = 2, 3, 4)", [
        verify.displayed_term_formulas(rng, fields=20, order=16),
    ])


def test_criterion_05_interaction_recurrence():
    rng = random.Random(1005)
    _report(5, "sum interaction recurrence to n = 6", [
        verify.interaction_recurrence(rng, pairs=30, order_t=6, order=16),
    ])


def test_criterion_06_scalar_action():
    rng = random.Random(1006)
    _report(6, "scalar action by -1, 2, 1/3, i", [
        verify.scalar_action_powers(rng, fields=5, order_t=8, order=16),
    ])


def test_criterion_07_flow_laws():
    rng = random.Random(1007)
    _report(7, "semigroup, derivation identity, time scaling", [
        verify.flow_semigroup(rng, fields=20, max_order_t=5, order=16),
        verify.flow_derivation(rng, fields=20, max_order_t=8, order=16),
        verify.time_scale_identity(rng, fields=20, order_t=8, order=16),
    ])


def test_criterion_08_closed_form_catalog():
    _report(8, "closed-form catalog on grids and anchors", [
        verify.closed_form_grid(),
    ])


def test_criterion_09_exp_sin_decomposition():
    _report(9, "three-part gaussian decomposition of e^y + sin y", [
        verify.example_exp_sin(order_t=8, order=16),
    ])


def test_criterion_10_cubic_decompositions():
    _report(10, "sum and product decompositions of the cubic", [
        verify.example_cubic(order_t=8, order=16),
    ])


def test_criterion_11_rk4_convergence():
    _report(11, "rk4 convergence order", [
        verify.rk4_convergence(),
        verify.rk4_series_agreement(),
    ])


def test_criterion_12_parser_corpus():
    _report(12, "parser corpus and elaboration anchors", [
        verify.parser_roundtrip(),
        verify.elaboration_anchors(),
    ])
