from fractions import Fraction

import pytest

from symprice import families, formulas
from symprice.invariants import transmission


def test_sigma_cycle_small():
    assert formulas.sigma_cycle(3) == 9
    assert formulas.sigma_cycle_sym(3) == 6
    assert formulas.sigma_cycle(4) == 24
    assert formulas.sigma_cycle_sym(4) == 16
    assert formulas.pos_cycle(2) == 0


def test_sigma_backward_tournament_is_binomial_sum():
    import math

    for n in range(3, 30):
        expected = sum(math.comb(i + 1, 2) for i in range(2, n + 1))
        assert formulas.sigma_backward_tournament(n) == expected


def test_sigma_backward_tournament_matches_bfs():
    for n in (3, 5, 8):
        assert formulas.sigma_backward_tournament(n) == transmission(
            families.backward_tournament(n)
        )


def test_hnk_range_checks():
    with pytest.raises(ValueError):
        formulas.sigma_hnk(8, 2)
    with pytest.raises(ValueError):
        formulas.sigma_hnk(8, 8)


def test_pos_cubic_matches_integer_form():
    for n in range(11, 25):
        for k in range(3, n):
            parity = "even" if (n - k) % 2 == 0 else "odd"
            assert formulas.pos_cubic(n, k, parity) == formulas.pos_hnk(n, k)


def test_pos_cubic_parity_consistency():
    with pytest.raises(ValueError):
        formulas.pos_cubic(12, 4, "odd")  # n-k = 8 is even
    with pytest.raises(ValueError):
        formulas.pos_cubic(12, 4, "both")
    # rational k takes either branch
    formulas.pos_cubic(12, Fraction(7, 2), "even")


def test_pos_cubic_derivative_is_derivative():
    h = Fraction(1, 1000)
    for n, k in ((14, 5), (15, 6)):
        parity = "even" if (n - k) % 2 == 0 else "odd"
        approx = (formulas.pos_cubic(n, Fraction(k) + h, parity)
                  - formulas.pos_cubic(n, Fraction(k) - h, parity)) / (2 * h)
        exact = formulas.pos_cubic_derivative(n, k, parity)
        assert abs(approx - exact) < Fraction(1, 100)


def test_best_bag_pos_agrees_with_k_star():
    for n in range(11, 30):
        k, pos = formulas.best_bag_pos(n)
        r = families.k_star(n)
        assert k == r.k_star
        assert pos == r.pos_at_candidates[r.k_star]


def test_crossover_signs():
    assert formulas.crossover_sign(0) == 1
    assert formulas.crossover_sign(1) == -1
    assert formulas.crossover_sign(3) == -1
    assert formulas.crossover_sign(4) == 1
    assert formulas.crossover_sign(10) == 1
    assert formulas.crossover_sign(11) == -1


def test_closed_form_report():
    rep = formulas.closed_form_report(6)
    assert (rep.sigma_g, rep.sigma_sym, rep.pos) == (90, 54, 36)
    rep = formulas.closed_form_report(12, 5)
    assert rep.pos == formulas.pos_hnk(12, 5)
    assert rep.parity_branch == "odd"
