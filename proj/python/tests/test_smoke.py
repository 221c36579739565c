from fractions import Fraction

import pytest

import assocbench


def sigma(n, k):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_against_divisor_sums():
    e4 = assocbench.eisenstein(4, 12)
    assert e4[0] == 1
    assert all(e4[n] == 240 * sigma(n, 3) for n in range(1, 13))


def test_discriminant_is_tau_function():
    assert assocbench.discriminant(5)[:6] == [0, 1, -24, 252, -1472, 4830]


def test_bad_weight_raises():
    with pytest.raises(ValueError):
        assocbench.eisenstein(8, 4)


def test_run_quasimodular():
    r = assocbench.run("quasimodular", q_order=8, timings=False)
    assert r["suite"] == "quasimodular"
    assert r["summary"]["fail"] == 0 and r["summary"]["pass"] == len(r["checks"])


def test_unknown_suite():
    with pytest.raises(ValueError):
        assocbench.run("bogus")


def test_exact_strings():
    assert "lam^4" in assocbench.jet_factor()
    assert set(assocbench.suite_names()) >= {"chazy", "yangbaxter"}


def test_qybe_on_and_off_surface():
    a, b, c = Fraction(1), Fraction(2), Fraction(3)
    assert assocbench.qybe_holds(a, b, c, a * a - b * c)
    assert not assocbench.qybe_holds(a, b, c, a * a - b * c + 1)
