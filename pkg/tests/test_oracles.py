import pytest
import sympy

from tightgonal import oracles
from tightgonal.oracles import (
    HypothesisFailed,
    ResidueClaim,
    UnknownIdentity,
    check_346,
    check_residue_claim,
    identity_check,
    jones_check,
    preset_claim,
    representable,
)


def test_representable_modes():
    assert list(representable([1], "triangular", 10).nonzero()[0]) == [0, 1, 3, 6, 10]
    assert list(representable([1], "odd", 30).nonzero()[0]) == [1, 9, 25]
    assert list(representable([1, 1], "plain", 10).nonzero()[0]) == [0, 1, 2, 4, 5, 8, 9, 10]


def test_346_small_cases():
    table = representable((3, 4, 6), "plain", 100)
    assert table[13]  # 3 + 4 + 6
    assert not oracles.in_346_hypothesis(5)
    assert oracles.in_346_hypothesis(13)


@pytest.mark.parametrize("name", sorted(oracles.PRESETS))
def test_presets_hold(name):
    assert check_residue_claim(preset_claim(name, 2 * 10**4)) == []


def test_false_claim_is_caught():
    # p3(1,1,3) does miss values that are 2 mod 3
    claim = ResidueClaim("too-strong", (1, 1, 3), "triangular", lambda g: True, 200)
    assert check_residue_claim(claim)


def test_check_346_small():
    assert check_346(2 * 10**4) == []


def test_jones_examples():
    assert jones_check(2, 3, 9)
    assert 1 + 2 * 4 == 9
    assert jones_check(1, 5, 25)
    with pytest.raises(HypothesisFailed):
        jones_check(2, 5, 10)
    with pytest.raises(ValueError):
        jones_check(3, 3, 10)


def test_jones_gcd_condition_matters():
    # 9 = 3^2 + 2*0^2 has gcd(3, 0, 3) = 3; the lemma needs (1, 2) instead
    sols = [(x, y) for x in range(4) for y in range(3) if x * x + 2 * y * y == 9]
    assert (3, 0) in sols and (1, 2) in sols


@pytest.mark.parametrize("name", sorted(oracles.IDENTITIES))
def test_identities_numeric(name):
    assert identity_check(name, trials=2000, seed=7)


def test_identity_zero_point():
    lhs, rhs = oracles.IDENTITIES["id-346-case9"]
    assert lhs(0, 0, 0) == rhs(0, 0, 0) == 0


@pytest.mark.parametrize("name", sorted(oracles.IDENTITIES))
def test_identities_symbolic(name, monkeypatch):
    # exact rational division that also accepts symbols
    monkeypatch.setattr(oracles, "Fraction", lambda a, b: sympy.Rational(1, b) * a)
    lhs, rhs = oracles.IDENTITIES[name]
    x, y, z = sympy.symbols("x y z")
    assert sympy.expand(lhs(x, y, z) - rhs(x, y, z)) == 0


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        identity_check("id-000")


def test_identity_check_detects_broken_identity(monkeypatch):
    monkeypatch.setitem(oracles.IDENTITIES, "broken", (lambda a, b, c: a * a, lambda a, b, c: a * b))
    assert not identity_check("broken", trials=50)


def test_d_selection_tables():
    assert oracles.check_x3_table(2 * 10**4) == []
    assert oracles.check_y3_table(2 * 10**4) == []
    for gp in range(0, 200):
        assert oracles.x3_select(gp) in (1, 3, 5)
        assert oracles.y3_select(gp) in (1, 3, 5, 7)


def test_x5_shift_table():
    assert oracles.check_x5_shifts() == []


def test_bound_guard():
    with pytest.raises(ValueError):
        representable([1], "plain", 10**8)
