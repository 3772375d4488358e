from vltwist.algebra import UNIT, AlgElement, L, d1, d2, straighten, gen_L, D1
from vltwist.hopf import antipode0, coproduct0, counit0, default_sample, verify_hopf0
from vltwist.series import SeriesTensor, embed, mu_contract, apply_in_slot


def test_generators_are_primitive():
    for x in (d1(), d2(), L(2, -1)):
        assert coproduct0(x, 0) == embed(x, 2, 1, 0) + embed(x, 2, 2, 0)
        assert antipode0(x) == -x
        assert counit0(x) == 0
    assert counit0(AlgElement.one() * 3) == 3


def test_coproduct_of_square():
    x = L(1, 0)
    dx = coproduct0(x * x, 0)
    m = (0, 0, ((1, 0),))
    assert dx.coefficient(0, [m, m]) == 2
    assert dx.coefficient(0, [UNIT, (0, 0, ((1, 0), (1, 0)))]) == 1


def test_coproduct_is_multiplicative():
    x = L(1, 0) + d1()
    y = L(0, 1) * d2()
    assert coproduct0(x * y, 0) == coproduct0(x, 0) * coproduct0(y, 0)


def test_antipode_is_antimultiplicative():
    x = L(1, 0) + d1()
    y = L(0, 1) * d2() + L(-1, 2)
    assert antipode0(x * y) == antipode0(y) * antipode0(x)
    assert antipode0(straighten([gen_L(1, 0), D1])) == d1() * L(1, 0)


def test_antipode_axiom_directly():
    x = L(1, 1) * L(0, 1) * d1()
    lhs = mu_contract(apply_in_slot(coproduct0(x, 0), 1, "antipode0"))
    assert lhs == SeriesTensor.unit(1, 0) * counit0(x)


def test_verify_hopf0_passes():
    r = verify_hopf0(default_sample(seed=2))
    assert r.passed
    assert len(r.checks) == 5 * 16
