"""2-SAT instances and the SCC-based solver."""

import pytest

from splitkit.twosat import BOT, TOP, TwoSatInstance, two_sat_solve


def lit(v, p=True):
    return (v, p)


def test_satisfiable_chain():
    inst = TwoSatInstance([(lit("a"),),
                           (lit("a", False), lit("b")),
                           (lit("b", False), lit("c"))])
    sol = two_sat_solve(inst)
    assert sol == {"a": True, "b": True, "c": True}
    assert inst.check(sol)


def test_unsatisfiable_pair():
    inst = TwoSatInstance([(lit("x"),), (lit("x", False),)])
    assert two_sat_solve(inst) is None


def test_xor_constraints():
    # x != y and y != z forces x == z
    inst = TwoSatInstance([(lit("x"), lit("y")), (lit("x", False), lit("y", False)),
                           (lit("y"), lit("z")), (lit("y", False), lit("z", False))])
    sol = two_sat_solve(inst)
    assert sol is not None and sol["x"] == sol["z"] != sol["y"]


def test_top_and_bot_sentinels():
    assert not TwoSatInstance([TOP]).has_contradiction
    assert two_sat_solve(TwoSatInstance([TOP])) == {}
    inst = TwoSatInstance([BOT, (lit("a"),)])
    assert inst.has_contradiction
    assert two_sat_solve(inst) is None
    assert not inst.check({"a": True})


def test_input_validation():
    with pytest.raises(ValueError):
        TwoSatInstance([(lit("a"), lit("b"), lit("c"))])
    with pytest.raises(ValueError):
        TwoSatInstance([(("a", 1),)])


def test_tuple_variables():
    a, b = ("v", 3), ("e", 1, 2)
    sol = two_sat_solve(TwoSatInstance([(lit(a),), (lit(a, False), lit(b, False))]))
    assert sol == {a: True, b: False}
