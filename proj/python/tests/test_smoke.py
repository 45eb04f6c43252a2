from fractions import Fraction

import pytest

import rtm


def test_coproduct_of_cherry():
    assert rtm.coproduct("(()())") == {
        ("", "(()())"): 1,
        ("(()())", ""): 1,
        ("()", "(())"): 2,
        ("()()", "()"): 1,
    }


def test_antipode_and_dynkin():
    assert rtm.antipode("(())") == {"(())": -1, "()()": 1}
    assert rtm.dynkin("(())") == {"(())": 2, "()()": -1}
    assert rtm.dynkin("()()") == {}


def test_tree_map_on_xy():
    assert rtm.apply("(())", "xy") == {"xyyy": 2, "xyxy": -1, "xxxy": -1, "xxyy": -1}
    assert rtm.apply("1", "xy") == {"xy": 1}


def test_partial_and_ladder_decomposition():
    assert rtm.partial(2, "x") == {"xxy": 1, "xyy": 1}
    assert rtm.ladder_decomposition(2) == {"(())": Fraction(2, 3), "()()": Fraction(-1, 3)}
    image = rtm.apply("(())", {"xy": Fraction(2, 3)})
    image2 = rtm.apply("()()", {"xy": Fraction(-1, 3)})
    combined = {w: image.get(w, 0) + image2.get(w, 0) for w in set(image) | set(image2)}
    assert {w: c for w, c in combined.items() if c} == rtm.partial(2, "xy")


def test_enumeration_and_keys():
    assert [len(rtm.enumerate_forests(n)) for n in range(1, 6)] == [1, 2, 4, 9, 20]
    assert rtm.canonical_key("()(())") == "(())()"


def test_z_encoding():
    assert rtm.z_encode("xxyxy") == [3, 2]
    assert rtm.z_decode((2, 1, 1)) == "xyyy"


def test_zeta_values():
    z2 = rtm.zeta((2,), eps="1e-30")
    assert z2.value.startswith("1.64493406684822643647241516664")
    assert float(z2.bound) <= 1e-30
    assert abs(float(rtm.zeta("xyy")) - 1.2020569031595942) < 1e-15
    relation = rtm.z_eval({"xyyy": 2, "xxxy": -1, "xyxy": -1, "xxyy": -1})
    assert abs(float(relation.value)) <= float(relation.bound)


def test_relations_rank_and_span():
    trees = rtm.relations_jsonl(4, 6, True, False)
    derivations = rtm.relations_jsonl(4, 6, False, True)
    assert trees.splitlines()[0].startswith('{"weight":3,"forest":"()","word":"xy"')
    assert rtm.rank_by_weight(trees)[3] == 1
    assert rtm.span_inclusion(derivations, trees) == (True, None)
    assert rtm.rank_exact([[1, 2], [Fraction(1, 2), 1]]) == 1


def test_verification_suites():
    for name, ok, cases, detail in rtm.verify_hopf_axioms(3) + rtm.verify_series(3, 4):
        assert ok, f"{name}: {detail}"
        assert cases > 0


def test_errors_map_to_value_error():
    with pytest.raises(rtm.ParseError):
        rtm.apply("(()", "x")
    with pytest.raises(rtm.DomainError):
        rtm.zeta("yy")
    with pytest.raises(rtm.DimensionError):
        rtm.rank_exact([[1, 2], [3]])
    with pytest.raises(ValueError):
        rtm.partial(0, "x")
