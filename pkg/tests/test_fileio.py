import pytest
from hypothesis import given, settings

from conftest import small_instances
from trackpaths.fileio import InstanceFormatError, parse_instance, relabel_dense, serialize_instance
from trackpaths.generators import gen_theta

GOOD = """c square
p tracking 4 4
s 1
t 2
k 1
e 1 3
e 3 2
e 2 4
e 4 1
"""


def test_parse():
    inst, has_k = parse_instance(GOOD)
    assert has_k and inst.k == 1 and (inst.s, inst.t) == (0, 1)
    assert inst.graph.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_missing_k_defaults_to_zero():
    inst, has_k = parse_instance(GOOD.replace("k 1\n", ""))
    assert not has_k and inst.k == 0


@pytest.mark.parametrize("text, lineno", [
    (GOOD.replace("e 4 1", "e 4 9"), 9),
    (GOOD.replace("e 4 1", "e 4 4"), 9),
    (GOOD.replace("e 4 1", "e 1 3"), 9),
    (GOOD.replace("k 1", "k -1"), 5),
    (GOOD.replace("k 1", "q 1"), 5),
    (GOOD.replace("s 1", "s x"), 3),
    (GOOD.replace("p tracking 4 4", "p graph 4 4"), 2),
])
def test_errors_carry_line_numbers(text, lineno):
    with pytest.raises(InstanceFormatError) as exc:
        parse_instance(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


@pytest.mark.parametrize("text", [
    "",
    GOOD.replace("t 2", "t 1"),
    GOOD.replace("p tracking 4 4", "p tracking 4 5"),
    GOOD.replace("t 2\n", ""),
])
def test_global_errors(text):
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


@settings(max_examples=100, deadline=None)
@given(small_instances(max_n=9))
def test_round_trip(inst):
    back, _ = parse_instance(serialize_instance(inst, ["x"]))
    dense, _ = relabel_dense(inst)
    assert back.graph == dense.graph and (back.s, back.t, back.k) == (dense.s, dense.t, dense.k)


def test_relabel_after_deletion():
    inst = gen_theta(3, 2)
    inst.graph.remove_vertex(3)
    dense, old = relabel_dense(inst)
    assert old == [0, 1, 2, 4]
    assert dense.graph.num_vertices() == 4
