import itertools
import math

import pytest
from hypothesis import given, strategies as st

from molqubit.angmom import ThreeJArgs, _canonicalize, log_factorial, tensor_element, wigner3j
from oracles import threej_exact


@pytest.mark.parametrize(
    "args, expected",
    [
        ((1, 1, 0, 0, 0, 0), -1 / math.sqrt(3)),
        ((1, 1, 2, 0, 0, 0), math.sqrt(2 / 15)),
        ((0, 2, 2, 0, 0, 0), 1 / math.sqrt(5)),
        ((2, 2, 2, 0, 0, 0), -math.sqrt(2 / 35)),
    ],
)
def test_closed_forms(args, expected):
    assert wigner3j(*args) == pytest.approx(expected, abs=1e-15)
    assert threej_exact(*args) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "args",
    [
        (1, 1, 1, 0, 0, 0),  # odd J, all m zero
        (5, 1, 3, 0, 0, 0),  # triangle
        (1, 1, 0, 1, 0, 0),  # m sum
        (1, 1, 2, 2, -2, 0),  # |m| > j
        (0, 2, 0, 0, 0, 0),
    ],
)
def test_selection_rules_give_exact_zero(args):
    v = wigner3j(*args)
    assert v == 0.0 and isinstance(v, float)


def test_accepts_threej_args():
    assert wigner3j(ThreeJArgs(1, 1, 2, 0, 0, 0)) == wigner3j(1, 1, 2, 0, 0, 0)
    with pytest.raises(TypeError):
        wigner3j(1, 2, 3)


def test_matches_exact_oracle_up_to_j6():
    worst = 0.0
    for j1, j2, j3 in itertools.product(range(7), repeat=3):
        for m1 in range(-j1, j1 + 1):
            for m2 in range(-j2, j2 + 1):
                args = (j1, j2, j3, m1, m2, -m1 - m2)
                worst = max(worst, abs(wigner3j(*args) - threej_exact(*args)))
    assert worst < 1e-14


def test_large_j_relative_accuracy():
    for args in [(20, 21, 40, 3, -5, 2), (38, 2, 40, 0, 0, 0), (30, 30, 40, 10, -4, -6)]:
        exact = threej_exact(*args)
        assert wigner3j(*args) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("j1", range(7))
@pytest.mark.parametrize("j2", range(7))
def test_orthogonality(j1, j2):
    for m1 in range(-j1, j1 + 1):
        for m2 in range(-j2, j2 + 1):
            total = sum(
                (2 * j3 + 1) * wigner3j(j1, j2, j3, m1, m2, -m1 - m2) ** 2
                for j3 in range(abs(j1 - j2), j1 + j2 + 1)
            )
            assert abs(total - 1) < 1e-12


valid_args = (
    st.tuples(st.integers(0, 12), st.integers(0, 12), st.integers(0, 24))
    .flatmap(
        lambda js: st.tuples(
            st.just(js), st.integers(-js[0], js[0]), st.integers(-js[1], js[1])
        )
    )
    .map(lambda t: (*t[0], t[1], t[2], -t[1] - t[2]))
)


@given(valid_args)
def test_sign_flip(args):
    j1, j2, j3, m1, m2, m3 = args
    phase = (-1) ** (j1 + j2 + j3)
    assert abs(wigner3j(j1, j2, j3, -m1, -m2, -m3) - phase * wigner3j(*args)) < 1e-14


@given(valid_args)
def test_column_permutations(args):
    j1, j2, j3, m1, m2, m3 = args
    v = wigner3j(*args)
    phase = (-1) ** (j1 + j2 + j3)
    assert wigner3j(j2, j3, j1, m2, m3, m1) == v
    assert wigner3j(j3, j1, j2, m3, m1, m2) == v
    assert wigner3j(j2, j1, j3, m2, m1, m3) == phase * v
    assert wigner3j(j1, j3, j2, m1, m3, m2) == phase * v


def test_canonical_key_shared_by_symmetry_orbit():
    key, _ = _canonicalize(2, 3, 4, 1, -2, 1)
    for perm in itertools.permutations(range(3)):
        js = [(2, 3, 4)[i] for i in perm]
        ms = [(1, -2, 1)[i] for i in perm]
        assert _canonicalize(*js, *ms)[0] == key
        assert _canonicalize(*js, *[-m for m in ms])[0] == key


def test_log_factorial():
    assert log_factorial(0) == 0.0
    assert log_factorial(10) == pytest.approx(math.log(math.factorial(10)), rel=1e-15)
    with pytest.raises(ValueError):
        log_factorial(-1)


def test_tensor_element_rank1_values():
    assert tensor_element(1, 0, 0, 0, 1, 0) == pytest.approx(1 / math.sqrt(3), abs=1e-15)
    assert tensor_element(1, 1, 0, 0, 2, 0) == pytest.approx(2 / math.sqrt(15), abs=1e-15)
    assert tensor_element(1, 0, 0, 0, 2, 0) == 0.0
    assert tensor_element(1, 1, 1, 0, 1, 1) == 0.0
