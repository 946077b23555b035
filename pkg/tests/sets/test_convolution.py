import pytest
from tests.util import *


@pytest.mark.parametrize("S,expected", [
    (IntegerSet([1, 2, 5, 7]), 2),
    (IntegerSet([1, 2, 3]), 3),
    (IntegerSet([1, 2, 3, 4]), 4),
    (IntegerSet([5]), 1),
    (CyclicSet(7, [0, 1, 3]), 2),
    (CyclicSet(2, [0, 1]), 2),
    (CyclicSet(1, [0]), 1),
])
def test_g_value(S, expected):
    assert g_value(S) == expected


def test_empty_set():
    assert g_value(IntegerSet()) == 0
    assert sum_convolution(CyclicSet(5)).total() == 0


def test_sum_convolution_integer():
    profile = sum_convolution(IntegerSet([1, 2, 5, 7]))
    assert profile.offset == 2
    assert len(profile) == 13
    assert profile[2] == 1
    assert profile[3] == 2
    assert profile[4] == 1
    assert profile[100] == 0
    assert profile.total() == 16
    assert profile.max_count == 2
    assert profile.to_json()['kind'] == "sum"


def test_sum_convolution_cyclic():
    profile = sum_convolution(CyclicSet(2, [0, 1]))
    assert profile.as_dict() == {0: 2, 1: 2}
    assert profile.argmax() == [0, 1]
    # lookups reduce mod n
    assert profile[3] == 2


def test_diff_correlation():
    profile = diff_correlation(CyclicSet(7, [0, 1, 3]))
    assert profile[0] == 3
    assert all(profile[d] == 1 for d in range(1, 7))

    profile = diff_correlation(IntegerSet([0, 1, 4, 6]))
    assert profile.offset == -6
    assert profile[0] == 4
    assert all(profile[d] == 1 and profile[-d] == 1 for d in range(1, 7))


def test_diff_correlation_symmetric():
    rnd = np.random.RandomState(0)
    for _ in range(20):
        S = random_cyclic_set(rnd, 30, 8)
        profile = diff_correlation(S)
        assert all(profile[d] == profile[-d] for d in range(30))
        assert profile.total() == 64


def test_triple_convolution():
    profile = triple_convolution(IntegerSet([0, 1]))
    assert profile.as_dict() == {0: 1, 1: 3, 2: 3, 3: 1}
    assert triple_convolution_max(CyclicSet(2, [0, 1])) == 4
    assert triple_convolution(CyclicSet(11, [0, 1, 3])).total() == 27


def test_cross_convolution():
    assert cross_convolution_max(IntegerSet([0, 1]), IntegerSet([0, 1])) == 2
    assert cross_convolution_max(CyclicSet(7, [0]), CyclicSet(7, [1, 3])) == 1
    with pytest.raises(InvalidInputError):
        cross_convolution_max(CyclicSet(7, [0]), CyclicSet(8, [0]))
    with pytest.raises(InvalidInputError):
        cross_convolution_max(CyclicSet(7, [0]), IntegerSet([0]))


def test_g_value_matches_double_loop():
    rnd = np.random.RandomState(1)
    for _ in range(100):
        size = rnd.randint(1, 12)
        S = random_integer_set(rnd, 40, size)
        assert g_value(S) == naive_g_value(S.elements)
        n = rnd.randint(size, 50)
        T = random_cyclic_set(rnd, n, size)
        assert g_value(T) == naive_g_value(T.elements, n)


def test_symmetries():
    S = CyclicSet(7, [0, 1, 3])
    assert translate(S, 5) == CyclicSet(7, [1, 5, 6])
    assert reflect(S) == CyclicSet(7, [0, 4, 6])
    assert dilate(S, 2) == CyclicSet(7, [0, 2, 6])
    assert reflect(IntegerSet([1, 2, 5, 7])) == IntegerSet([1, 3, 6, 7])
    assert translate(IntegerSet([1, 2]), 3) == IntegerSet([4, 5])
    with pytest.raises(InvalidInputError):
        dilate(S, 7)
    with pytest.raises(InvalidInputError):
        dilate(IntegerSet([1, 2]), 0)


def test_symmetries_preserve_g_value():
    rnd = np.random.RandomState(2)
    for _ in range(50):
        S = random_cyclic_set(rnd, 31, 6)
        value = g_value(S)
        c = int(rnd.randint(1, 31))
        assert g_value(translate(S, c)) == value
        assert g_value(reflect(S)) == value
        assert g_value(dilate(S, c)) == value


def test_canonicalize():
    assert canonicalize(IntegerSet([1, 2, 5, 7])) == IntegerSet([0, 1, 4, 6])
    assert canonicalize(IntegerSet([0, 3, 4, 9, 11])) == IntegerSet([0, 2, 7, 8, 11])
    assert canonicalize(IntegerSet([4])) == IntegerSet([0])


def test_canonicalize_invariance():
    rnd = np.random.RandomState(3)
    for _ in range(50):
        S = random_integer_set(rnd, 30, 6, low=1)
        canonical = canonicalize(S)
        assert canonical.min == 0
        assert canonicalize(S.shifted(7)) == canonical
        assert canonicalize(reflect(S)) == canonical


def test_cyclic_gaps():
    S = CyclicSet(7, [0, 1, 3])
    assert cyclic_gaps(S) == [(4, 0), (1, 1), (2, 3)]
    assert largest_cyclic_gap(S) == 4
    assert cyclic_gaps(CyclicSet(5, [2])) == [(5, 2)]
    with pytest.raises(InvalidInputError):
        cyclic_gaps(CyclicSet(5))


def test_canonicalize_cyclic():
    assert canonicalize_cyclic(CyclicSet(7, [0, 1, 3])) == CyclicSet(7, [0, 1, 3])
    assert canonicalize_cyclic(CyclicSet(7, [0, 4, 6])) == CyclicSet(7, [0, 1, 3])
    rnd = np.random.RandomState(4)
    for _ in range(50):
        S = random_cyclic_set(rnd, 23, 5)
        canonical = canonicalize_cyclic(S)
        assert canonicalize_cyclic(translate(S, int(rnd.randint(23)))) == canonical
        assert canonicalize_cyclic(reflect(S)) == canonical
