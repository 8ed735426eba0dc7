import itertools
import math

from hypothesis import given, strategies as st

from gsplines.intlinalg import column_echelon, solve_integer_system, xgcd

small = st.integers(-30, 30)


@given(small, small)
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g >= 0 and s * a + t * b == g
    assert g == math.gcd(a, b)


matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


@given(matrices)
def test_column_echelon_shape(A):
    H, U, pivots = column_echelon(A)
    assert matmul(A, U) == H
    assert abs(det(U)) == 1
    for i, k in pivots:
        assert H[i][k] > 0
        assert all(H[i][j] == 0 for j in range(k + 1, len(H[0])))


@given(matrices, st.data())
def test_solver_against_search(A, data):
    b = data.draw(st.lists(st.integers(-8, 8), min_size=len(A), max_size=len(A)))
    y = solve_integer_system(A, b)
    if y is not None:
        assert [sum(a * v for a, v in zip(row, y)) for row in A] == b
        return
    # no solution claimed: none in a box either (the box is only a sanity net)
    for cand in itertools.product(range(-4, 5), repeat=len(A[0])):
        assert [sum(a * v for a, v in zip(row, cand)) for row in A] != b


def test_solver_known_cases():
    assert solve_integer_system([[2, 4]], [1]) is None
    y = solve_integer_system([[6, 10, 15]], [1])
    assert 6 * y[0] + 10 * y[1] + 15 * y[2] == 1
    assert solve_integer_system([[1, 1], [1, -1]], [3, 0]) is None
