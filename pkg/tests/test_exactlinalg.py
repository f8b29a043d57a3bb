import random
from fractions import Fraction

import pytest
import sympy

from schubnil import (
    NonNilpotentError,
    Partition,
    QMatrix,
    TwistedCase,
    adjoint,
    block_toeplitz_rank,
    eigenspace_membership,
    exp_nilpotent,
    form_adjoint,
    jordan_type,
    random_k_element,
)
from schubnil.correspondence import d_standard_nilpotent, order2_standard
from schubnil.exactlinalg import (
    format_rational,
    parse_rational,
    random_triangular_nilpotent,
)

from util_oracles import dominant_tuples, gauss_rank

ALL_CASES = [
    TwistedCase("A2l", 1),
    TwistedCase("A2l", 2),
    TwistedCase("A2l", 3),
    TwistedCase("A2lMinus1", 2),
    TwistedCase("A2lMinus1", 3),
    TwistedCase("A2lMinus1", 4),
    TwistedCase("D", 2),
    TwistedCase("D", 3),
    TwistedCase("D", 4),
]


# --- kernels vs sympy --------------------------------------------------------


def test_rank_det_inv_against_sympy():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(n)
        ]
        m = QMatrix(rows)
        s = sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in r] for r in rows])
        assert m.rank() == s.rank()
        assert m.det() == Fraction(int(sympy.fraction(s.det())[0]), int(sympy.fraction(s.det())[1]))
        if s.det() != 0:
            inv = m.inv()
            assert (m @ inv) == QMatrix.identity(n)


def test_rank_matches_plain_gauss_on_sparse_inputs():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 8)
        dens = rng.random()
        m = QMatrix(
            [
                [rng.randint(-3, 3) if rng.random() < dens else 0 for _ in range(n)]
                for _ in range(n)
            ]
        )
        assert m.rank() == gauss_rank(m)


def test_rational_serialization():
    assert format_rational(Fraction(-3, 7)) == "-3/7"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational("-3/7") == Fraction(-3, 7)
    m = QMatrix([[Fraction(1, 2), 3], [0, Fraction(-7, 5)]])
    assert QMatrix.from_json(m.to_json()) == m


# --- forms and adjoints -----------------------------------------------------


def test_adjoint_identity_is_identity():
    for case in ALL_CASES:
        assert adjoint(case, QMatrix.identity(case.m())) == QMatrix.identity(case.m())


def test_adjoint_e12_explicit():
    # direct multiplication oracle on the 3x3 symmetric-form case
    case = TwistedCase("A2l", 1)
    j = case.form()
    a = QMatrix.unit(3, 0, 1)
    expected = j.inv() @ a.transpose() @ j
    assert adjoint(case, a) == expected
    # signed transpose across the antidiagonal
    assert adjoint(case, a) == QMatrix.unit(3, 1, 2, -1)


def test_adjoint_involution_and_pairing():
    rng = random.Random(23)
    for case in ALL_CASES:
        m = case.m()
        j = case.form()
        for _ in range(20):
            a = QMatrix([[rng.randint(-3, 3) for _ in range(m)] for _ in range(m)])
            astar = form_adjoint(case, a)
            assert form_adjoint(case, astar) == a
            u = QMatrix([[rng.randint(-3, 3)] for _ in range(m)])
            v = QMatrix([[rng.randint(-3, 3)] for _ in range(m)])
            left = (a @ u).transpose() @ j @ v
            right = u.transpose() @ j @ (astar @ v)
            assert left == right
        if case.kind == "D":
            w = case.invol_w()
            a = QMatrix([[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)])
            assert adjoint(case, adjoint(case, a)) == a
            assert adjoint(case, a) == w @ a @ w


def test_rank_one_adjoint_dichotomy():
    # rank-one maps whose image agrees with the image of their adjoint are
    # self-adjoint or skew-adjoint
    rng = random.Random(99)
    checked = 0
    while checked < 50:
        case = rng.choice(ALL_CASES)
        m = case.m()
        j = case.form()
        v = QMatrix([[rng.randint(-3, 3)] for _ in range(m)])
        if v.is_zero():
            continue
        t = v @ (j @ v).transpose()  # image of t and of its adjoint is span(v)
        if t.is_zero():
            continue
        tstar = form_adjoint(case, t)
        assert tstar == t or tstar == -t
        checked += 1


# --- eigenspaces -------------------------------------------------------------


def test_eigenspace_conventions():
    case = TwistedCase("A2lMinus1", 3)
    assert eigenspace_membership(case, QMatrix.zeros(6)) == "p"
    x = order2_standard(case, 2)
    assert eigenspace_membership(case, x) == "p"
    assert eigenspace_membership(case, QMatrix.identity(6)) == "neither"  # not in sl


def test_eigenspace_d_case():
    case = TwistedCase("D", 3)
    x = d_standard_nilpotent(case)
    assert eigenspace_membership(case, x) == "p"
    rng = random.Random(1)
    n = random_triangular_nilpotent(case, "k", rng)
    assert eigenspace_membership(case, n) == "k"


# --- jordan types -------------------------------------------------------------


def test_jordan_block_construction():
    b = [[0] * 5 for _ in range(5)]
    b[0][1] = 1
    b[2][3] = 1
    assert jordan_type(QMatrix(b)) == Partition((2, 2, 1))
    assert jordan_type(QMatrix.zeros(4)) == Partition((1, 1, 1, 1))


def test_jordan_non_nilpotent_raises():
    with pytest.raises(NonNilpotentError):
        jordan_type(QMatrix.identity(3))


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_jordan_d_case_rigidity(ell):
    case = TwistedCase("D", ell)
    x = d_standard_nilpotent(case)
    assert jordan_type(x) == Partition((3,) + (1,) * (2 * ell - 1))


def test_jordan_standard_square_zero_types():
    case = TwistedCase("A2lMinus1", 4)
    for j in (0, 2, 4):
        x = order2_standard(case, j)
        if j:
            assert jordan_type(x) == Partition((2,) * j + (1,) * (8 - 2 * j))
    case = TwistedCase("A2l", 3)
    for j in range(4):
        x = order2_standard(case, j)
        expected = Partition((2,) * j + (1,) * (7 - 2 * j))
        assert jordan_type(x) == expected


def test_jordan_conjugation_invariance():
    rng = random.Random(7)
    for case in (TwistedCase("A2lMinus1", 3), TwistedCase("D", 2)):
        x = (
            order2_standard(case, 2)
            if case.kind != "D"
            else d_standard_nilpotent(case)
        )
        for seed in range(5):
            k = random_k_element(case, rng)
            assert jordan_type(k @ x @ k.inv()) == jordan_type(x)


# --- block-Toeplitz ranks ------------------------------------------------------


def _closed_form(mu, s):
    lo = min(mu)
    return sum(max(s - (a - lo), 0) for a in mu)


def test_block_toeplitz_examples():
    # coefficients of [[1+t^-1, t^-2], [t^-1, 1-t^-1+t^-2]] from t^-2 up
    x_n = QMatrix([[0, 1], [0, 1]])
    x_n1 = QMatrix([[1, 0], [1, -1]])
    x_n2 = QMatrix.identity(2)
    zero = QMatrix.zeros(2)
    coeffs = [x_n, x_n1, x_n2, zero, zero]
    assert block_toeplitz_rank(coeffs, 1) == 1
    assert block_toeplitz_rank(coeffs, 4) == 4  # matches sum(max(s-4,0)+max(s,0))
    assert block_toeplitz_rank([zero, zero, zero], 3) == 0
    with pytest.raises(ValueError):
        block_toeplitz_rank([x_n], 2)


def test_block_toeplitz_closed_form_exhaustive():
    # every diagonal power matrix with dominant exponent tuple,
    # spread <= 4, size <= 6
    for m in range(1, 7):
        for mu in dominant_tuples("B", m, 4):
            hi, lo = mu[0], mu[-1]
            span = hi - lo
            coeffs = []
            for e in range(lo, hi + 1):
                mat = [[0] * m for _ in range(m)]
                for idx, a in enumerate(mu):
                    if a == e:
                        mat[idx][idx] = 1
                coeffs.append(QMatrix(mat))
            coeffs += [QMatrix.zeros(m)] * (span + 1)
            for s in range(1, span + 2):
                assert block_toeplitz_rank(coeffs, s) == _closed_form(mu, s)


# --- group sampling -------------------------------------------------------------


@pytest.mark.parametrize("case", ALL_CASES, ids=str)
def test_random_k_element_properties(case):
    j = case.form()
    ident = QMatrix.identity(case.m())
    for seed in range(8):
        k = random_k_element(case, seed)
        assert k.transpose() @ j @ k == j
        assert k.det() == 1
        if case.kind == "D":
            w = case.invol_w()
            assert w @ k @ w == k
        else:
            assert j.inv() @ k.inv().transpose() @ j == k
        # conjugation preserves the odd eigenspace
        rng = random.Random(seed + 100)
        part = "p"
        x = (
            d_standard_nilpotent(case)
            if case.kind == "D"
            else random_triangular_nilpotent(case, part, rng)
        )
        assert eigenspace_membership(case, k @ x @ k.inv()) == "p"


def test_exp_zero_is_identity():
    assert exp_nilpotent(QMatrix.zeros(4)) == QMatrix.identity(4)


def test_exp_preserves_form():
    case = TwistedCase("A2l", 1)
    n = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    nk = n + (-form_adjoint(case, n))  # project onto the even eigenspace
    g = exp_nilpotent(nk)
    j = case.form()
    assert g.transpose() @ j @ g == j
