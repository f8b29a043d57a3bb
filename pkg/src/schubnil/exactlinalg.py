"""Exact dense linear algebra over the rationals, plus the concrete
symmetric-pair data used by the twisted cases.

Everything is computed with ``fractions.Fraction``; floating point never
enters.  Rank is computed by a fraction-free sparse elimination (rows are
cleared to integers and gcd-stripped after each combination), determinant
by Bareiss elimination, inverse by Gauss-Jordan over the rationals.

The three twisted cases carry their defining bilinear form J (and for the
D case the flip matrix w), the eigenspace decomposition of the involution,
Jordan types of nilpotent matrices from ranks of powers, the rank of the
block-Toeplitz matrices used by the cell criterion, and the seeded
sampling of isometry-group elements as products of exponentials of
strictly triangular nilpotents (which are finite, exact sums).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .partitions import PairCase, Partition
from .weights import HType, btype, ctype

Rational = Fraction


class NonNilpotentError(ValueError):
    """Raised when a Jordan type is requested for a non-nilpotent matrix."""


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text))


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class QMatrix:
    """Dense matrix of Fractions.  Treated as immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = [tuple(Fraction(x) for x in row) for row in data]
        if not rows or not rows[0]:
            raise ValueError("matrices must be nonempty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.data = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0])

    # -- constructors ---------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=1) -> "QMatrix":
        m = [[0] * n for _ in range(n)]
        m[i][j] = value
        return cls(m)

    @classmethod
    def diag(cls, values) -> "QMatrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- basic ops ------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other):
        self._same_shape(other)
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self):
        return QMatrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        return QMatrix([[c * a for a in row] for row in self.data])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        bt = list(zip(*other.data))
        return QMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.data)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum(self.data[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.data for a in row)

    def pow(self, k: int) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("powers need a square matrix")
        out = QMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def __str__(self):
        return "\n".join(
            "[" + " ".join(format_rational(a) for a in row) + "]" for row in self.data
        )

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- kernels ----------------------------------------------------------
    def _int_rows(self) -> list[dict[int, int]]:
        out = []
        for row in self.data:
            den = 1
            for a in row:
                den = den * a.denominator // gcd(den, a.denominator)
            r = {}
            for j, a in enumerate(row):
                if a:
                    r[j] = int(a * den)
            if r:
                out.append(r)
        return out

    def rank(self) -> int:
        rows = self._int_rows()
        rank = 0
        # peel singleton rows/columns first; diagonal-heavy matrices (the
        # block-Toeplitz profiles of norm elements) reduce to nothing here
        while rows:
            col_count: dict[int, int] = {}
            for r in rows:
                for j in r:
                    col_count[j] = col_count.get(j, 0) + 1
            kill_col = kill_row = None
            for i, r in enumerate(rows):
                if len(r) == 1:
                    kill_row, kill_col = i, next(iter(r))
                    break
            if kill_row is None:
                for j, cnt in col_count.items():
                    if cnt == 1:
                        kill_col = j
                        kill_row = next(i for i, r in enumerate(rows) if j in r)
                        break
            if kill_row is None:
                break
            rank += 1
            rows.pop(kill_row)
            rows = [
                {j: v for j, v in r.items() if j != kill_col} for r in rows
            ]
            rows = [r for r in rows if r]
        if not rows:
            return rank
        # dense fraction-free elimination (Bareiss) on the remaining core;
        # entries stay minors of the input, so growth is bounded
        cols = sorted({j for r in rows for j in r})
        colpos = {j: i for i, j in enumerate(cols)}
        a = [[0] * len(cols) for _ in rows]
        for i, r in enumerate(rows):
            for j, v in r.items():
                a[i][colpos[j]] = v
        n_r, n_c = len(a), len(cols)
        prev = 1
        step = 0
        while True:
            piv = None
            best = None
            for i in range(step, n_r):
                for j in range(step, n_c):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best):
                        piv, best = (i, j), abs(v)
                        if best == 1:
                            break
                if best == 1:
                    break
            if piv is None:
                return rank + step
            pi_, pj = piv
            if pi_ != step:
                a[step], a[pi_] = a[pi_], a[step]
            if pj != step:
                for row in a:
                    row[step], row[pj] = row[pj], row[step]
            pv = a[step][step]
            for i in range(step + 1, n_r):
                f = a[i][step]
                row_i, row_s = a[i], a[step]
                if f:
                    for j in range(step + 1, n_c):
                        row_i[j] = (pv * row_i[j] - f * row_s[j]) // prev
                    row_i[step] = 0
                elif prev != 1 or pv != 1:
                    for j in range(step + 1, n_c):
                        row_i[j] = (pv * row_i[j]) // prev
            prev = pv
            step += 1
            if step == n_r or step == n_c:
                return rank + step

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        denom = Fraction(1)
        m = []
        for row in self.data:
            den = 1
            for a in row:
                den = den * a.denominator // gcd(den, a.denominator)
            denom *= den
            m.append([int(a * den) for a in row])
        # Bareiss fraction-free elimination
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], 1) / denom

    def inv(self) -> "QMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse needs a square matrix")
        n = self.rows
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.data)]
        for k in range(n):
            piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[k], aug[piv] = aug[piv], aug[k]
            p = aug[k][k]
            aug[k] = [a / p for a in aug[k]]
            for i in range(n):
                if i != k and aug[i][k]:
                    f = aug[i][k]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
        return QMatrix([row[n:] for row in aug])

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list:
        return [[format_rational(a) for a in row] for row in self.data]

    @classmethod
    def from_json(cls, obj) -> "QMatrix":
        return cls([[parse_rational(a) for a in row] for row in obj])


# ---------------------------------------------------------------------------
# twisted cases and their forms
# ---------------------------------------------------------------------------

TWISTED_KINDS = ("A2l", "A2lMinus1", "D")


@dataclass(frozen=True)
class TwistedCase:
    """The three twisted settings, parametrized by the rank of the fixed group.

    A2l:        ambient SL_{2l+1}, symmetric alternating-sign form, type B_l
    A2lMinus1:  ambient SL_{2l},   symplectic alternating-sign form, type C_l
    D:          ambient SO_{2l+2}, antidiagonal-ones form with a flip w, type B_l
    """

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in TWISTED_KINDS:
            raise ValueError(f"unknown twisted case {self.kind!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.kind == "D" and self.rank < 2:
            raise ValueError("the D case needs rank >= 2")

    def m(self) -> int:
        return {"A2l": 2 * self.rank + 1, "A2lMinus1": 2 * self.rank, "D": 2 * self.rank + 2}[
            self.kind
        ]

    def htype(self) -> HType:
        return ctype(self.rank) if self.kind == "A2lMinus1" else btype(self.rank)

    def form(self) -> QMatrix:
        m = self.m()
        j = [[0] * m for _ in range(m)]
        for i in range(m):
            j[i][m - 1 - i] = 1 if self.kind == "D" else (-1) ** i
        return QMatrix(j)

    def invol_w(self) -> QMatrix:
        if self.kind != "D":
            raise ValueError("only the D case carries the flip matrix w")
        m, ell = self.m(), self.rank
        w = [[int(i == j) for j in range(m)] for i in range(m)]
        w[ell][ell] = w[ell + 1][ell + 1] = 0
        w[ell][ell + 1] = w[ell + 1][ell] = 1
        return QMatrix(w)

    def pair_case(self) -> PairCase:
        """The orbit setting whose partitions label nilpotent orbits here.

        For the D case the fixed-group orbits are not self-adjoint-map
        orbits; the even orthogonal case is used purely as the container
        for partitions of 2l+2 (Jordan types in the ambient space).
        """
        if self.kind == "A2l":
            return PairCase("orthoddA", self.rank)
        if self.kind == "A2lMinus1":
            return PairCase("sympA", self.rank)
        return PairCase("orthevenA", self.rank + 1)

    def __str__(self):
        return f"{self.kind}(l={self.rank})"


def parse_twisted_case(kind: str, rank: int) -> TwistedCase:
    aliases = {"a2l": "A2l", "a2lminus1": "A2lMinus1", "d": "D"}
    return TwistedCase(aliases.get(kind.lower(), kind), rank)


def form_adjoint(case: TwistedCase, a: QMatrix) -> QMatrix:
    """Adjoint with respect to the bilinear form J: J^{-1} A^T J."""
    j = case.form()
    return j.transpose() @ a.transpose() @ j  # J^{-1} = J^T for these forms


def adjoint(case: TwistedCase, a: QMatrix) -> QMatrix:
    """The case's distinguished involution companion of A.

    For the ambient-SL cases this is the form adjoint J^{-1} A^T J; for
    the D case it is the flip conjugation w A w (the form adjoint remains
    available through :func:`form_adjoint`).
    """
    if a.rows != a.cols or a.rows != case.m():
        raise ValueError(f"expected a {case.m()}x{case.m()} matrix")
    if case.kind == "D":
        w = case.invol_w()
        return w @ a @ w
    return form_adjoint(case, a)


def sigma_lie(case: TwistedCase, a: QMatrix) -> QMatrix:
    """The involution on the ambient Lie algebra."""
    if case.kind == "D":
        w = case.invol_w()
        return w @ a @ w
    return -form_adjoint(case, a)


def in_ambient_lie_algebra(case: TwistedCase, a: QMatrix) -> bool:
    if a.rows != a.cols or a.rows != case.m():
        return False
    if case.kind == "D":
        j = case.form()
        return (j @ a + a.transpose() @ j).is_zero()
    return a.trace() == 0


def eigenspace_membership(case: TwistedCase, a: QMatrix) -> str:
    """Classify a matrix as "p" (odd part), "k" (even part) or "neither".

    The zero matrix lies in both eigenspaces; by convention it reports "p".
    """
    if a.rows != a.cols or a.rows != case.m():
        raise ValueError(f"expected a {case.m()}x{case.m()} matrix")
    if not in_ambient_lie_algebra(case, a):
        return "neither"
    s = sigma_lie(case, a)
    if s == -a:
        return "p"
    if s == a:
        return "k"
    return "neither"


def jordan_type(a: QMatrix) -> Partition:
    """Jordan type of a nilpotent matrix from ranks of its powers."""
    if a.rows != a.cols:
        raise ValueError("Jordan type needs a square matrix")
    m = a.rows
    ranks = [m]
    power = a
    while True:
        r = power.rank()
        ranks.append(r)
        if r == 0:
            break
        if len(ranks) > m:
            raise NonNilpotentError("matrix is not nilpotent")
        power = power @ a
    cols = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    # cols are the dual-partition parts; transpose back to block sizes
    parts = []
    for size in range(len(cols), 0, -1):
        parts.extend([size] * (cols[size - 1] - (cols[size] if size < len(cols) else 0)))
    return Partition(tuple(sorted(parts, reverse=True)))


def block_toeplitz_rank(coeffs: list[QMatrix], s: int) -> int:
    """Rank of the s x s upper-triangular block-Toeplitz matrix.

    Block row i carries (0,...,0, coeffs[0], coeffs[1], ...) starting at
    column i, so exactly coeffs[0..s-1] are consumed.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if s > len(coeffs):
        raise ValueError(f"need {s} coefficients, got {len(coeffs)}")
    m = coeffs[0].rows
    big = [[Fraction(0)] * (s * m) for _ in range(s * m)]
    for bi in range(s):
        for bj in range(bi, s):
            block = coeffs[bj - bi]
            for i in range(m):
                row = big[bi * m + i]
                src = block.data[i]
                for j in range(m):
                    row[bj * m + j] = src[j]
    return QMatrix(big).rank()


# ---------------------------------------------------------------------------
# random isometry-group elements
# ---------------------------------------------------------------------------


def exp_nilpotent(n: QMatrix) -> QMatrix:
    """exp of a nilpotent matrix: the finite, exact series."""
    out = QMatrix.identity(n.rows)
    term = QMatrix.identity(n.rows)
    k = 1
    while True:
        term = term @ n
        if term.is_zero():
            return out
        out = out + term.scale(Fraction(1, _factorial(k)))
        k += 1
        if k > n.rows:
            raise NonNilpotentError("exp_nilpotent needs a nilpotent input")


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _random_strict_triangular(m: int, rng: random.Random, upper: bool) -> QMatrix:
    # unit entries keep the rational bit-size of exponential words bounded
    a = [[0] * m for _ in range(m)]
    for _ in range(rng.randint(1, 2)):
        i = rng.randrange(m - 1)
        j = rng.randrange(i + 1, m)
        if upper:
            a[i][j] = rng.choice((-1, 1))
        else:
            a[j][i] = rng.choice((-1, 1))
    return QMatrix(a)


def _is_strict_triangular(a: QMatrix) -> bool:
    n = a.rows
    upper = all(a.data[i][j] == 0 for i in range(n) for j in range(0, i + 1))
    lower = all(a.data[i][j] == 0 for i in range(n) for j in range(i, n))
    return upper or lower


def random_triangular_nilpotent(
    case: TwistedCase,
    part: str,
    rng: random.Random,
    upper: bool | None = None,
    square_zero: bool = False,
) -> QMatrix:
    """A strictly triangular element of the requested eigenspace.

    Projects a random strictly triangular matrix into the ambient algebra
    and then onto the "k" or "p" eigenspace; both projections preserve
    strict triangularity for these forms, so the result is nilpotent.
    With square_zero the sample is retried until its square vanishes.
    """
    if part not in ("k", "p"):
        raise ValueError("part must be 'k' or 'p'")
    m = case.m()
    for _ in range(200):
        up = rng.random() < 0.5 if upper is None else upper
        u = _random_strict_triangular(m, rng, up)
        if case.kind == "D":
            u = u - case.form().transpose() @ u.transpose() @ case.form()
        s = sigma_lie(case, u)
        n = u + s if part == "k" else u - s
        if n.is_zero():
            continue
        if square_zero and not (n @ n).is_zero():
            continue
        assert _is_strict_triangular(n)
        assert eigenspace_membership(case, n) == part
        return n
    raise RuntimeError("failed to sample a nonzero nilpotent")


def random_k_element(case: TwistedCase, seed: int | random.Random = 0) -> QMatrix:
    """A seeded element of the twisted fixed group.

    Product of at most four exponentials of strictly triangular
    even-eigenspace square-zero nilpotents with unit entries, so the
    result is an integer matrix: exact, of determinant one, fixed by the
    involution, and preserving the form.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    g = QMatrix.identity(case.m())
    for i in range(rng.randint(2, 4)):
        try:
            n = random_triangular_nilpotent(
                case, "k", rng, upper=(i % 2 == 0), square_zero=True
            )
        except RuntimeError:
            # tiny even eigenspaces (e.g. so_3) have no square-zero elements
            n = random_triangular_nilpotent(case, "k", rng, upper=(i % 2 == 0))
        g = g @ exp_nilpotent(n)
    return g
