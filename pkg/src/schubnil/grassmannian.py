"""Laurent-polynomial matrices over the rationals and the Schubert-cell
machinery for the twisted loop groups.

A LaurentMatrix is a finite map exponent -> QMatrix; multiplication is
exact convolution.  On top of that sit: the determinant-one membership
test, the loop-group anti-involution g(t) -> g(-t)^{-1} (computed as an
exact adjugate), the projection reading the t^{-1} coefficient of a
normalized representative, the diagonal norm elements attached to
dominant weights, and the cell-determination algorithm driven by ranks of
block-Toeplitz matrices of coefficients.
"""
from __future__ import annotations

from fractions import Fraction

from .exactlinalg import QMatrix, TwistedCase, block_toeplitz_rank
from .weights import WeightTuple


class NotSpecialLinear(ValueError):
    """The element does not have determinant one."""


class NotOrthogonal(ValueError):
    """The element does not preserve the symmetric form of the D case."""


class CellPatternError(ValueError):
    """The rank profile does not match any dominant weight of the case."""


class LaurentMatrix:
    """Square matrix of Laurent polynomials, stored coefficient-wise."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: dict[int, QMatrix]):
        self.m = m
        clean: dict[int, QMatrix] = {}
        for e, mat in coeffs.items():
            if mat.rows != m or mat.cols != m:
                raise ValueError("coefficient size mismatch")
            if not mat.is_zero():
                clean[int(e)] = mat
        self.coeffs = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def identity(cls, m: int) -> "LaurentMatrix":
        return cls(m, {0: QMatrix.identity(m)})

    @classmethod
    def constant(cls, mat: QMatrix) -> "LaurentMatrix":
        return cls(mat.rows, {0: mat})

    @classmethod
    def diag_powers(cls, entries: list[tuple[Fraction, int]]) -> "LaurentMatrix":
        """Diagonal matrix diag(c_i t^{e_i})."""
        m = len(entries)
        out: dict[int, list] = {}
        for i, (c, e) in enumerate(entries):
            out.setdefault(e, [[Fraction(0)] * m for _ in range(m)])[i][i] = Fraction(c)
        return cls(m, {e: QMatrix(rows) for e, rows in out.items()})

    # -- accessors --------------------------------------------------------
    def coefficient(self, e: int) -> QMatrix:
        return self.coeffs.get(e, QMatrix.zeros(self.m))

    def exponents(self) -> list[int]:
        return sorted(self.coeffs)

    def lowest(self) -> int:
        if not self.coeffs:
            raise ValueError("zero matrix has no lowest exponent")
        return min(self.coeffs)

    def highest(self) -> int:
        if not self.coeffs:
            raise ValueError("zero matrix has no highest exponent")
        return max(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic -------------------------------------------------------
    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.m != other.m:
            raise ValueError("size mismatch")
        acc: dict[int, QMatrix] = {}
        for ea, a in self.coeffs.items():
            for eb, b in other.coeffs.items():
                e = ea + eb
                prod = a @ b
                acc[e] = acc[e] + prod if e in acc else prod
        return LaurentMatrix(self.m, acc)

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.m != other.m:
            raise ValueError("size mismatch")
        acc = dict(self.coeffs)
        for e, b in other.coeffs.items():
            acc[e] = acc[e] + b if e in acc else b
        return LaurentMatrix(self.m, acc)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.m != other.m:
            raise ValueError("size mismatch")
        acc = dict(self.coeffs)
        for e, b in other.coeffs.items():
            acc[e] = acc[e] - b if e in acc else -b
        return LaurentMatrix(self.m, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentMatrix)
            and self.m == other.m
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.m, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def subs_minus_t(self) -> "LaurentMatrix":
        """Substitute t -> -t."""
        return LaurentMatrix(
            self.m, {e: (mat if e % 2 == 0 else -mat) for e, mat in self.coeffs.items()}
        )

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(self.m, {e: mat.transpose() for e, mat in self.coeffs.items()})

    def evaluate(self, q: Fraction) -> QMatrix:
        """Exact value at a nonzero rational point."""
        q = Fraction(q)
        if q == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        out = QMatrix.zeros(self.m)
        for e, mat in self.coeffs.items():
            out = out + mat.scale(q**e)
        return out

    def conjugate(self, k: QMatrix, k_inv: QMatrix | None = None) -> "LaurentMatrix":
        """k g k^{-1} for a constant invertible matrix k."""
        k_inv = k.inv() if k_inv is None else k_inv
        return LaurentMatrix(self.m, {e: k @ mat @ k_inv for e, mat in self.coeffs.items()})

    def __str__(self):
        chunks = []
        for e in self.exponents():
            chunks.append(f"t^{e} *\n{self.coeffs[e]}")
        return "\n".join(chunks) if chunks else "0"

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": {str(e): mat.to_json() for e, mat in self.coeffs.items()}}

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentMatrix":
        m = int(obj["m"])
        return cls(m, {int(e): QMatrix.from_json(mat) for e, mat in obj["coeffs"].items()})


# ---------------------------------------------------------------------------
# determinant and inversion
# ---------------------------------------------------------------------------


def laurent_det(g: LaurentMatrix) -> dict[int, Fraction]:
    """Determinant as a Laurent polynomial, via exact evaluation at enough
    rational points followed by Newton interpolation.

    The determinant's exponents lie within [m*lowest, m*highest], so
    m*(highest-lowest)+1 sample points pin it down exactly.
    """
    if g.is_zero():
        return {}
    lo, hi = g.lowest(), g.highest()
    m = g.m
    e_min, e_max = m * lo, m * hi
    npts = e_max - e_min + 1
    nodes = [Fraction(i) for i in range(1, npts + 1)]
    values = [g.evaluate(q).det() * q ** (-e_min) for q in nodes]
    coeffs = _newton_interpolate(nodes, values)
    return {e_min + d: c for d, c in enumerate(coeffs) if c != 0}


def det1_check(g: LaurentMatrix) -> bool:
    """True iff det g(t) = 1 identically.

    Checks the value at m*(highest-lowest)+1 points; since the determinant
    is confined to that exponent window, agreement at all points is exact.
    """
    if g.is_zero():
        return False
    lo, hi = g.lowest(), g.highest()
    npts = g.m * (hi - lo) + 1
    return all(g.evaluate(Fraction(i)).det() == 1 for i in range(1, npts + 1))


def _newton_interpolate(nodes: list[Fraction], values: list[Fraction]) -> list[Fraction]:
    """Coefficients (low degree first) of the interpolating polynomial."""
    k = len(nodes)
    dd = list(values)
    for order in range(1, k):
        for i in range(k - 1, order - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - order])
    # Horner expansion of the Newton form into monomial coefficients
    coeffs = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        new = [Fraction(0)] * k
        for d in range(k - 1):
            if coeffs[d]:
                new[d + 1] += coeffs[d]
                new[d] -= nodes[i] * coeffs[d]
        new[0] += dd[i]
        coeffs = new
    return coeffs


def _inverse_normalized(g: LaurentMatrix) -> LaurentMatrix:
    """Inverse of I + (strictly negative part), by coefficient recurrence.

    When det g = 1 the inverse is the adjugate, whose exponents are bounded
    below by (m-1)*lowest; the recurrence is cut there and the product is
    re-checked exactly.
    """
    m = g.m
    lo = g.lowest()
    depth = (m - 1) * (-lo)
    inv: dict[int, QMatrix] = {0: QMatrix.identity(m)}
    for e in range(-1, -depth - 1, -1):
        acc = QMatrix.zeros(m)
        for a, mat in g.coeffs.items():
            if a < 0 and e - a <= 0 and (e - a) in inv:
                acc = acc + mat @ inv[e - a]
        if not acc.is_zero():
            inv[e] = -acc
    return LaurentMatrix(m, inv)


def _inverse_general(g: LaurentMatrix) -> LaurentMatrix:
    """Adjugate-inverse of a determinant-one element by interpolation."""
    m = g.m
    lo, hi = g.lowest(), g.highest()
    e_min, e_max = (m - 1) * lo, (m - 1) * hi
    npts = e_max - e_min + 1
    nodes = [Fraction(i) for i in range(1, npts + 1)]
    inverses = [g.evaluate(q).inv() for q in nodes]
    coeff_mats = {e: [[Fraction(0)] * m for _ in range(m)] for e in range(e_min, e_max + 1)}
    for i in range(m):
        for j in range(m):
            values = [inverses[p].data[i][j] * nodes[p] ** (-e_min) for p in range(npts)]
            poly = _newton_interpolate(nodes, values)
            for d, c in enumerate(poly):
                if c:
                    coeff_mats[e_min + d][i][j] = c
    return LaurentMatrix(m, {e: QMatrix(rows) for e, rows in coeff_mats.items()})


def iota(g: LaurentMatrix) -> LaurentMatrix:
    """The loop anti-involution g(t) -> g(-t)^{-1}.

    Requires det g = 1, in which case the inverse is the adjugate and is
    again a finite Laurent matrix.  The result is certified by an exact
    product check.
    """
    if not det1_check(g):
        raise NotSpecialLinear("iota needs determinant one")
    h = g.subs_minus_t()
    normalized = h.coefficient(0) == QMatrix.identity(g.m) and h.highest() <= 0
    inv = _inverse_normalized(h) if normalized else _inverse_general(h)
    if (h @ inv) != LaurentMatrix.identity(g.m):
        raise AssertionError("inversion failed the product check")
    return inv


def pi(g: LaurentMatrix) -> QMatrix:
    """The t^{-1} coefficient of a normalized representative.

    Only accepts elements that are the identity at exponent zero with no
    positive exponents.
    """
    if g.coefficient(0) != QMatrix.identity(g.m) or (not g.is_zero() and g.highest() > 0):
        raise ValueError("projection needs a normalized representative (I + lower terms)")
    return g.coefficient(-1)


def sigma_fixed(case: TwistedCase, g: LaurentMatrix) -> bool:
    """Whether g is fixed by the twisted involution.

    For the ambient-SL cases this is the identity g(-t)^T J g(t) = J; for
    the D case it is w g(-t) w = g(t), with membership in the orthogonal
    group checked first.  Precondition failures raise distinct errors.
    """
    if g.m != case.m():
        raise ValueError(f"expected size {case.m()}, got {g.m}")
    if not det1_check(g):
        raise NotSpecialLinear("element does not have determinant one")
    j = LaurentMatrix.constant(case.form())
    if case.kind == "D":
        if (g @ j @ g.transpose()) != j:
            raise NotOrthogonal("element does not preserve the symmetric form")
        w = LaurentMatrix.constant(case.invol_w())
        return (w @ g.subs_minus_t() @ w) == g
    return (g.subs_minus_t().transpose() @ j @ g) == j


def norm_element(case: TwistedCase, lam: WeightTuple) -> LaurentMatrix:
    """The diagonal representative of the cell attached to a dominant weight.

    The exponent pattern is (a_1..a_l, 0, -a_l..-a_1) for A2l,
    (a_1..a_l, -a_l..-a_1) for A2lMinus1 and the doubled pattern
    (2a_1..2a_l, 0, 0, -2a_l..-2a_1) for D.  Signs are resolved so the
    result is fixed by the involution and has determinant one; the coset
    does not depend on that resolution.
    """
    if lam.htype != case.htype():
        raise ValueError(f"weight type {lam.htype} does not match case {case}")
    if not lam.is_dominant():
        raise ValueError("norm elements are attached to dominant weights")
    a = lam.coords
    ell = case.rank
    if case.kind == "D":
        exps = [2 * x for x in a] + [0, 0] + [-2 * x for x in reversed(a)]
        signs = [1] * len(exps)
    else:
        if case.kind == "A2l":
            exps = list(a) + [0] + [-x for x in reversed(a)]
        else:
            exps = list(a) + [-x for x in reversed(a)]
        m = len(exps)
        signs = [1] * m
        for i in range(m // 2):
            signs[m - 1 - i] = (-1) ** exps[i]
        if case.kind == "A2l":
            signs[ell] = (-1) ** sum(a)
    return LaurentMatrix.diag_powers([(Fraction(s), e) for s, e in zip(signs, exps)])


def cell_of(case: TwistedCase, g: LaurentMatrix) -> WeightTuple:
    """The dominant weight whose cell contains g.

    Ranks of the block-Toeplitz matrices of coefficients recover, by their
    first differences, the multiset of coweight exponents of the ambient
    double coset; matching the case's symmetric exponent pattern then reads
    off the weight.  Inputs whose profile fits no pattern are rejected.
    """
    if not sigma_fixed(case, g):
        raise CellPatternError("element is not fixed by the involution")
    m = case.m()
    lo = g.lowest()
    if lo > 0:
        raise CellPatternError("element has no coefficient in nonpositive degrees")
    s_max = 2 * (-lo) + 1
    coeffs = [g.coefficient(lo + i) for i in range(s_max)]
    mults: list[int] = []  # mults[d] = #{exponents equal to lo + d}
    prev_rank = 0
    prev_diff = 0
    saturated = False
    for s in range(1, s_max + 1):
        r = block_toeplitz_rank(coeffs, s)
        diff = r - prev_rank
        mults.append(diff - prev_diff)
        prev_rank, prev_diff = r, diff
        if diff == m:
            saturated = True
            break
    if not saturated:
        raise CellPatternError("rank profile did not saturate; input is inconsistent")
    exps: list[int] = []
    for d, mult in enumerate(mults):
        if mult < 0:
            raise CellPatternError("rank profile is not convex")
        exps.extend([lo + d] * mult)
    exps.sort(reverse=True)
    if len(exps) != m or sum(exps) != 0:
        raise CellPatternError(f"exponent multiset {exps} is not an SL coweight")
    if any(exps[i] != -exps[m - 1 - i] for i in range(m)):
        raise CellPatternError(f"exponent multiset {exps} is not symmetric")
    ell = case.rank
    if case.kind == "A2l":
        if exps[ell] != 0:
            raise CellPatternError(f"middle exponent of {exps} is nonzero")
        coords = exps[:ell]
    elif case.kind == "A2lMinus1":
        coords = exps[:ell]
        if sum(coords) % 2 != 0:
            raise CellPatternError(f"coordinate sum of {coords} is odd")
    else:
        if exps[ell] != 0 or exps[ell + 1] != 0:
            raise CellPatternError(f"middle exponents of {exps} are nonzero")
        if any(x % 2 != 0 for x in exps):
            raise CellPatternError(f"exponents {exps} are not all even")
        coords = [x // 2 for x in exps[:ell]]
    lam = WeightTuple(case.htype(), tuple(coords))
    if not lam.is_dominant():
        raise CellPatternError(f"recovered weight {lam} is not dominant")
    return lam


def loop_rotation_factor(case: TwistedCase, n: QMatrix, k: int) -> LaurentMatrix:
    """exp(n t^k) for a nilpotent constant n, as an exact Laurent matrix.

    Fixed by the involution exactly when n lies in the even eigenspace for
    even k and in the odd eigenspace for odd k.
    """
    m = case.m()
    out: dict[int, QMatrix] = {0: QMatrix.identity(m)}
    term = QMatrix.identity(m)
    fact = 1
    for p in range(1, m + 1):
        term = term @ n
        if term.is_zero():
            break
        fact *= p
        e = p * k
        add = term.scale(Fraction(1, fact))
        out[e] = out[e] + add if e in out else add
    else:
        raise ValueError("n must be nilpotent")
    return LaurentMatrix(m, out)
