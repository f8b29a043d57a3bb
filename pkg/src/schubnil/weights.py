"""Weight combinatorics for the reductive groups of type B and C.

Weights are integer tuples in the standard coordinates, with the type-C
lattice cut out by an even coordinate sum.  The module provides simple
roots and fundamental weights in those coordinates, the dominance partial
order, the "small" predicate (a dominant weight is small when it does not
lie above twice the highest short root), the closed-form enumeration of
all small dominant weights, and the dimension of the Schubert variety
attached to a dominant weight.

Positive roots are generated from the simple roots by a breadth-first
closure using root strings, so any rank works uniformly; nothing beyond
the simple-root tables is hard-coded.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class HType:
    """Cartan type B_rank or C_rank, rank >= 1."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in ("B", "C"):
            raise ValueError(f"unknown type {self.kind!r}, expected 'B' or 'C'")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    def __str__(self):
        return f"{self.kind}{self.rank}"


def btype(rank: int) -> HType:
    return HType("B", rank)


def ctype(rank: int) -> HType:
    return HType("C", rank)


@dataclass(frozen=True)
class WeightTuple:
    """A weight in standard coordinates, tied to its ambient type.

    For type C the coordinate sum must be even; tuples violating the
    lattice constraint are rejected at construction.
    """

    htype: HType
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.htype.rank:
            raise ValueError(
                f"expected {self.htype.rank} coordinates, got {len(self.coords)}"
            )
        if self.htype.kind == "C" and sum(self.coords) % 2 != 0:
            raise ValueError(
                f"type C weights need an even coordinate sum, got {self.coords}"
            )

    def is_dominant(self) -> bool:
        c = self.coords
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and (
            not c or c[-1] >= 0
        )

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> dict:
        return {"htype": self.htype.kind, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightTuple":
        coords = obj["coords"]
        return cls(HType(obj["htype"], len(coords)), tuple(coords))


def simple_roots(htype: HType) -> list[WeightTuple]:
    """Simple roots in standard coordinates.

    Both types share gamma_i = e_i - e_{i+1} for i < rank; the last simple
    root is e_rank for B and 2 e_rank for C.
    """
    ell = htype.rank
    roots = []
    for i in range(ell - 1):
        v = [0] * ell
        v[i], v[i + 1] = 1, -1
        roots.append(WeightTuple(htype, tuple(v)))
    last = [0] * ell
    last[-1] = 1 if htype.kind == "B" else 2
    roots.append(WeightTuple(htype, tuple(last)))
    return roots


def fundamental_weight(htype: HType, j: int) -> WeightTuple:
    """The j-th fundamental weight (j = 0 gives the zero weight).

    Only the fundamental weights that lie in the realized lattice can be
    returned: for B the top one is a half-integer vector, and for C the
    odd-index ones have odd coordinate sum.  Those raise ValueError.
    """
    ell = htype.rank
    if not 0 <= j <= ell:
        raise ValueError(f"index {j} out of range for rank {ell}")
    if htype.kind == "B" and j == ell:
        raise ValueError(
            "the top fundamental weight of type B is half-integral; "
            "its double is (1,...,1)"
        )
    if htype.kind == "C" and j % 2 == 1:
        raise ValueError(
            "odd fundamental weights of type C lie outside the even-sum lattice"
        )
    return WeightTuple(htype, tuple([1] * j + [0] * (ell - j)))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _coroot(alpha: tuple[int, ...]) -> tuple[int, ...]:
    norm = _dot(alpha, alpha)
    assert all((2 * a) % norm == 0 for a in alpha)
    return tuple(2 * a // norm for a in alpha)


def positive_roots(htype: HType) -> list[tuple[int, ...]]:
    """All positive roots, as coordinate tuples.

    Breadth-first closure from the simple roots: a root alpha extends by a
    simple root gamma exactly when the gamma-string through alpha does,
    i.e. when q = p - <alpha, gamma^vee> >= 1 where p is how far the
    string continues backwards.
    """
    simples = [r.coords for r in simple_roots(htype)]
    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for alpha in layer:
            for gamma in simples:
                p = 0
                back = tuple(a - g for a, g in zip(alpha, gamma))
                while back in found:
                    p += 1
                    back = tuple(a - g for a, g in zip(back, gamma))
                q = p - _dot(alpha, _coroot(gamma))
                if q >= 1:
                    up = tuple(a + g for a, g in zip(alpha, gamma))
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, reverse=True)


def highest_short_root(htype: HType) -> WeightTuple:
    """The dominance-maximal root of minimal length."""
    roots = positive_roots(htype)
    min_norm = min(_dot(a, a) for a in roots)
    short = [a for a in roots if _dot(a, a) == min_norm]
    for a in short:
        if all(b == a or _le_coords(htype, b, a) for b in short):
            return WeightTuple(htype, a)
    raise AssertionError("no maximal short root found")


def _expansion_coeffs(htype: HType, diff: tuple[int, ...]) -> list:
    """Coefficients of ``diff`` in the simple-root basis.

    Prefix sums give the coefficients directly: c_k = sum of the first k
    entries, except that for type C the last coefficient is half the total
    (the last simple root being 2 e_rank).
    """
    ell = htype.rank
    coeffs = []
    run = 0
    for k in range(ell):
        run += diff[k]
        coeffs.append(run)
    if htype.kind == "C":
        if coeffs[-1] % 2 != 0:
            raise ValueError("difference leaves the type C root lattice")
        coeffs[-1] = coeffs[-1] // 2
    return coeffs


def _le_coords(htype: HType, mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    diff = tuple(a - b for a, b in zip(lam, mu))
    return all(c >= 0 for c in _expansion_coeffs(htype, diff))


def dominance_le(mu: WeightTuple, lam: WeightTuple) -> bool:
    """True when lam - mu is a nonnegative integer sum of simple roots."""
    if mu.htype != lam.htype:
        raise ValueError(f"type mismatch: {mu.htype} vs {lam.htype}")
    if not (mu.is_dominant() and lam.is_dominant()):
        raise ValueError("dominance order is only taken on dominant weights")
    return _le_coords(mu.htype, mu.coords, lam.coords)


def height(wt: WeightTuple) -> int:
    """Sum of simple-root coefficients; strictly monotone along dominance."""
    return sum(_expansion_coeffs(wt.htype, wt.coords))


def is_small(lam: WeightTuple) -> bool:
    """A dominant weight is small when it does not dominate 2*gamma_0."""
    if not lam.is_dominant():
        raise ValueError("smallness is only defined for dominant weights")
    gamma0 = highest_short_root(lam.htype)
    twice = WeightTuple(lam.htype, tuple(2 * c for c in gamma0.coords))
    return not dominance_le(twice, lam)


def enumerate_small(htype: HType) -> list[WeightTuple]:
    """All small dominant weights, sorted by height (then lexicographically).

    Type B: (1^j 0^(l-j)) for j = 0..l-1 together with (1,...,1).
    Type C: (1^(2j) 0^...) and (2 1^(2j) 0^...), as far as the rank allows.
    """
    ell = htype.rank
    out = []
    if htype.kind == "B":
        for j in range(ell + 1):
            out.append(WeightTuple(htype, tuple([1] * j + [0] * (ell - j))))
    else:
        for j in range(ell // 2 + 1):
            out.append(WeightTuple(htype, tuple([1] * (2 * j) + [0] * (ell - 2 * j))))
        for j in range((ell - 1) // 2 + 1):
            out.append(
                WeightTuple(htype, tuple([2] + [1] * (2 * j) + [0] * (ell - 2 * j - 1)))
            )
    out.sort(key=lambda w: (height(w), w.coords))
    return out


def schubert_dim(lam: WeightTuple) -> int:
    """Dimension of the Schubert variety of a dominant weight.

    Equals the pairing of the weight with the sum of all positive coroots.
    """
    if not lam.is_dominant():
        raise ValueError("Schubert dimension is only defined for dominant weights")
    return sum(_dot(lam.coords, _coroot(a)) for a in positive_roots(lam.htype))
