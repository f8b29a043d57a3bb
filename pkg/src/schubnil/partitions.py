"""Partitions, nilpotent-orbit classifications, dimensions and closure order.

Covers the orbit combinatorics for the isometry-group actions on
self-adjoint maps (symplectic form on 2n coordinates, symmetric form on
2n or 2n+1 coordinates) and for the adjoint nilpotent orbits of sp_2n and
so_{2n+1}.  Orbits are labelled by partitions; the closure order is the
dominance order on partitions, and dimensions come from the dual
partition.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

PAIR_KINDS = ("sympA", "orthoddA", "orthevenA", "lieSp", "lieSOodd")

_SYMMETRIC_KINDS = ("sympA", "orthoddA", "orthevenA")
_CLASSICAL_KINDS = ("lieSp", "lieSOodd")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    def n(self) -> int:
        return sum(self.parts)

    def dual(self) -> "Partition":
        """Column lengths of the Young diagram: s_i = #{j : parts[j] >= i}."""
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1))
        )

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self.parts if p == value)

    def exponent_str(self) -> str:
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            mult = j - i
            out.append(str(self.parts[i]) + (f"^{mult}" if mult > 1 else ""))
            i = j
        return " ".join(out) if out else "0"

    def __str__(self):
        return "[" + self.exponent_str() + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accepts exponent notation like "3^2 1^4" as well as "[3,3,1,1,1,1]"."""
        text = text.strip().strip("[]")
        parts: list[int] = []
        for token in re.split(r"[,\s]+", text):
            if not token:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise ValueError(f"bad partition token {token!r}")
            val, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([val] * mult)
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_any(cls, obj) -> "Partition":
        if isinstance(obj, Partition):
            return obj
        if isinstance(obj, str):
            return cls.parse(obj)
        return cls(tuple(sorted((int(x) for x in obj), reverse=True)))


@dataclass(frozen=True)
class PairCase:
    """One of the five orbit settings, with its defining integer n >= 1.

    sympA:      Sp_2n acting on self-adjoint maps of a symplectic space, m = 2n
    orthoddA:   SO_{2n+1} on self-adjoint maps of an odd orthogonal space, m = 2n+1
    orthevenA:  SO_2n on self-adjoint maps of an even orthogonal space, m = 2n
    lieSp:      adjoint nilpotent orbits in sp_2n, m = 2n
    lieSOodd:   adjoint nilpotent orbits in so_{2n+1}, m = 2n+1
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in PAIR_KINDS:
            raise ValueError(f"unknown case {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def m(self) -> int:
        return 2 * self.n + (1 if self.kind in ("orthoddA", "lieSOodd") else 0)

    def __str__(self):
        return f"{self.kind}({self.n})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n}

    @classmethod
    def from_json(cls, obj: dict) -> "PairCase":
        return cls(obj["kind"], obj["n"])


@dataclass(frozen=True)
class OrbitDescriptor:
    case: PairCase
    partition: Partition
    split: str | None = None

    def __post_init__(self):
        if self.partition.n() != self.case.m():
            raise ValueError(
                f"partition of {self.partition.n()} does not fit m={self.case.m()}"
            )
        if self.split is not None and self.split not in ("I", "II"):
            raise ValueError(f"split label must be 'I' or 'II', got {self.split!r}")

    def label(self) -> str:
        s = str(self.partition)
        return f"{s} ({self.split})" if self.split else s

    def to_json(self) -> dict:
        return {
            "case": self.case.to_json(),
            "partition": list(self.partition.parts),
            "split": self.split,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OrbitDescriptor":
        return cls(
            PairCase.from_json(obj["case"]),
            Partition.from_any(obj["partition"]),
            obj.get("split"),
        )


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if n == 0:
        yield Partition(())
        return

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for first in range(min(cap, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def is_valid_partition(case: PairCase, p: Partition) -> bool:
    """Whether the partition labels a nilpotent orbit in the given case."""
    if p.n() != case.m():
        return False
    if case.kind in ("orthoddA", "orthevenA"):
        return True
    values = set(p.parts)
    if case.kind == "sympA":
        return all(p.multiplicity(v) % 2 == 0 for v in values)
    if case.kind == "lieSp":
        return all(p.multiplicity(v) % 2 == 0 for v in values if v % 2 == 1)
    if case.kind == "lieSOodd":
        return all(p.multiplicity(v) % 2 == 0 for v in values if v % 2 == 0)
    raise AssertionError(case.kind)


def dominates(d: Partition, f: Partition) -> bool:
    """Prefix-sum comparison; both partitions must have the same size."""
    if d.n() != f.n():
        raise ValueError(f"sizes differ: {d.n()} vs {f.n()}")
    run_d = run_f = 0
    for i in range(max(len(d.parts), len(f.parts))):
        run_d += d.parts[i] if i < len(d.parts) else 0
        run_f += f.parts[i] if i < len(f.parts) else 0
        if run_d < run_f:
            return False
    return True


def orbit_dim_symmetric(case: PairCase, p: Partition) -> int:
    """Orbit dimension (m^2 - sum of squared dual parts) / 2."""
    if case.kind not in _SYMMETRIC_KINDS:
        raise ValueError(f"{case.kind} is not a self-adjoint-map case")
    if not is_valid_partition(case, p):
        raise ValueError(f"{p} is not a valid partition for {case}")
    m = case.m()
    sq = sum(s * s for s in p.dual().parts)
    assert (m * m - sq) % 2 == 0
    return (m * m - sq) // 2


def orbit_dim_classical(case: PairCase, p: Partition) -> int:
    """Adjoint orbit dimension: dim g minus the centralizer dimension.

    The centralizer dimension is (sum s_i^2 + #odd parts)/2 in sp and
    (sum s_i^2 - #odd parts)/2 in odd so.
    """
    if case.kind not in _CLASSICAL_KINDS:
        raise ValueError(f"{case.kind} is not an adjoint-orbit case")
    if not is_valid_partition(case, p):
        raise ValueError(f"{p} is not a valid partition for {case}")
    n = case.n
    dim_g = n * (2 * n + 1)
    sq = sum(s * s for s in p.dual().parts)
    odd = sum(1 for d in p.parts if d % 2 == 1)
    if case.kind == "lieSp":
        num = sq + odd
    else:
        num = sq - odd
    assert num % 2 == 0
    return dim_g - num // 2


def orbit_dim(desc: OrbitDescriptor) -> int:
    if desc.case.kind in _SYMMETRIC_KINDS:
        return orbit_dim_symmetric(desc.case, desc.partition)
    return orbit_dim_classical(desc.case, desc.partition)


def classify_orbits(case: PairCase) -> list[OrbitDescriptor]:
    """All nilpotent orbits of the case, largest first.

    Very even partitions (only even parts) of the even orthogonal case
    appear twice, with split labels I and II.
    """
    out = []
    for p in partitions_of(case.m()):
        if not is_valid_partition(case, p):
            continue
        if case.kind == "orthevenA" and all(d % 2 == 0 for d in p.parts):
            out.append(OrbitDescriptor(case, p, "I"))
            out.append(OrbitDescriptor(case, p, "II"))
        else:
            out.append(OrbitDescriptor(case, p))
    out.sort(key=lambda d: (-orbit_dim(d), tuple(-x for x in d.partition.parts), d.split or ""))
    return out


def _closure_lt(a: OrbitDescriptor, b: OrbitDescriptor) -> bool:
    """Strict closure order: a < b.  Split twins are incomparable."""
    if a.partition == b.partition:
        return False
    return dominates(b.partition, a.partition)


def closure_hasse(case: PairCase) -> tuple[list[OrbitDescriptor], list[tuple[int, int]]]:
    """Orbits plus covering edges (larger orbit -> smaller orbit).

    Computed by full pairwise dominance followed by transitive reduction;
    fine at the scales this library targets.
    """
    nodes = classify_orbits(case)
    k = len(nodes)
    lt = [[_closure_lt(nodes[j], nodes[i]) for j in range(k)] for i in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            if not lt[i][j]:
                continue
            if any(lt[i][w] and lt[w][j] for w in range(k)):
                continue
            edges.append((i, j))
    return nodes, edges


def hasse_dot(case: PairCase) -> str:
    """The Hasse diagram of the closure order, as DOT text."""
    nodes, edges = closure_hasse(case)
    lines = [f'digraph "{case}" {{']
    for d in nodes:
        lines.append(f'  "{d.label()}";')
    for i, j in edges:
        lines.append(f'  "{nodes[i].label()}" -> "{nodes[j].label()}";')
    lines.append("}")
    return "\n".join(lines)
