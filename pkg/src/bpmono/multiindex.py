"""Multiindex combinatorics for sums of powers x_1^(l_1+1) + ... + x_n^(l_n+1)."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

MultiIndex = tuple[int, ...]


class UndefinedModulus(ValueError):
    pass


@dataclass(frozen=True)
class ExponentVector:
    exponents: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.exponents)
        if not e or any(x < 1 for x in e):
            raise ValueError(f"exponent vector must be nonempty and positive, got {e}")
        object.__setattr__(self, "exponents", e)

    @classmethod
    def of(cls, l: "ExponentVector | Sequence[int] | str") -> "ExponentVector":
        if isinstance(l, ExponentVector):
            return l
        if isinstance(l, str):
            l = [int(x) for x in l.replace(" ", "").split(",") if x]
        return cls(tuple(l))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def mu(self) -> int:
        return reduce(lambda a, b: a * b, self.exponents, 1)

    @property
    def last(self) -> int:
        return self.exponents[-1]

    def truncated(self) -> "ExponentVector":
        return ExponentVector(self.exponents[:-1])

    def __iter__(self):
        return iter(self.exponents)

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))


def enumerate_indices(l) -> list[MultiIndex]:
    l = ExponentVector.of(l)
    return list(itertools.product(*(range(1, k + 1) for k in l)))


def rank_of(i: Sequence[int], l) -> int:
    """1-based position of ``i`` in the lexicographic order."""
    l = ExponentVector.of(l)
    if len(i) != l.n or any(not 1 <= c <= k for c, k in zip(i, l)):
        raise ValueError(f"{tuple(i)} is not an index over {l}")
    r = 0
    for c, k in zip(i, l):
        r = r * k + (c - 1)
    return r + 1


def unrank(r: int, l) -> MultiIndex:
    l = ExponentVector.of(l)
    if not 1 <= r <= l.mu:
        raise ValueError(f"rank {r} out of 1..{l.mu}")
    r -= 1
    out = []
    for k in reversed(l.exponents):
        out.append(r % k + 1)
        r //= k
    return tuple(reversed(out))


def next_index(i: Sequence[int], l) -> MultiIndex | None:
    """Lexicographic successor of a whole multiindex (None at the end)."""
    r = rank_of(i, l)
    return unrank(r + 1, l) if r < ExponentVector.of(l).mu else None


def next_component(c: int) -> int:
    """Successor of a single component."""
    return c + 1


def _pair_correlated(i: Sequence[int], j: Sequence[int]) -> bool:
    if tuple(i) == tuple(j):
        return False
    if tuple(j) < tuple(i):
        i, j = j, i
    return all(b in (a, a + 1) for a, b in zip(i, j))


def is_correlated(*indices: Sequence[int]) -> bool:
    if len(indices) == 1 and len(indices[0]) and not isinstance(indices[0][0], int):
        indices = tuple(indices[0])
    if len(indices) not in (2, 3, 4):
        raise ValueError("correlation is defined for 2, 3 or 4 indices")
    return all(_pair_correlated(a, b) for a, b in itertools.combinations(indices, 2))


def level_of(i: Sequence[int], j: Sequence[int]) -> int:
    return j[0] - i[0]


def modulus_of(i1: int, i2: int, j1: int, j2: int, l1: int, l2: int, eta2: float = 1.0) -> float:
    if i1 == j1:
        raise UndefinedModulus("modulus needs distinct leading components")
    if i2 == j2:
        return 0.0
    return eta2 * abs(math.sin(math.pi * (i2 - j2) / l2) / math.sin(math.pi * (i1 - j1) / l1))


def index_label(i: Sequence[int], l=None) -> str:
    """``12`` style label, or ``[1,2]`` when some exponent is 10 or more."""
    wide = l is not None and max(ExponentVector.of(l)) >= 10
    if wide or any(c >= 10 or c < 1 for c in i):
        return "[" + ",".join(map(str, i)) + "]"
    return "".join(map(str, i))


def parse_index(text: str, n: int | None = None) -> MultiIndex:
    text = text.strip()
    if text.startswith("["):
        out = tuple(int(x) for x in text.strip("[]").split(","))
    else:
        out = tuple(int(ch) for ch in text)
    if n is not None and len(out) != n:
        raise ValueError(f"index {text!r} should have {n} components")
    return out


def edge_weight(i: Sequence[int], j: Sequence[int]) -> int:
    return -1 if (1 + sum(b - a for a, b in zip(i, j))) % 2 else 1


@dataclass(frozen=True)
class DynkinDiagram:
    exponents: ExponentVector
    vertices: tuple[MultiIndex, ...]
    edges: tuple[tuple[MultiIndex, MultiIndex, int], ...]

    def weight(self, i, j) -> int | None:
        i, j = sorted((tuple(i), tuple(j)))
        for a, b, w in self.edges:
            if (a, b) == (i, j):
                return w
        return None

    def triangles(self) -> list[tuple[MultiIndex, MultiIndex, MultiIndex]]:
        adj = {(a, b) for a, b, _ in self.edges}
        return [
            t for t in itertools.combinations(self.vertices, 3)
            if (t[0], t[1]) in adj and (t[0], t[2]) in adj and (t[1], t[2]) in adj
        ]

    def to_dot(self) -> str:
        l = self.exponents
        lines = [f'graph "dynkin_{"_".join(map(str, l))}" {{']
        for v in self.vertices:
            lines.append(f'  "{index_label(v, l)}";')
        for a, b, w in self.edges:
            lines.append(f'  "{index_label(a, l)}" -- "{index_label(b, l)}" [label="{w:+d}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "exponents": list(self.exponents.exponents),
            "vertices": [list(v) for v in self.vertices],
            "edges": [{"i": list(a), "j": list(b), "weight": w} for a, b, w in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def build_dynkin(l) -> DynkinDiagram:
    l = ExponentVector.of(l)
    verts = enumerate_indices(l)
    edges = [
        (a, b, edge_weight(a, b))
        for a, b in itertools.combinations(verts, 2)
        if _pair_correlated(a, b)
    ]
    return DynkinDiagram(l, tuple(verts), tuple(edges))


def correlated_pairs(l) -> list[tuple[MultiIndex, MultiIndex]]:
    return [(a, b) for a, b, _ in build_dynkin(l).edges]


def correlated_triples(l) -> list[tuple[MultiIndex, MultiIndex, MultiIndex]]:
    return [t for t in itertools.combinations(enumerate_indices(l), 3) if is_correlated(*t)]


def all_pairs(l) -> Iterable[tuple[MultiIndex, MultiIndex]]:
    return itertools.combinations(enumerate_indices(l), 2)
