"""Hurwitz action of braid groups on tuples of group elements."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .words import (
    BraidWord,
    FreeWord,
    Permutation,
    StrandMismatch,
    artin_action,
    braids_equal,
    exponent_sum,
    permutation_of,
)

HOLDS, FAILS, EXCEEDED = "holds", "fails", "resource-exceeded"
DEFAULT_ORBIT_CAP = 10**4


@dataclass
class VerdictReport:
    id: str
    params: Any
    verdict: str
    witness: Any = None
    expected: str = "asserted"

    def __post_init__(self):
        if self.verdict == FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @property
    def ok(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out = {"id": self.id, "params": _jsonable(self.params), "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.expected != "asserted":
            out["expected"] = self.expected
        return out

    def line(self) -> str:
        p = self.params if isinstance(self.params, str) else json.dumps(_jsonable(self.params))
        tail = "" if self.expected == "asserted" else f" [{self.expected}]"
        return f"{self.id} {p}: {self.verdict}{tail}"


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


# ---------------------------------------------------------------------------
# target groups


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def of(cls, rows) -> "SL2Matrix":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "SL2Matrix":
        return cls(1, 0, 0, 1)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __mul__(self, o: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __invert__(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def to_json(self):
        return self.rows()


MINUS_ID = SL2Matrix(-1, 0, 0, -1)
UPPER = SL2Matrix(1, 1, 0, 1)
LOWER = SL2Matrix(1, 0, -1, 1)


class _Target:
    """Group operations for one kind of tuple entry."""

    def __init__(self, tag: str, size: int | None = None):
        self.tag, self.size = tag, size

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return ~x

    def one(self):
        if self.tag == "sl2":
            return SL2Matrix.identity()
        if self.tag == "permutation":
            return Permutation.identity(self.size)
        return BraidWord(self.size)

    def key(self, x):
        if self.tag == "sl2":
            return (x.a, x.b, x.c, x.d)
        if self.tag == "permutation":
            return x.images
        # braid entries are keyed by their Artin image
        return tuple(img.syllables for img in artin_action(x.reduced()).images)

    def eq(self, x, y) -> bool:
        if self.tag == "braid":
            return braids_equal(x, y)
        return x == y

    def class_key(self, x):
        if self.tag == "sl2":
            return x.trace
        if self.tag == "permutation":
            return x.cycle_type()
        # conjugacy invariants only; the braid conjugacy problem is not solved here
        return (exponent_sum(x), permutation_of(x).cycle_type())

    def dump(self, x):
        if self.tag == "sl2":
            return x.rows()
        if self.tag == "permutation":
            return list(x.images)
        return str(x)


@dataclass(frozen=True)
class GTuple:
    target: str
    entries: tuple
    size: int | None = None  # strands for braids, degree for permutations

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.target not in ("sl2", "braid", "permutation"):
            raise ValueError(f"unknown target {self.target!r}")

    @property
    def group(self) -> _Target:
        return _Target(self.target, self.size)

    def __len__(self) -> int:
        return len(self.entries)

    def key(self):
        g = self.group
        return tuple(g.key(x) for x in self.entries)

    def same(self, other: "GTuple") -> bool:
        g = self.group
        return len(self) == len(other) and all(g.eq(x, y) for x, y in zip(self.entries, other.entries))

    def product(self):
        g = self.group
        out = g.one()
        for x in self.entries:
            out = g.mul(out, x)
        return out

    def class_multiset(self) -> list:
        g = self.group
        return sorted(g.class_key(x) for x in self.entries)

    def to_json(self) -> dict:
        tgt = self.target if self.size is None else f"{self.target}({self.size})"
        return {"target": tgt, "entries": [self.group.dump(x) for x in self.entries]}


# ---------------------------------------------------------------------------


def _move(g: _Target, entries: list, letter: int) -> None:
    i = abs(letter) - 1
    x, y = entries[i], entries[i + 1]
    if letter > 0:
        entries[i], entries[i + 1] = g.mul(g.mul(x, y), g.inv(x)), x
    else:
        entries[i], entries[i + 1] = y, g.mul(g.mul(g.inv(y), x), y)


def hurwitz_act(b: BraidWord, t: GTuple) -> GTuple:
    """Left Hurwitz action; the rightmost letter of ``b`` acts first."""
    if b.strands != len(t):
        raise StrandMismatch(f"Br_{b.strands} cannot act on a {len(t)}-tuple")
    g = t.group
    entries = list(t.entries)
    for a in reversed(b.letters):
        _move(g, entries, a)
        if t.target == "braid":
            i = abs(a) - 1
            entries[i], entries[i + 1] = entries[i].reduced(), entries[i + 1].reduced()
    return GTuple(t.target, tuple(entries), t.size)


def evaluate(w: FreeWord, t: GTuple):
    """Substitute the tuple entries for t_1, t_2, ... in ``w``."""
    g = t.group
    out = g.one()
    for k, e in w.syllables:
        x = t.entries[k - 1] if e > 0 else g.inv(t.entries[k - 1])
        for _ in range(abs(e)):
            out = g.mul(out, x)
    return out


def phi_tuple(n: int) -> GTuple:
    a, b = BraidWord.gen(3, 1), BraidWord.gen(3, 2)
    return GTuple("braid", tuple(a if k % 2 == 0 else b for k in range(n)), 3)


def psi_tuple(l: int, lp: int) -> GTuple:
    ents = [MINUS_ID] * l
    for i in range(l + 1, l + lp + 1):
        ents.append(UPPER if (i - l) % 2 else LOWER)
    return GTuple("sl2", tuple(ents))


def perm_tuple(n: int) -> GTuple:
    return GTuple("permutation", tuple(Permutation.transposition(n + 1, i, i + 1) for i in range(1, n + 1)), n + 1)


def standard_braid_tuple(n: int) -> GTuple:
    """(s_1, ..., s_n) in Br_{n+1}."""
    return GTuple("braid", tuple(BraidWord.gen(n + 1, i) for i in range(1, n + 1)), n + 1)


def base_tuple(kind: str, *params: int) -> GTuple:
    if kind == "phi":
        return phi_tuple(*params)
    if kind == "psi":
        return psi_tuple(*params)
    if kind == "perm_h":
        return perm_tuple(*params)
    if kind == "braid_h":
        return standard_braid_tuple(*params)
    raise ValueError(f"unknown base tuple {kind!r}")


def stabilizes(b: BraidWord, t: GTuple) -> bool:
    return hurwitz_act(b, t).same(t)


@dataclass
class OrbitResult:
    verdict: str
    states: list[GTuple] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.states)


def orbit_enumerate(t: GTuple, gens: Sequence[BraidWord], cap: int = DEFAULT_ORBIT_CAP) -> OrbitResult:
    """Breadth first closure of ``t`` under ``gens`` and their inverses."""
    moves = list(gens) + [~g for g in gens]
    seen = {t.key(): t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for g in moves:
            nxt = hurwitz_act(g, cur)
            k = nxt.key()
            if k in seen:
                continue
            if len(seen) >= cap:
                return OrbitResult(EXCEEDED, list(seen.values()))
            seen[k] = nxt
            queue.append(nxt)
    return OrbitResult(HOLDS, list(seen.values()))


def stabilizer_report(item: str, params, gens: Iterable, t: GTuple) -> VerdictReport:
    """Check each labeled generator; the first non-stabilizing one is the witness."""
    for g in gens:
        word = getattr(g, "word", g)
        moved = hurwitz_act(word, t)
        if not moved.same(t):
            label = getattr(g, "label", str(word))
            return VerdictReport(item, params, FAILS, {"generator": label, "image": moved.to_json()})
    return VerdictReport(item, params, HOLDS)


def parse_tuple_spec(text: str) -> GTuple:
    """``psi:2,3``, ``phi:4``, ``perm_h:3`` or ``braid_h:3``."""
    kind, _, args = text.partition(":")
    nums = [int(x) for x in args.split(",") if x]
    return base_tuple(kind, *nums)


def tuple_entries_equal(a: GTuple, b: GTuple) -> list[int]:
    """Positions where two tuples differ."""
    g = a.group
    return [k for k, (x, y) in enumerate(zip(a.entries, b.entries), 1) if not g.eq(x, y)]

