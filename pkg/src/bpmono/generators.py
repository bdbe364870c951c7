"""Named braid elements and generator families.

Positions of punctures are the lexicographic ranks of multiindices, so a
braid over ``l = (l_1, ..., l_n)`` lives in ``Br_mu`` with ``mu = l_1...l_n``.
All constructors return :class:`BraidWord` and never simplify.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .multiindex import (
    ExponentVector,
    MultiIndex,
    enumerate_indices,
    index_label,
    is_correlated,
    rank_of,
)
from .words import BraidWord, IndexOutOfRange, braid_product


# ---------------------------------------------------------------------------
# elements addressed by strand positions


def _check_pair(n: int, i: int, j: int) -> None:
    if not (1 <= i < j <= n):
        raise IndexOutOfRange(f"need 1 <= i < j <= {n}, got ({i}, {j})")


def band(n: int, i: int, j: int) -> BraidWord:
    """Half twist s_{j-1}..s_{i+1} s_i s_{i+1}^-1..s_{j-1}^-1 exchanging i and j."""
    if i > j:
        i, j = j, i
    _check_pair(n, i, j)
    w = tuple(range(j - 1, i, -1))
    return BraidWord(n, w + (i,) + tuple(-a for a in reversed(w)))


def band_mirror(n: int, i: int, j: int) -> BraidWord:
    """The other half twist: s_{j-1}^-1..s_{i+1}^-1 s_i s_{i+1}..s_{j-1}."""
    return band(n, i, j).reversed()


def twist_product(n: int, i: int, others: Iterable[int], e: int = 2) -> BraidWord:
    return braid_product(n, (band(n, i, p) ** e for p in others))


def back_band(n: int, i: int, k: int) -> BraidWord:
    """Half twist on the arc from i to k passing behind all punctures between."""
    c = twist_product(n, i, range(i + 1, k))
    return band(n, i, k).conj(c)


def split_band(n: int, i: int, j: int, k: int) -> BraidWord:
    """Arc from i to k in front of i+1..j and behind j+1..k-1."""
    c = twist_product(n, i, range(j + 1, k))
    return band(n, i, k).conj(c)


def subcable(n: int, i: int, j: int) -> BraidWord:
    """delta_{i,j} = s_i s_{i+1} ... s_{j-1}."""
    if i == j:
        return BraidWord(n)
    _check_pair(n, i, j)
    return BraidWord(n, tuple(range(i, j)))


def fundamental(n: int, k: int | None = None) -> BraidWord:
    """delta_k = s_1 ... s_{k-1} inside Br_n (k defaults to n)."""
    k = n if k is None else k
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"delta_{k} not in Br_{n}")
    return subcable(n, 1, k) if k > 1 else BraidWord(n)


# ---------------------------------------------------------------------------
# elements addressed by multiindices


def pos(i: Sequence[int], l) -> int:
    return rank_of(i, l)


def block_twist(l, head: Sequence[int]) -> BraidWord:
    """delta_{i'1, i'l_n}: the subcable twist on the block with prefix ``head``."""
    l = ExponentVector.of(l)
    a = pos(tuple(head) + (1,), l)
    return subcable(l.mu, a, a + l.last - 1)


def cable_twist(l) -> BraidWord:
    """delta_phi, the product of all block twists."""
    l = ExponentVector.of(l)
    heads = enumerate_indices(l.truncated()) if l.n > 1 else [()]
    return braid_product(l.mu, (block_twist(l, h) for h in heads))


def _representative(c: int, ln: int) -> tuple[int, int]:
    r = (c - 1) % ln + 1
    return r, c - r


def extended_band(i: Sequence[int], j: Sequence[int], l) -> BraidWord:
    """sigma_{i,j} where the last components may lie outside 1..l_n.

    An out-of-range component c is replaced by r in 1..l_n with r = c mod l_n,
    and the twist is conjugated by the block twist to the power m = c - r,
    so that conjugation by a block twist raises the component by one.
    """
    l = ExponentVector.of(l)
    if tuple(i[:-1]) == tuple(j[:-1]) and not all(1 <= c <= l.last for c in (i[-1], j[-1])):
        # both ends in one block: shift them together by one power of its twist
        a, b = i[-1], j[-1]
        if not 0 < abs(b - a) < l.last:
            raise IndexOutOfRange(f"{tuple(i)} and {tuple(j)} do not name two punctures of one block")
        m = min(a, b) - 1
        head = tuple(i[:-1])
        w = band(l.mu, pos(head + (a - m,), l), pos(head + (b - m,), l))
        return w.conj(block_twist(l, head) ** m)
    ri, mi = _representative(i[-1], l.last)
    rj, mj = _representative(j[-1], l.last)
    ii, jj = tuple(i[:-1]) + (ri,), tuple(j[:-1]) + (rj,)
    if ii == jj:
        raise IndexOutOfRange(f"{tuple(i)} and {tuple(j)} name the same puncture")
    w = band(l.mu, pos(ii, l), pos(jj, l))
    c = block_twist(l, jj[:-1]) ** mj * block_twist(l, ii[:-1]) ** mi
    return w.conj(c)


def sigma(i: Sequence[int], j: Sequence[int], l, e: int = 1) -> BraidWord:
    return extended_band(i, j, l) ** e


def tau_generator(i: Sequence[int], j: Sequence[int], l, shift: int = 0) -> BraidWord:
    """Half twist tau_{i,j} on an arc winding around blocks i_1..j_1-1.

    The start point is moved once around its own block (last component raised
    by l_n) and the arc is then conjugated by the full twists of i around all
    punctures of the blocks strictly between i_1 and j_1.  ``shift`` is added
    to the last component of ``j``.
    """
    l = ExponentVector.of(l)
    if not i[0] < j[0]:
        raise IndexOutOfRange("tau needs i_1 < j_1")
    i = tuple(i)
    j = tuple(j[:-1]) + (j[-1] + shift,)
    start = i[:-1] + (i[-1] + l.last,)
    w = extended_band(start, j, l)
    mids = [p for p in enumerate_indices(l) if i[0] < p[0] < j[0]]
    if not mids:
        return w
    c = braid_product(l.mu, (extended_band(start, p, l) ** 2 for p in mids))
    return w.conj(c)


# ---------------------------------------------------------------------------
# homomorphisms


def lift_primary(i1: int, b: BraidWord, l) -> BraidWord:
    l = ExponentVector.of(l)
    rest = l.mu // l.exponents[0]
    if b.strands != rest or not 1 <= i1 <= l.exponents[0]:
        raise IndexOutOfRange(f"phi_{i1} maps Br_{rest} into Br_{l.mu}")
    off = (i1 - 1) * rest
    return BraidWord(l.mu, tuple(a + off if a > 0 else a - off for a in b.letters))


def lift_secondary(i_n: int, b: BraidWord, l) -> BraidWord:
    l = ExponentVector.of(l)
    src = l.mu // l.last
    if b.strands != src or not 1 <= i_n <= l.last:
        raise IndexOutOfRange(f"psi_{i_n} maps Br_{src} into Br_{l.mu}")
    imgs = {}
    out: list[int] = []
    for a in b.letters:
        m = abs(a)
        if m not in imgs:
            imgs[m] = band(l.mu, (m - 1) * l.last + i_n, m * l.last + i_n)
        w = imgs[m] if a > 0 else ~imgs[m]
        out.extend(w.letters)
    return BraidWord(l.mu, tuple(out))


def cable_generator(ln: int, m: int, p: int) -> BraidWord:
    """eta_{ln}(s_p): half twist of the adjacent ribbons p and p+1."""
    q = (p - 1) * ln + 1
    out: list[int] = []
    for k in range(ln):
        out.extend(range(q + ln - 1 + k, q + k - 1, -1))
    return BraidWord(m * ln, tuple(out))


def cable_band(ln: int, b: BraidWord) -> BraidWord:
    gens = {}
    out: list[int] = []
    for a in b.letters:
        p = abs(a)
        if p not in gens:
            gens[p] = cable_generator(ln, b.strands, p)
        w = gens[p] if a > 0 else ~gens[p]
        out.extend(w.letters)
    return BraidWord(b.strands * ln, tuple(out))


# ---------------------------------------------------------------------------
# generator specs


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    indices: tuple = ()
    strands: int | None = None
    exponents: tuple[int, ...] | None = None
    shift: int = 0


def make_generator(spec: GeneratorSpec) -> BraidWord:
    k, idx = spec.kind, spec.indices
    if k in ("band", "back-band", "split-band", "subcable", "fundamental"):
        n = spec.strands
        if n is None:
            raise IndexOutOfRange(f"{k} needs a strand count")
        if k == "band":
            return band(n, *idx)
        if k == "back-band":
            return back_band(n, *idx)
        if k == "split-band":
            return split_band(n, *idx)
        if k == "subcable":
            return subcable(n, *idx)
        return fundamental(n, *idx)
    if k not in ("cable", "block", "extended", "tau"):
        raise ValueError(f"unknown generator kind {k!r}")
    if spec.exponents is None:
        raise IndexOutOfRange(f"{k} needs an exponent vector")
    l = ExponentVector.of(spec.exponents)
    if k == "cable":
        return cable_twist(l)
    if k == "block":
        return block_twist(l, idx)
    if k == "extended":
        return extended_band(idx[0], idx[1], l)
    if k == "tau":
        return tau_generator(idx[0], idx[1], l, spec.shift)
    raise ValueError(f"unknown generator kind {k!r}")


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Labeled:
    label: str
    kind: str
    indices: tuple
    word: BraidWord

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "indices": [list(x) if isinstance(x, tuple) else x for x in self.indices],
            "word": str(self.word),
        }


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()
    source: tuple[Labeled, ...] = ()


def _lab(i, l=None) -> str:
    return index_label(i, l) if isinstance(i, tuple) else str(i)


def triple_element(i, j, k, l) -> BraidWord:
    """Full twist attached to a correlated triple i < j < k.

    Written as the square of sigma_{i,j} moved by sigma_{j,k}^-1; this equals
    sigma_{i,j}^2 sigma_{i,k}^2 sigma_{i,j}^-2 (checked in the test suite).
    """
    return sigma(i, j, l, 2).conj(~sigma(j, k, l))


def triple_element_literal(i, j, k, l) -> BraidWord:
    """sigma_{j,k} sigma_{i,j}^2 sigma_{j,k}^-1 taken verbatim."""
    return sigma(i, j, l, 2).conj(sigma(j, k, l))


def bp_monodromy(l) -> list[Labeled]:
    l = ExponentVector.of(l)
    idx = enumerate_indices(l)
    out = []
    for i, j in itertools.combinations(idx, 2):
        if is_correlated(i, j):
            out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^3", "cube", (i, j), sigma(i, j, l, 3)))
        else:
            out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^2", "square", (i, j), sigma(i, j, l, 2)))
    for i, j, k in itertools.combinations(idx, 3):
        if is_correlated(i, j, k):
            lab = f"S{_lab(j, l)},{_lab(k, l)} s{_lab(i, l)},{_lab(j, l)}^2 s{_lab(j, l)},{_lab(k, l)}"
            out.append(Labeled(lab, "triple", (i, j, k), triple_element(i, j, k, l)))
    return out


def an_family(n: int) -> list[Labeled]:
    """Monodromy of x^(n+1): cubes of adjacent bands, squares of the others."""
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        e = 3 if j == i + 1 else 2
        out.append(Labeled(f"s{i},{j}^{e}", "cube" if e == 3 else "square", (i, j), band(n, i, j) ** e))
    return out


def g_family(l) -> list[Labeled]:
    """Monodromy of the g-family: primary lifts of the monodromy of l_2..l_n."""
    l = ExponentVector.of(l)
    if l.n == 1:
        return []
    rest = ExponentVector(l.exponents[1:])
    base = bp_monodromy(rest) if rest.n > 1 else an_family(rest.mu)
    out = []
    for i1 in range(1, l.exponents[0] + 1):
        for g in base:
            idx = tuple((i1,) + (x if isinstance(x, tuple) else (x,)) for x in g.indices)
            lab = f"phi{i1}({g.label})"
            out.append(Labeled(lab, g.kind, idx, lift_primary(i1, g.word, l)))
    return out


def f_family(l) -> list[Labeled]:
    """Two-variable f-family generators."""
    l = ExponentVector.of(l)
    if l.n != 2:
        raise ValueError("f_n family is listed for two exponents")
    l1, l2 = l.exponents
    out = []
    for i1, j1 in itertools.combinations(range(1, l1 + 1), 2):
        for i2 in range(1, l2 + 1):
            i, j = (i1, i2), (j1, i2)
            e = 3 if is_correlated(i, j) else 2
            out.append(Labeled(f"s{_lab(i)},{_lab(j)}^{e}", "cube" if e == 3 else "square", (i, j), sigma(i, j, l, e)))
    for i1, j1 in itertools.combinations(range(1, l1 + 1), 2):
        for i2 in range(1, l2 + 1):
            for j2 in range(1, l2 + 1):
                if 1 <= i2 - j2 < l2:
                    i, j = (i1, i2), (j1, j2)
                    out.append(Labeled(f"s{_lab(i)},{_lab(j)}^2", "square", (i, j), sigma(i, j, l, 2)))
    return out


def ffn_family(l) -> list[Labeled]:
    """The f-family list for any n: cubes, squares and conjugated squares."""
    l = ExponentVector.of(l)
    idx = enumerate_indices(l)
    out = []
    for i, k in itertools.combinations(idx, 2):
        if i[0] + 1 == k[0] and i[1:] == k[1:]:
            out.append(Labeled(f"s{_lab(i, l)},{_lab(k, l)}^3", "cube", (i, k), sigma(i, k, l, 3)))
        elif i[0] < k[0] and not is_correlated(i, k):
            out.append(Labeled(f"s{_lab(i, l)},{_lab(k, l)}^2", "square", (i, k), sigma(i, k, l, 2)))
    for i, k in itertools.combinations(idx, 2):
        if i[0] + 1 == k[0] and is_correlated(i, k):
            for j in sorted({(i[0] + 1,) + i[1:], (i[0],) + k[1:]}):
                if i < j < k:
                    w = sigma(i, k, l, 2).conj(sigma(i, j, l, 2))
                    out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^2 s{_lab(i, l)},{_lab(k, l)}^2 S", "triple", (i, j, k), w))
    return out


def cw_delta(n: int) -> list[Labeled]:
    return [
        Labeled(f"d{k}^{k + 1}", "cable", (k,), fundamental(n, k) ** (k + 1))
        for k in range(2, n + 1)
    ]


def e_exponent(i: int, j: int, l: int) -> int:
    if j <= l:
        return 1
    if i <= l:
        return 2
    return 1 if (i - j) % 2 == 0 else 3


def e_family(l: int, lp: int) -> list[Labeled]:
    n = l + lp
    return [
        Labeled(f"s{i},{j}^{e_exponent(i, j, l)}", "E", (i, j), band(n, i, j) ** e_exponent(i, j, l))
        for i, j in itertools.combinations(range(1, n + 1), 2)
    ]


def e_spherical(k: int, l: int) -> tuple[list[Labeled], dict]:
    n = 6 * k + l
    meta = {"strands": n, "spherical_relation": f"(s1...s{n - 1})^{n} = 1"}
    return e_family(l, 6 * k), meta


def companions(source: Sequence[Labeled], l) -> list[Labeled]:
    """l_n-companions of generators given over the truncated exponents.

    ``source`` entries use kinds ``square`` (i', j'), ``cube`` (i', j') and
    ``triple`` (i', j', k') meaning sigma_{i',j'}^2 sigma_{i',k'}^2 sigma_{i',j'}^-2.
    """
    l = ExponentVector.of(l)
    ln = l.last
    out = []
    rng = range(1, ln + 1)
    for g in source:
        ip, jp = g.indices[0], g.indices[1]
        if g.kind == "square":
            for a, b in itertools.product(rng, rng):
                i, j = ip + (a,), jp + (b,)
                out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^2", "square", (i, j), sigma(i, j, l, 2)))
        elif g.kind == "cube":
            for a in rng:
                i, j = ip + (a,), jp + (a,)
                out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^3", "cube", (i, j), sigma(i, j, l, 3)))
            for a, b in itertools.product(rng, rng):
                if 1 <= a - b < ln:
                    i, j = ip + (a,), jp + (b,)
                    out.append(Labeled(f"s{_lab(i, l)},{_lab(j, l)}^2", "square", (i, j), sigma(i, j, l, 2)))
        elif g.kind == "triple":
            kp = g.indices[2]
            eta = cable_band(ln, sigma(ip, jp, l.truncated(), 2))
            for a, c in itertools.product(rng, rng):
                i, k = ip + (a,), kp + (c,)
                w = sigma(i, k, l, 2).conj(eta)
                out.append(Labeled(f"eta(s{_lab(ip)},{_lab(jp)}^2) s{_lab(i, l)},{_lab(k, l)}^2", "triple", (i, jp, k), w))
        else:
            raise ValueError(f"no companion rule for kind {g.kind!r}")
    return out


def generator_family(spec: FamilySpec) -> list[Labeled]:
    f, p = spec.family, spec.params
    if f == "bp_monodromy":
        return bp_monodromy(p)
    if f == "an":
        return an_family(p[0] if isinstance(p, tuple) else p)
    if f == "g_n":
        return g_family(p)
    if f == "f_n":
        return f_family(p) if len(p) == 2 else ffn_family(p)
    if f == "ffn":
        return ffn_family(p)
    if f == "cw_delta":
        return cw_delta(p[0] if isinstance(p, tuple) else p)
    if f == "E":
        return e_family(*p)
    if f == "E_spherical":
        return e_spherical(*p)[0]
    if f == "companions":
        return companions(spec.source, p)
    raise ValueError(f"unknown family {f!r}")


def family_json(gens: Sequence[Labeled]) -> str:
    return json.dumps([g.to_json() for g in gens], indent=2)
