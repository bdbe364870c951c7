"""Finite presentations attached to exponent vectors and the relators a braid
imposes on the free group through the Artin action.

Generators of a presentation over ``l`` are the multiindices in lexicographic
order; the multiindex of rank r is written t_r inside free words.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .generators import bp_monodromy, sigma
from .hurwitz import FAILS, HOLDS, VerdictReport
from .multiindex import (
    DynkinDiagram,
    ExponentVector,
    enumerate_indices,
    index_label,
    is_correlated,
    rank_of,
)
from .polynomials import ResourceExceeded
from .words import (
    DEFAULT_MAX_WORD_LEN,
    BraidWord,
    FreeWord,
    StrandMismatch,
    apply_endo,
    artin_action,
    braids_equal,
    conjugate_up_to_inverse,
)

MAX_MU_DERIVATION = 9

BRAID, COMMUTE, TRIPLE = "braid", "commute", "triple"


def _t(*gens: int) -> FreeWord:
    return FreeWord.from_letters(gens)


def braid_relator(i: int, j: int) -> FreeWord:
    """t_i t_j t_i (t_j t_i t_j)^-1."""
    return _t(i, j, i) * ~_t(j, i, j)


def commute_relator(i: int, j: int) -> FreeWord:
    return _t(i, j, -i, -j)


def triple_relator(i: int, j: int, k: int) -> FreeWord:
    """t_i t_j t_k t_i (t_j t_k t_i t_j)^-1."""
    return _t(i, j, k, i) * ~_t(j, k, i, j)


@dataclass(frozen=True)
class Relator:
    word: FreeWord
    tag: str


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple[Relator, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.word.is_identity():
                raise ValueError("relators must be nontrivial")
            if r.word.max_index() > len(self.generators):
                raise ValueError(f"relator {r.word} uses more than {len(self.generators)} generators")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def counts(self) -> dict[str, int]:
        out = {BRAID: 0, COMMUTE: 0, TRIPLE: 0}
        for r in self.relators:
            out[r.tag] += 1
        return out

    def labels(self) -> list[str]:
        return [index_label(g) if isinstance(g, tuple) else str(g) for g in self.generators]

    def to_text(self) -> str:
        labs = self.labels()

        def show(w: FreeWord) -> str:
            return " ".join(f"t{labs[g - 1]}" + ("" if e == 1 else f"^{e}") for g, e in w.syllables)

        gens = ", ".join(f"t{x}" for x in labs)
        rels = ", ".join(show(r.word) for r in self.relators)
        return f"< {gens} | {rels} >"

    def to_json(self) -> dict:
        return {
            "generators": [list(g) if isinstance(g, tuple) else g for g in self.generators],
            "relators": [{"word": str(r.word), "tag": r.tag} for r in self.relators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def bp_presentation(l) -> Presentation:
    l = ExponentVector.of(l)
    idx = enumerate_indices(l)
    rels = []
    for (a, i), (b, j) in itertools.combinations(enumerate(idx, 1), 2):
        if is_correlated(i, j):
            rels.append(Relator(braid_relator(a, b), BRAID))
        else:
            rels.append(Relator(commute_relator(a, b), COMMUTE))
    for (a, i), (b, j), (c, k) in itertools.combinations(enumerate(idx, 1), 3):
        if is_correlated(i, j, k):
            rels.append(Relator(triple_relator(a, b, c), TRIPLE))
    return Presentation(tuple(idx), tuple(rels))


def presentation_from_dynkin(D: DynkinDiagram) -> Presentation:
    verts = list(D.vertices)
    pos = {v: r for r, v in enumerate(verts, 1)}
    rels = []
    for i, j in itertools.combinations(verts, 2):
        if D.weight(i, j) is None:
            rels.append(Relator(commute_relator(pos[i], pos[j]), COMMUTE))
        else:
            rels.append(Relator(braid_relator(pos[i], pos[j]), BRAID))
    for i, j, k in D.triangles():
        if D.weight(i, j) * D.weight(i, k) * D.weight(j, k) == -1:
            rels.append(Relator(triple_relator(pos[i], pos[j], pos[k]), TRIPLE))
    return Presentation(tuple(verts), tuple(rels))


def artin_presentation(n: int) -> Presentation:
    """Standard presentation of Br_{n+1} on s_1..s_n."""
    rels = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if j == i + 1:
            rels.append(Relator(braid_relator(i, j), BRAID))
        else:
            rels.append(Relator(commute_relator(i, j), COMMUTE))
    return Presentation(tuple(range(1, n + 1)), tuple(rels))


# ---------------------------------------------------------------------------
# relators imposed by a braid


@dataclass(frozen=True)
class Factorization:
    """b = beta0 * s_p^e * beta0^-1."""

    beta0: BraidWord
    exponent: int
    position: int = 1

    def braid(self) -> BraidWord:
        return BraidWord.gen(self.beta0.strands, self.position, self.exponent).conj(self.beta0)


def relators_of_braid(
    b: BraidWord,
    factorization: Factorization | None = None,
    max_len: int = DEFAULT_MAX_WORD_LEN,
) -> list[FreeWord]:
    n = b.strands
    if factorization is None:
        f = artin_action(b, max_len)
        out = [FreeWord.gen(k, -1) * f.images[k - 1] for k in range(1, n + 1)]
        return [w for w in out if not w.is_identity()]
    if factorization.beta0.strands != n:
        raise StrandMismatch(f"factorization lives in Br_{factorization.beta0.strands}, braid in Br_{n}")
    p, e = factorization.position, factorization.exponent
    local = artin_action(BraidWord.gen(n, p, e), max_len)
    back = artin_action(~factorization.beta0, max_len)
    out = []
    for k in (p, p + 1):
        w = FreeWord.gen(k, -1) * local.images[k - 1]
        out.append(apply_endo(back, w, max_len))
    return [w for w in out if not w.is_identity()]


def pair_conjugator(n: int, p: int, q: int) -> BraidWord:
    """beta0 = s_{p-1}..s_1 s_{q-1}..s_2, so that beta0 s_1 beta0^-1 is band(p, q)."""
    return BraidWord(n, tuple(range(p - 1, 0, -1)) + tuple(range(q - 1, 1, -1)))


def generator_factorization(gen, l) -> Factorization:
    l = ExponentVector.of(l)
    n = l.mu
    if gen.kind == "triple":
        i, j, k = gen.indices
        beta = ~sigma(j, k, l) * pair_conjugator(n, rank_of(i, l), rank_of(j, l))
        return Factorization(beta, 2)
    i, j = gen.indices
    return Factorization(pair_conjugator(n, rank_of(i, l), rank_of(j, l)), 3 if gen.kind == "cube" else 2)


def triple_certificate(i: int, j: int, k: int) -> bool:
    """R3 = [t_i, u] * u B_ij u^-1 with u = t_j t_k t_j^-1 holds in the free group."""
    u = _t(j, k, -j)
    comm = FreeWord.gen(i) * u * FreeWord.gen(i, -1) * ~u
    return triple_relator(i, j, k) == comm * u * braid_relator(i, j) * ~u


def _match(w: FreeWord, pres: Presentation) -> Relator | None:
    for r in pres.relators:
        if conjugate_up_to_inverse(w, r.word):
            return r
    return None


def verify_derivation(l, max_mu: int | None = None) -> VerdictReport:
    """Every bp_monodromy generator imposes relators of bp_presentation(l).

    Each generator is factored as beta0 s_1^e beta0^-1 (the factorization is
    itself checked with the word problem) and its two reduced relators are
    compared with the presentation up to conjugacy and inversion.  A triple
    generator yields [t_i, t_j t_k t_j^-1]; it is accepted when the identity of
    :func:`triple_certificate` ties it to the triple and braid relators.
    """
    l = ExponentVector.of(l)
    cap = MAX_MU_DERIVATION if max_mu is None else max_mu
    if l.mu > cap:
        raise ResourceExceeded(f"derivation check for mu = {l.mu} exceeds the budget mu <= {cap}")
    pres = bp_presentation(l)
    for gen in bp_monodromy(l):
        fac = generator_factorization(gen, l)
        if not braids_equal(fac.braid(), gen.word):
            return VerdictReport("verify_derivation", str(l), FAILS, {"generator": gen.label, "reason": "factorization"})
        for w in relators_of_braid(gen.word, fac):
            if _match(w, pres) is not None:
                continue
            if gen.kind == "triple":
                a, b, c = (rank_of(x, l) for x in gen.indices)
                u = _t(b, c, -b)
                comm = FreeWord.gen(a) * u * FreeWord.gen(a, -1) * ~u
                if conjugate_up_to_inverse(w, comm) and triple_certificate(a, b, c) and _match(braid_relator(a, b), pres):
                    continue
            return VerdictReport("verify_derivation", str(l), FAILS, {"generator": gen.label, "relator": str(w)})
    return VerdictReport("verify_derivation", str(l), HOLDS)


def abelianize(w: FreeWord, rank: int) -> tuple[int, ...]:
    v = [0] * rank
    for g, e in w.syllables:
        v[g - 1] += e
    return tuple(v)


def abelianized_kinds(P: Presentation) -> list[str]:
    """Per relator: ``trivial``, ``identify`` (t_i = t_j) or ``other``."""
    out = []
    for r in P.relators:
        nz = sorted(x for x in abelianize(r.word, P.rank) if x)
        out.append("trivial" if not nz else "identify" if nz == [-1, 1] else "other")
    return out


def abelianize_check(P: Presentation) -> VerdictReport:
    kinds = abelianized_kinds(P)
    for r, k in zip(P.relators, kinds):
        if k == "other":
            return VerdictReport("abelianize", P.rank, FAILS, {"relator": str(r.word), "image": list(abelianize(r.word, P.rank))})
    return VerdictReport("abelianize", P.rank, HOLDS, {"kinds": kinds})


def relator_multiset(P: Presentation) -> list[tuple]:
    return sorted((r.tag, r.word.syllables) for r in P.relators)

