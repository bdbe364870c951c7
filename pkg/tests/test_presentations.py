import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bpmono.generators import FamilySpec, band, generator_family, sigma
from bpmono.hurwitz import HOLDS
from bpmono.multiindex import ExponentVector, build_dynkin, correlated_pairs, correlated_triples, enumerate_indices
from bpmono.polynomials import ResourceExceeded
from bpmono.presentations import (
    BRAID,
    COMMUTE,
    TRIPLE,
    Factorization,
    Presentation,
    Relator,
    abelianize_check,
    abelianized_kinds,
    artin_presentation,
    bp_presentation,
    braid_relator,
    commute_relator,
    generator_factorization,
    presentation_from_dynkin,
    relator_multiset,
    relators_of_braid,
    triple_certificate,
    triple_relator,
    verify_derivation,
)
from bpmono.words import BraidWord, FreeWord, StrandMismatch, are_conjugate, braids_equal, conjugate_up_to_inverse

F = FreeWord.parse


def small_exponents():
    out = []
    for n in (1, 2, 3):
        for e in itertools.product(range(1, 5), repeat=n):
            mu = 1
            for x in e:
                mu *= x
            if mu <= 12:
                out.append(e)
    return out


class TestEmission:
    def test_rank_two(self):
        P = bp_presentation((2,))
        assert P.rank == 2
        assert [r.word for r in P.relators] == [F("t1 t2 t1 t2^-1 t1^-1 t2^-1")]
        assert P.to_text() == "< t1, t2 | t1 t2 t1 t2^-1 t1^-1 t2^-1 >"

    def test_counts_22(self):
        P = bp_presentation((2, 2))
        assert P.rank == 4 and len(P.relators) == 8
        assert P.counts() == {BRAID: 5, COMMUTE: 1, TRIPLE: 2}

    def test_free_rank_one(self):
        P = bp_presentation((1,))
        assert P.rank == 1 and not P.relators
        assert presentation_from_dynkin(build_dynkin((1,))) == P

    @pytest.mark.parametrize("n", range(1, 7))
    def test_single_exponent_is_artin(self, n):
        P = bp_presentation((n,))
        A = artin_presentation(n)
        assert P.rank == A.rank == n
        assert relator_multiset(P) == relator_multiset(A)

    @pytest.mark.parametrize("l", small_exponents())
    def test_dynkin_emission_agrees(self, l):
        assert presentation_from_dynkin(build_dynkin(l)) == bp_presentation(l)

    @pytest.mark.parametrize("l", [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 4)])
    def test_counts_match_combinatorics(self, l):
        c = bp_presentation(l).counts()
        mu = ExponentVector.of(l).mu
        assert c[BRAID] == len(correlated_pairs(l))
        assert c[COMMUTE] == mu * (mu - 1) // 2 - c[BRAID]
        assert c[TRIPLE] == len(correlated_triples(l))

    def test_validation(self):
        with pytest.raises(ValueError):
            Presentation((1, 2), (Relator(FreeWord(), BRAID),))
        with pytest.raises(ValueError):
            Presentation((1,), (Relator(braid_relator(1, 2), BRAID),))

    def test_json(self):
        d = bp_presentation((2, 2)).to_json()
        assert d["generators"][0] == [1, 1]
        assert d["relators"][0] == {"word": "t1^1 t2^1 t1^1 t2^-1 t1^-1 t2^-1", "tag": "braid"}


class TestRelators:
    def test_square_and_cube(self):
        n = 4
        sq = relators_of_braid(band(n, 1, 3) ** 2)
        assert any(conjugate_up_to_inverse(w, F("t1^-1 t3^-1 t1 t3")) for w in sq)
        cu = relators_of_braid(BraidWord.gen(n, 2, 3))
        assert any(conjugate_up_to_inverse(w, F("t2^-1 t3^-1 t2^-1 t3 t2 t3")) for w in cu)
        assert relators_of_braid(BraidWord(n)) == []

    def test_factorized_form(self):
        b = band(4, 1, 3) ** 2
        fac = Factorization(BraidWord(4, (2,)), 2)
        assert braids_equal(fac.braid(), b)
        rels = relators_of_braid(b, fac)
        assert len(rels) == 2
        for w in rels:
            assert conjugate_up_to_inverse(w, commute_relator(1, 3))
        with pytest.raises(StrandMismatch):
            relators_of_braid(b, Factorization(BraidWord(3), 2))

    @pytest.mark.parametrize("l", [(2, 2), (2, 3), (2, 2, 2)])
    def test_factorizations_are_exact(self, l):
        for g in generator_family(FamilySpec("bp_monodromy", l)):
            assert braids_equal(generator_factorization(g, l).braid(), g.word)

    @given(st.permutations([1, 2, 3, 4, 5]))
    def test_triple_certificate(self, p):
        i, j, k = p[:3]
        assert triple_certificate(i, j, k)


class TestDerivation:
    @pytest.mark.parametrize("l", [e for e in small_exponents() if ExponentVector.of(e).mu <= 9])
    def test_holds(self, l):
        assert verify_derivation(l).verdict == HOLDS

    def test_budget(self):
        with pytest.raises(ResourceExceeded):
            verify_derivation((2, 5))


class TestAbelianization:
    def test_kinds(self):
        P = Presentation((1, 2, 3), (
            Relator(braid_relator(1, 2), BRAID),
            Relator(commute_relator(1, 3), COMMUTE),
            Relator(triple_relator(1, 2, 3), TRIPLE),
        ))
        # braid and triple relators identify two generators; commutators vanish
        assert abelianized_kinds(P) == ["identify", "trivial", "identify"]
        r = abelianize_check(bp_presentation((2, 3)))
        assert r.ok and set(r.witness["kinds"]) == {"identify", "trivial"}

    def test_identify_and_failure(self):
        P = Presentation((1, 2), (Relator(F("t1 t2^-1"), BRAID),))
        assert abelianized_kinds(P) == ["identify"]
        Q = Presentation((1, 2), (Relator(F("t1^2"), BRAID),))
        assert not abelianize_check(Q).ok
