import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bpmono.generators import FamilySpec, band, generator_family
from bpmono.hurwitz import (
    EXCEEDED,
    FAILS,
    HOLDS,
    LOWER,
    MINUS_ID,
    UPPER,
    GTuple,
    SL2Matrix,
    VerdictReport,
    base_tuple,
    evaluate,
    hurwitz_act,
    orbit_enumerate,
    parse_tuple_spec,
    stabilizer_report,
    stabilizes,
    tuple_entries_equal,
)
from bpmono.words import BraidWord, FreeWord, Permutation, StrandMismatch

from strategies import braid_words

B = BraidWord.parse

sl2_gens = st.sampled_from([UPPER, LOWER, ~UPPER, ~LOWER, MINUS_ID])
sl2 = st.lists(sl2_gens, min_size=1, max_size=4).map(lambda ms: _prod(ms))


def _prod(ms):
    out = SL2Matrix.identity()
    for m in ms:
        out = out * m
    return out


def sl2_tuples(n):
    return st.lists(sl2, min_size=n, max_size=n).map(lambda es: GTuple("sl2", tuple(es)))


def perm_tuples(n, deg=4):
    perms = st.permutations(list(range(1, deg + 1))).map(lambda p: Permutation(tuple(p)))
    return st.lists(perms, min_size=n, max_size=n).map(lambda es: GTuple("permutation", tuple(es), deg))


class TestMatrices:
    def test_determinant_checked(self):
        with pytest.raises(ValueError):
            SL2Matrix(1, 1, 1, 1)

    def test_big_integers(self):
        m = UPPER
        for _ in range(200):
            m = m * UPPER * ~LOWER
        assert m.a * m.d - m.b * m.c == 1 and abs(m.a) > 2**64


class TestAction:
    def test_generator_rule(self):
        a, b = UPPER, LOWER
        t = GTuple("sl2", (a, b))
        assert hurwitz_act(B(2, "s1"), t).entries == (a * b * ~a, a)
        assert hurwitz_act(BraidWord(2), t) == t
        assert hurwitz_act(B(2, "s1 S1"), t) == t
        with pytest.raises(StrandMismatch):
            hurwitz_act(B(3, "s1"), t)

    def test_psi_example(self):
        t = base_tuple("psi", 0, 2)
        assert t.entries == (UPPER, LOWER)
        assert not stabilizes(B(2, "s1"), t)
        assert hurwitz_act(B(2, "s1"), t).entries[0].rows() == [[0, 1], [-1, 2]]
        assert base_tuple("psi", 2, 0).entries == (MINUS_ID, MINUS_ID)

    def test_perm_and_phi_tuples(self):
        t = base_tuple("perm_h", 3)
        assert [p.images for p in t.entries] == [(2, 1, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3)]
        phi = base_tuple("phi", 2)
        assert stabilizes(B(2, "s1 s1 s1"), phi)
        assert not stabilizes(B(2, "s1"), phi)

    def test_central_entry_commutes(self):
        t = GTuple("sl2", (MINUS_ID, UPPER * LOWER, LOWER))
        for j in (2, 3):
            assert stabilizes(band(3, 1, j) ** 2, t)

    @given(braid_words(strands=3, max_len=6), braid_words(strands=3, max_len=6), sl2_tuples(3))
    def test_action_axiom(self, b1, b2, t):
        assert hurwitz_act(b1 * b2, t) == hurwitz_act(b1, hurwitz_act(b2, t))

    @given(braid_words(strands=4, max_len=8), sl2_tuples(4))
    def test_sl2_invariants(self, b, t):
        u = hurwitz_act(b, t)
        assert u.product() == t.product()
        assert u.class_multiset() == t.class_multiset()

    @given(braid_words(strands=3, max_len=8), perm_tuples(3))
    def test_permutation_invariants(self, b, t):
        u = hurwitz_act(b, t)
        assert u.product() == t.product()
        assert u.class_multiset() == t.class_multiset()

    @given(braid_words(strands=3, max_len=5))
    def test_braid_target_product(self, b):
        t = base_tuple("braid_h", 3)
        u = hurwitz_act(b, t)
        assert u.group.eq(u.product(), t.product())

    def test_evaluate(self):
        t = GTuple("sl2", (UPPER, LOWER))
        assert evaluate(FreeWord.parse("t1 t2^-1"), t) == UPPER * ~LOWER


class TestStabilizers:
    @pytest.mark.parametrize("l,lp", [(l, lp) for l in range(7) for lp in range(7) if 1 <= l + lp <= 6 and l + lp >= 2])
    def test_e_family(self, l, lp):
        t = base_tuple("psi", l, lp)
        gens = generator_family(FamilySpec("E", (l, lp)))
        assert stabilizer_report("E", (l, lp), gens, t).verdict == HOLDS

    @pytest.mark.parametrize("n", range(2, 6))
    def test_cw_delta(self, n):
        t = base_tuple("perm_h", n)
        gens = generator_family(FamilySpec("cw_delta", (n,)))
        assert stabilizer_report("cw", n, gens, t).ok

    @pytest.mark.parametrize("n", range(1, 5))
    def test_braid_stabilizer(self, n):
        t = base_tuple("braid_h", n)
        gens = generator_family(FamilySpec("an", (n,)))
        assert stabilizer_report("an", n, gens, t).ok

    def test_failing_report_has_witness(self):
        t = base_tuple("psi", 0, 2)
        r = stabilizer_report("x", None, [B(2, "s1")], t)
        assert r.verdict == FAILS and r.witness["generator"] == "s1"
        with pytest.raises(ValueError):
            VerdictReport("x", None, FAILS)


class TestOrbits:
    def test_transposition_orbit(self):
        t = base_tuple("perm_h", 2)
        res = orbit_enumerate(t, [B(2, "s1")])
        assert res.verdict == HOLDS and res.size == 3

    def test_identity_tuple(self):
        t = GTuple("sl2", (SL2Matrix.identity(),) * 3)
        assert orbit_enumerate(t, [B(3, "s1"), B(3, "s2")]).size == 1

    def test_psi_single_generator_orbit_is_finite(self):
        res = orbit_enumerate(base_tuple("psi", 0, 2), [B(2, "s1")], cap=10**4)
        assert res.verdict == HOLDS and res.size == 3

    def test_cap(self):
        res = orbit_enumerate(base_tuple("psi", 0, 3), [B(3, "s1"), B(3, "s2")], cap=5)
        assert res.verdict == EXCEEDED and res.size == 5

    def test_braid_target_orbit(self):
        res = orbit_enumerate(base_tuple("braid_h", 2), [B(2, "s1")], cap=50)
        assert res.verdict == HOLDS and res.size == 3


def test_parse_and_diff():
    t = parse_tuple_spec("psi:2,3")
    assert len(t) == 5 and t.entries[:2] == (MINUS_ID, MINUS_ID)
    u = hurwitz_act(B(5, "s3"), t)
    assert tuple_entries_equal(t, u) == [3, 4]
    with pytest.raises(ValueError):
        parse_tuple_spec("nope:1")
    assert t.to_json()["entries"][0] == [[-1, 0], [0, -1]]


@pytest.mark.parametrize("n", range(2, 6))
def test_sampled_psi_stabilizers_fix_phi(n):
    # sampled only: products of E generators fix both psi_{0,n} and phi_n
    rng = random.Random(n)
    gens = [g.word for g in generator_family(FamilySpec("E", (0, n)))]
    moves = gens + [~g for g in gens]
    psi, phi = base_tuple("psi", 0, n), base_tuple("phi", n)
    for _ in range(30):
        w = BraidWord(n)
        for _ in range(rng.randint(1, 4)):
            w = w * rng.choice(moves)
        assert stabilizes(w, psi) and stabilizes(w, phi)
