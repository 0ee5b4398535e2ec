import pytest
from hypothesis import given
from hypothesis import strategies as st

from packetbranch import (
    OneChar,
    Signature,
    discrete_spectrum,
    half,
    inf_char,
    interlacing_holds,
    is_regular,
    make_rep,
    multiplicity,
    multiplicity_with_o1,
    packet_decomposition,
    packet_multiplicity,
    packet_partner,
    verify_packet_members,
    verify_versions,
)
from packetbranch.errors import (
    AssumptionError,
    DomainError,
    LengthError,
    RegularityError,
    SignatureMismatch,
)

G32 = Signature(3, 2)
H22 = Signature(2, 2)


def rep(sig, sign, lam):
    return make_rep(sig, sign, half(lam) if isinstance(lam, int) else lam)


def spectrum_mult(big, small):
    """Multiplicity by scanning an explicit enumeration of the discrete spectrum."""
    if big.is_zero or small.is_zero:
        return 0
    hits = [
        e for e in discrete_spectrum(big, max_entries=small.lam.ceil() + 2)
        if e.rep == small
    ]
    assert len(hits) <= 1
    return len(hits)


class TestMultiplicity:
    def test_finite_type_example(self, h):
        assert multiplicity(rep(G32, "+", h("5/2")), rep(H22, "+", h("2"))) == 1

    def test_discrete_type_example(self, h):
        assert multiplicity(rep(G32, "-", h("5/2")), rep(H22, "-", h("3"))) == 1

    def test_cross_sign(self, h):
        assert multiplicity(rep(G32, "+", h("5/2")), rep(H22, "-", h("3"))) == 0

    def test_minus_below(self, h):
        assert multiplicity(rep(G32, "-", h("5/2")), rep(H22, "-", h("2"))) == 0

    def test_signature_mismatch(self, h):
        with pytest.raises(SignatureMismatch):
            multiplicity(rep(G32, "+", h("5/2")), rep(Signature(3, 1), "+", h("2")))

    def test_zero_contributes_nothing(self, h):
        big = rep(Signature(2, 3), "+", h("7/2"))
        small = rep(Signature(1, 3), "+", h("2"))
        assert small.is_zero
        assert multiplicity(big, small) == 0

    def test_agrees_with_spectrum_enumeration(self):
        for p in range(2, 7):
            for q in range(1, 6):
                sig, sub = Signature(p, q), Signature(p - 1, q)
                for lam in sig.parameters(half(2 * 9)):
                    for mu in sub.parameters(half(2 * 10)):
                        for d in "+-":
                            for e in "+-":
                                big, small = make_rep(sig, d, lam), make_rep(sub, e, mu)
                                assert multiplicity(big, small) == spectrum_mult(big, small)


class TestWithO1:
    def test_examples(self, h):
        assert multiplicity_with_o1(rep(G32, "-", h("5/2")), rep(H22, "-", h("4")), OneChar.SGN) == 1
        assert multiplicity_with_o1(rep(G32, "-", h("5/2")), rep(H22, "-", h("4")), OneChar.TRIVIAL) == 0
        assert multiplicity_with_o1(rep(G32, "+", h("5/2")), rep(H22, "+", h("1")), OneChar.SGN) == 1

    def test_sum_over_characters(self):
        for lam in G32.parameters(half(25)):
            for mu in H22.parameters(half(30)):
                for d in "+-":
                    for e in "+-":
                        big, small = make_rep(G32, d, lam), make_rep(H22, e, mu)
                        total = sum(multiplicity_with_o1(big, small, c) for c in OneChar)
                        assert total == multiplicity(big, small)

    def test_sgn_power(self):
        assert [OneChar.power(n) for n in range(4)] == [OneChar.TRIVIAL, OneChar.SGN] * 2


class TestSpectrum:
    def test_finite_type(self, h):
        s = discrete_spectrum(rep(G32, "+", h("5/2")))
        assert [(e.rep.sign, str(e.rep.lam), e.ochar, e.n) for e in s] == [
            ("+", "2", OneChar.TRIVIAL, 0),
            ("+", "1", OneChar.SGN, 1),
        ]
        assert not s.truncated and s.omitted == 0

    def test_finite_type_empty(self, h):
        assert len(discrete_spectrum(rep(G32, "+", h("1/2")))) == 0

    def test_discrete_type_truncated(self, h):
        s = discrete_spectrum(rep(G32, "-", h("5/2")), max_entries=3)
        assert [(str(e.rep.lam), e.ochar) for e in s] == [
            ("3", OneChar.TRIVIAL),
            ("4", OneChar.SGN),
            ("5", OneChar.TRIVIAL),
        ]
        assert s.truncated

    def test_default_truncation(self, h):
        assert len(discrete_spectrum(rep(G32, "-", h("5/2")))) == 16

    def test_cardinality_and_distinctness(self):
        for p in range(3, 9):
            for q in range(1, 9):
                sig = Signature(p, q)
                for lam in sig.parameters(half(sig.n + 30)):
                    s = discrete_spectrum(make_rep(sig, "+", lam))
                    expected = sum(1 for n in range(0, 100) if lam - half(1) > n)
                    assert len(s) == expected and s.omitted == 0
                    keys = {(e.rep.sign, e.rep.lam, e.ochar) for e in s}
                    assert len(keys) == len(s)

    def test_discrete_type_preserves_regularity(self):
        for p in range(2, 9):
            for q in range(2, 9):
                sig = Signature(p, q)
                for lam in sig.parameters(half(sig.n + 20), regular_only=True):
                    assert all(is_regular(e.rep) for e in discrete_spectrum(make_rep(sig, "-", lam)))

    def test_finite_type_nonregular_witness(self):
        s = discrete_spectrum(make_rep(Signature(4, 2), "+", half(4)))
        assert [str(e.rep.lam) for e in s] == ["3/2", "1/2"]
        assert is_regular(make_rep(Signature(4, 2), "+", half(4)))
        assert not is_regular(s.entries[1].rep)

    def test_regular_summand_criterion(self):
        # summand regular iff mu > (p+q-5)/2
        for p in range(3, 8):
            for q in range(1, 6):
                sig = Signature(p, q)
                for lam in sig.parameters(half(sig.n + 12)):
                    for e in discrete_spectrum(make_rep(sig, "+", lam)):
                        assert is_regular(e.rep) == (e.rep.lam > half(sig.n - 5))

    def test_p_two_has_no_discrete_spectrum(self):
        for q in range(1, 7):
            sig = Signature(2, q)
            for lam in sig.parameters(half(sig.n + 16)):
                s = discrete_spectrum(make_rep(sig, "+", lam))
                assert len(s) == 0
                assert s.omitted == sum(1 for n in range(100) if lam - half(1) > n)

    def test_zero_big_rep_has_empty_spectrum(self, h):
        big = make_rep(Signature(4, 1), "-", h("5/2"))
        assert big.is_zero
        s = discrete_spectrum(big, max_entries=4)
        assert len(s) == 0 and s.omitted == 0

    def test_entry_json(self, h):
        e = discrete_spectrum(rep(G32, "+", h("5/2"))).entries[0]
        assert e.to_json() == {"sign": "+", "mu": "2", "ochar": "trivial", "n": 0}


class TestInterlacing:
    @staticmethod
    def ic(*xs):
        return [half(x) for x in xs]

    def test_examples(self):
        g = self.ic(5, 1)
        assert interlacing_holds(g, self.ic(4, 0), "finite")
        assert interlacing_holds(g, self.ic(6, 0), "disc")
        assert not interlacing_holds(g, self.ic(4, 0), "disc")

    def test_length_error(self):
        with pytest.raises(LengthError):
            interlacing_holds(self.ic(5, 1), self.ic(4, 0, 0), "disc")
        with pytest.raises(LengthError):
            interlacing_holds(self.ic(5, 1, 0, 0), self.ic(4), "disc")

    def test_wrong_tail(self):
        with pytest.raises(DomainError):
            interlacing_holds(self.ic(5, 3), self.ic(4, 0), "finite")

    def test_accepts_unsorted_signed_input(self):
        assert interlacing_holds(self.ic(-1, 5), self.ic(0, -4), "finite")

    def test_nonregular_leading_entry_recovered(self):
        # p+q = 7, lambda = 1/2 collides with the tail
        g = inf_char(make_rep(Signature(5, 2), "+", half(1)))
        h_ = inf_char(make_rep(Signature(4, 2), "+", half(6)))
        assert not interlacing_holds(g, h_, "finite")
        assert not interlacing_holds(g, h_, "disc")

    def test_literal_chain(self):
        """Compare with the full chain of strict inequalities written out explicitly."""
        for n in range(5, 15):
            sig = Signature(n - 2, 2)
            sub = sig.subgroup()
            tail = [half(n - 4 - 2 * j) for j in range(n // 2 - 1)]
            for lam in sig.parameters(half(n + 12), regular_only=True):
                for mu in sub.parameters(half(n + 14), regular_only=True):
                    for variant, head in (("disc", [mu, lam]), ("finite", [lam, mu])):
                        chain = head + [x for x in tail if x > 0] + [half(0)]
                        expected = all(a > b for a, b in zip(chain, chain[1:]))
                        got = interlacing_holds(
                            inf_char(make_rep(sig, "+", lam)), inf_char(make_rep(sub, "+", mu)), variant
                        )
                        assert got == expected


class TestPacket:
    def test_examples(self, h):
        assert packet_multiplicity(G32, h("5/2"), h("2")) == 1
        assert packet_multiplicity(G32, h("5/2"), h("3")) == 1

    def test_decomposition_vector(self, h):
        d = packet_decomposition(G32, h("5/2"), h("2"))
        assert [d[k] for k in (("+", "+"), ("+", "-"), ("-", "+"), ("-", "-"))] == [1, 0, 0, 0]

    @pytest.mark.parametrize(
        "sig,lam,mu,expected",
        [((3, 2), "5/2", "2", ("+", "+")), ((3, 2), "5/2", "3", ("-", "-")), ((4, 2), "3", "5/2", ("+", "+"))],
    )
    def test_partner(self, sig, lam, mu, expected, h):
        assert packet_partner(Signature(*sig), h(lam), h(mu)) == expected

    def test_partner_requires_regular(self, h):
        with pytest.raises(RegularityError):
            packet_partner(G32, h("1/2"), h("2"))
        with pytest.raises(RegularityError):
            packet_partner(Signature(4, 2), h("3"), h("1/2"))

    def test_assumption(self, h):
        with pytest.raises(AssumptionError):
            packet_multiplicity(Signature(2, 2), h("1"), h("1/2"))
        with pytest.raises(AssumptionError):
            packet_multiplicity(Signature(3, 1), h("1"), h("3/2"))

    def test_member_on_wrong_side_has_no_partner(self, h):
        # lambda > mu: Pi_- pairs with neither member of V(mu)
        big = make_rep(G32, "-", h("7/2"))
        assert [multiplicity(big, make_rep(H22, e, h("2"))) for e in "+-"] == [0, 0]

    @given(st.integers(3, 8), st.integers(2, 8), st.integers(0, 40), st.integers(0, 40))
    def test_parity_forces_one_side(self, p, q, i, j):
        sig = Signature(p, q)
        lam = sig.regular_threshold() + i
        mu = sig.subgroup().regular_threshold() + j
        assert lam != mu
        assert packet_multiplicity(sig, lam, mu) == 1
        assert (packet_partner(sig, lam, mu)[0] == "+") == (lam > mu)

    @given(st.integers(3, 8), st.integers(2, 8), st.integers(0, 30), st.integers(0, 30))
    def test_cross_sign_vanishing(self, p, q, i, j):
        sig, sub = Signature(p, q), Signature(p - 1, q)
        lam = half(sig.n % 2 or 2) + i
        mu = half(sub.n % 2 or 2) + j
        d = packet_decomposition(sig, lam, mu)
        assert d["+", "-"] == 0 and d["-", "+"] == 0
        assert all(v in (0, 1) for v in d.values())


class TestVerify:
    def test_small_grid(self, h):
        r = verify_versions(G32, h("21/2"))
        assert r.passed and r.checks_run > 0

    def test_other_grid(self, h):
        assert verify_versions(Signature(4, 3), h("10")).passed

    def test_vacuous(self, h):
        r = verify_versions(G32, h("1/2"))
        assert r.passed and r.checks_run == 0

    def test_requires_assumption(self, h):
        with pytest.raises(AssumptionError):
            verify_versions(Signature(2, 3), h("10"))

    def test_report_records_failures(self):
        from packetbranch.branching import BranchingReport

        r = BranchingReport({"x": 1})
        r.check(True, {}, 1, 1)
        r.check(False, {"a": 1}, 1, 0)
        assert not r.passed
        assert r.to_json() == {
            "grid": {"x": 1},
            "checks": 2,
            "failures": [{"params": {"a": 1}, "expected": 1, "got": 0}],
        }

    def test_packet_members(self):
        r = verify_packet_members(Signature(5, 3), half(40))
        assert r.passed and r.checks_run == 2 * len(Signature(5, 3).parameters(half(40), True))
