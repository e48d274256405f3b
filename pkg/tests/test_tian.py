"""Tian functions: envelopes, slopes, and the finite-family criterion."""

from fractions import Fraction as F

import pytest

from vallab import (DomainError, InfiniteLctError, MonomialIdeal, PowersSeq,
                    ValSeq, WeightVector, default_test_family,
                    lct_mixed_graded, slope_report, tian_function,
                    value_on_ideal, zhou_criterion)
from vallab.tian import lower_envelope

from conftest import rand_ideal, rand_positive_weights


def ideal(*gens):
    return MonomialIdeal.from_exponents(list(gens))


W = WeightVector.of
Q_X = ideal((1, 0))
Q_Y = ideal((0, 1))
CUSP = ideal((2, 0), (0, 3))
UNIT2 = MonomialIdeal.unit(2)


class TestLowerEnvelope:
    def test_two_lines_cross(self):
        pieces = lower_envelope([(F(1), F(0)), (F(0), F(2))], None)
        assert len(pieces) == 2
        assert (pieces[0].slope, pieces[0].intercept) == (1, 0)
        assert pieces[1].start == 2 and pieces[1].slope == 0

    def test_dominated_line_dropped(self):
        # middle line never minimal: crossings collapse
        pieces = lower_envelope([(F(2), F(0)), (F(1), F(10)), (F(0), F(4))],
                                None)
        assert [p.slope for p in pieces] == [2, 0]

    def test_equal_slopes_keep_smaller_intercept(self):
        pieces = lower_envelope([(F(1), F(3)), (F(1), F(1))], None)
        assert len(pieces) == 1
        assert pieces[0].intercept == 1

    def test_clip_to_domain(self):
        pieces = lower_envelope([(F(1), F(0)), (F(0), F(2))], F(3))
        assert len(pieces) == 1
        assert pieces[0].start == 3 and pieces[0].slope == 0


class TestTianFunction:
    def test_single_ray_valseq(self):
        f = tian_function(Q_X, Q_Y, ValSeq(W(F(3, 8), F(1, 4))))
        assert f.domain_min == -1
        assert len(f.pieces) == 1
        assert (f.pieces[0].slope, f.pieces[0].intercept) == (F(1, 4), 1)

    def test_cusp_excludes_denominator_zero_rays(self):
        f = tian_function(UNIT2, Q_X, PowersSeq(CUSP))
        assert len(f.pieces) == 1
        assert (f.pieces[0].slope, f.pieces[0].intercept) == (F(1, 2), F(5, 6))

    def test_unit_qprime_is_constant(self):
        f = tian_function(ideal((1, 1)), MonomialIdeal.unit(2),
                          PowersSeq(CUSP))
        assert len(f.pieces) == 1
        assert f.pieces[0].slope == 0
        assert f.domain_min is None

    def test_infinite_lct_rejected(self):
        with pytest.raises(InfiniteLctError):
            tian_function(Q_X, Q_Y, PowersSeq(MonomialIdeal.unit(2)))

    def test_breakpoint_inside_negative_domain(self):
        # powers of the cusp against q' = (x, y): two rays stay active and
        # the envelope genuinely breaks left of zero
        maxid = ideal((1, 0), (0, 1))
        f = tian_function(UNIT2, maxid, PowersSeq(ideal((2, 0), (0, 2))))
        assert f.value_at(0) == lct_mixed_graded(
            UNIT2, 0, maxid, PowersSeq(ideal((2, 0), (0, 2)))).value

    def test_concave_decreasing_slopes_random(self, rng):
        for _ in range(12):
            n = rng.choice([2, 3])
            q = rand_ideal(rng, n, proper=False)
            qp = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n, max_exp=3)
            f = tian_function(q, qp, PowersSeq(a))
            slopes = [p.slope for p in f.pieces]
            assert all(s >= 0 for s in slopes)
            assert all(s1 > s2 for s1, s2 in zip(slopes, slopes[1:]))
            starts = [p.start for p in f.pieces[1:]]
            assert all(a_ < b_ for a_, b_ in zip(starts, starts[1:]))

    def test_matches_lct_at_sampled_t(self, rng):
        samples = [F(0), F(1), F(2), F(7, 2), F(1, 3)]
        for _ in range(10):
            n = rng.choice([2, 3])
            q = rand_ideal(rng, n, proper=False)
            qp = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n, max_exp=3)
            f = tian_function(q, qp, PowersSeq(a))
            for t in samples:
                assert f.value_at(t) == \
                    lct_mixed_graded(q, t, qp, PowersSeq(a)).value
            if f.domain_min is not None:
                inside = f.domain_min / 2
                assert f.value_at(inside) == \
                    lct_mixed_graded(q, inside, qp, PowersSeq(a)).value
                assert f.value_at(inside) > 0

    def test_matches_lct_for_sequences(self, rng):
        from vallab import EnlargedSeq
        samples = [F(0), F(1), F(5, 2)]
        for _ in range(8):
            n = 2
            alpha = rand_positive_weights(rng, n)
            q = rand_ideal(rng, n, proper=False, max_exp=3)
            # a unit q' would make the enlargement the trivial sequence
            qp = rand_ideal(rng, n, proper=True, max_exp=3)
            beta = F(rng.randint(1, 6), rng.randint(1, 3))
            for seq in (ValSeq(alpha),
                        EnlargedSeq(ValSeq(alpha), qp, beta)):
                f = tian_function(q, qp, seq)
                for t in samples:
                    assert f.value_at(t) == \
                        lct_mixed_graded(q, t, qp, seq).value

    def test_unit_enlargement_is_trivial_sequence(self):
        from vallab import EnlargedSeq, InfiniteLctError, lct_mixed_graded
        seq = EnlargedSeq(ValSeq(W(F(3, 8), F(1, 4))),
                          MonomialIdeal.unit(2), F(2))
        assert lct_mixed_graded(Q_X, 0, None, seq).value == \
            lct_mixed_graded(Q_X, 0, None,
                             PowersSeq(MonomialIdeal.unit(2))).value
        with pytest.raises(InfiniteLctError):
            tian_function(Q_X, Q_Y, seq)


class TestSlopeReport:
    def test_single_piece(self):
        f = tian_function(Q_X, Q_Y, ValSeq(W(F(3, 8), F(1, 4))))
        assert slope_report(f) == (F(1, 4), F(1, 4), F(1, 4))

    def test_constant_function(self):
        f = tian_function(ideal((1, 1)), MonomialIdeal.unit(2),
                          PowersSeq(CUSP))
        assert slope_report(f) == (0, 0, 0)

    def test_closed_form_line(self):
        f = tian_function(UNIT2, Q_X, ValSeq(W(F(1, 2), F(1, 3))))
        assert slope_report(f) == (F(1, 2), F(1, 2), F(1, 2))

    def test_domain_error_when_zero_not_interior(self):
        f = tian_function(Q_X, Q_Y, ValSeq(W(F(3, 8), F(1, 4))))
        clipped = type(f)(F(0), f.pieces)
        with pytest.raises(DomainError):
            slope_report(clipped)

    def test_slope_at_infinity_is_vqprime(self, rng):
        for _ in range(12):
            n = rng.choice([2, 3])
            alpha = rand_positive_weights(rng, n)
            q = rand_ideal(rng, n, proper=False)
            qp = rand_ideal(rng, n, proper=False)
            f = tian_function(q, qp, ValSeq(alpha))
            assert f.slope_at_infinity == value_on_ideal(alpha, qp)


class TestZhouCriterion:
    FAMILY = [Q_Y, Q_X, ideal((1, 1)), ideal((1, 0), (0, 1))]

    def test_pass_for_normalized_weights(self):
        verdict = zhou_criterion(W(F(3, 8), F(1, 4)), Q_X, self.FAMILY)
        assert verdict.passed
        assert "finite-family" in verdict.note

    def test_fail_unnormalized(self):
        verdict = zhou_criterion(W(F(1, 2), F(1, 3)), Q_X, self.FAMILY)
        assert not verdict.passed
        assert "lct != 1" in verdict.reason

    def test_fail_trivial_q(self):
        verdict = zhou_criterion(W(1, 1), MonomialIdeal.unit(2),
                                 [ideal((1, 0), (0, 1))])
        assert not verdict.passed
        assert "2" in verdict.reason

    def test_default_family_shape(self):
        fam = default_test_family(2)
        gens = {i.generators for i in fam}
        assert gens == {((1, 0),), ((0, 1),), ((2, 0),), ((1, 1),),
                        ((0, 2),), ((0, 1), (1, 0))}

    def test_pass_on_default_family_after_rescale(self, rng):
        from vallab import zhou_rescale
        for _ in range(6):
            n = 2
            alpha = rand_positive_weights(rng, n)
            q = rand_ideal(rng, n, proper=False)
            cert = zhou_rescale(alpha, q)
            verdict = zhou_criterion(cert.normalized, q,
                                     default_test_family(n))
            assert verdict.passed
