"""Mixed jumping numbers: exact values, certificates, identities."""

from fractions import Fraction as F

import pytest

from vallab import (INFINITY, EnlargedSeq, MonomialIdeal,
                    NegativityViolationError, NotAMinimizerError, PowersSeq,
                    Ray, ValSeq, WeightVector, compute_transfer_check,
                    is_finite, lct_mixed, lct_mixed_graded)

from conftest import rand_ideal, rand_positive_weights


def ideal(*gens):
    return MonomialIdeal.from_exponents(list(gens))


W = WeightVector.of
CUSP = ideal((2, 0), (0, 3))
Q_X = ideal((1, 0))
Q_Y = ideal((0, 1))
UNIT2 = MonomialIdeal.unit(2)


class TestLctMixed:
    def test_plain_lct_cusp(self):
        r = lct_mixed(UNIT2, 0, None, CUSP)
        assert r.value == F(5, 6)
        assert r.minimizing_rays == (Ray((3, 2)),)

    def test_q_x_cusp(self):
        r = lct_mixed(Q_X, 0, None, CUSP)
        assert r.value == F(4, 3)
        assert r.minimizing_rays == (Ray((3, 2)),)
        # the coordinate rays have v(a) = 0 and are excluded
        assert all(cert.va == 0 for ray, cert in r.certificates.items()
                   if ray != Ray((3, 2)))

    def test_negative_lambda(self):
        r = lct_mixed(Q_X, F(-1, 4), Q_Y, CUSP)
        assert r.value == F(5, 4)
        assert r.minimizing_rays == (Ray((3, 2)),)

    def test_unit_target_is_infinite(self):
        r = lct_mixed(Q_X, 0, None, UNIT2)
        assert r.value == INFINITY
        assert r.minimizing_rays == ()
        assert not is_finite(r.value)

    def test_lambda_bound_is_exact(self):
        # eps0 = 1 here (ray (0,1): (A + vq)/vq' = 1); just above passes,
        # at and below raises
        r = lct_mixed(Q_X, F(-99, 100), Q_Y, CUSP)
        assert r.lambda_bound == 1
        assert r.value == F(8 - F(99, 100) * 2, 6)
        with pytest.raises(NegativityViolationError) as exc:
            lct_mixed(Q_X, -1, Q_Y, CUSP)
        assert exc.value.ray is not None
        with pytest.raises(NegativityViolationError):
            lct_mixed(Q_X, F(-5, 4), Q_Y, CUSP)

    def test_certificate_soundness(self):
        r = lct_mixed(Q_X, F(-1, 4), Q_Y, CUSP)
        for ray in r.minimizing_rays:
            cert = r.certificates[ray]
            assert cert.ratio(r.lam) == r.value
        for ray, cert in r.certificates.items():
            if cert.va > 0:
                assert cert.ratio(r.lam) >= r.value


class TestLctMixedGraded:
    def test_valseq_closed_form(self):
        r = lct_mixed_graded(Q_X, 0, None, ValSeq(W(F(1, 2), F(1, 3))))
        assert r.value == F(4, 3)
        assert r.minimizing_rays == (Ray((3, 2)),)

    def test_valseq_trivial_q(self):
        r = lct_mixed_graded(UNIT2, 0, None, ValSeq(W(1, 1)))
        assert r.value == 2

    @pytest.mark.parametrize("beta,expected,ray", [
        (F(4), F(1), (3, 2)),
        (F(3), F(13, 12), (9, 8)),
    ])
    def test_enlarged_threshold(self, beta, expected, ray):
        seq = EnlargedSeq(ValSeq(W(F(3, 8), F(1, 4))), Q_Y, beta)
        r = lct_mixed_graded(Q_X, 0, None, seq)
        assert r.value == expected
        assert r.minimizing_rays == (Ray(ray),)

    def test_powers_equals_ideal_lct(self, rng):
        for _ in range(15):
            n = rng.choice([1, 2, 3])
            q = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n)
            assert lct_mixed_graded(q, 0, None, PowersSeq(a)).value == \
                lct_mixed(q, 0, None, a).value

    def test_valseq_value_is_A_plus_vq(self, rng):
        # monomial closed form: the valuation sequence of val_alpha has
        # jumping number A(alpha) + v_alpha(q), attained only on alpha's ray
        from vallab import log_discrepancy, value_on_ideal
        for _ in range(15):
            n = rng.choice([2, 3])
            alpha = rand_positive_weights(rng, n)
            q = rand_ideal(rng, n, proper=False)
            r = lct_mixed_graded(q, 0, None, ValSeq(alpha))
            assert r.value == log_discrepancy(alpha) + \
                value_on_ideal(alpha, q)
            assert r.minimizing_rays == (Ray.from_vector(alpha.alpha),)


class TestIdentities:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_power_scaling(self, m, rng):
        for _ in range(6):
            n = rng.choice([1, 2, 3])
            q = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n, max_exp=3)
            assert lct_mixed(q, 0, None, a.power(m)).value * m == \
                lct_mixed(q, 0, None, a).value

    def test_monotone_under_inclusion(self, rng):
        for _ in range(12):
            n = rng.choice([1, 2, 3])
            q = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n)
            b = a.plus(rand_ideal(rng, n))  # a subset of b
            assert b.contains_ideal(a)
            va = lct_mixed(q, 0, None, a).value
            vb = lct_mixed(q, 0, None, b).value
            assert va <= vb or (va == INFINITY and vb == INFINITY)

    def test_sum_rule(self, rng):
        for _ in range(12):
            n = rng.choice([1, 2, 3])
            q1 = rand_ideal(rng, n, proper=False)
            q2 = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n)
            lhs = lct_mixed(q1.plus(q2), 0, None, a).value
            assert lhs == min(lct_mixed(q1, 0, None, a).value,
                              lct_mixed(q2, 0, None, a).value)


class TestComputeTransfer:
    def test_plain_cusp(self):
        report = compute_transfer_check(W(3, 2), UNIT2, 0, None,
                                        PowersSeq(CUSP))
        assert report.lhs == report.rhs == 5

    def test_weighted_minimizer(self):
        report = compute_transfer_check(W(F(1, 2), F(1, 3)), Q_X, 0, None,
                                        PowersSeq(CUSP))
        assert report.lhs == report.rhs == F(4, 3)
        assert report.seq_value == 1

    def test_not_a_minimizer(self):
        with pytest.raises(NotAMinimizerError):
            compute_transfer_check(W(1, 1), UNIT2, 0, None, PowersSeq(CUSP))

    def test_unit_sequence_refused(self):
        with pytest.raises(NotAMinimizerError):
            compute_transfer_check(W(1, 1), UNIT2, 0, None,
                                   PowersSeq(MonomialIdeal.unit(2)))

    def test_random_minimizers_transfer(self, rng):
        hits = 0
        while hits < 8:
            n = rng.choice([2, 3])
            q = rand_ideal(rng, n, proper=False)
            a = rand_ideal(rng, n, max_exp=3)
            base = lct_mixed_graded(q, 0, None, PowersSeq(a))
            for ray in base.minimizing_rays:
                alpha = W(*[F(c) for c in ray.direction])
                report = compute_transfer_check(alpha, q, 0, None,
                                                PowersSeq(a))
                assert report.equal
                hits += 1

    def test_transfer_with_mixing_weight(self):
        # (3,2) still minimizes the mixed objective for small lambda
        report = compute_transfer_check(W(3, 2), Q_X, F(1, 2), Q_Y,
                                        PowersSeq(CUSP))
        assert report.equal
        assert report.lhs == report.seq_value * report.seq_lct
        report = compute_transfer_check(W(3, 2), Q_X, F(-1, 4), Q_Y,
                                        PowersSeq(CUSP))
        assert report.equal


class TestSupOverTruncations:
    """m * lct(member_m) climbs to the sequence value from below."""

    def test_valseq_truncations(self):
        from vallab import truncate
        alpha = W(F(3, 8), F(1, 4))
        seq = ValSeq(alpha)
        limit = lct_mixed_graded(Q_X, 0, None, seq).value
        assert limit == 1
        values = {}
        for m in (1, 2, 4, 8, 16):
            member = truncate(seq, m)
            values[m] = m * lct_mixed(Q_X, 0, None, member).value
            assert values[m] <= limit
        # doubling is monotone because member_2m contains member_m squared
        assert values[1] <= values[2] <= values[4] <= values[8] <= values[16]
        assert values[8] == limit  # 8 clears both weight denominators

    def test_enlarged_truncations(self):
        from vallab import truncate
        seq = EnlargedSeq(ValSeq(W(F(3, 8), F(1, 4))), Q_Y, F(4))
        limit = lct_mixed_graded(Q_X, 0, None, seq).value
        values = [m * lct_mixed(Q_X, 0, None, truncate(seq, m)).value
                  for m in (1, 2, 4, 8, 16)]
        assert all(v <= limit for v in values)
        assert all(a <= b for a, b in zip(values, values[1:]))
        assert values[-1] == limit
