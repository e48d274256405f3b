"""Skewness/multiplicity computations on a 2-dimensional valuative path.

A quasi-monomial valuation v on a 2-dim regular local ring, normalized
by v(m) = 1, is determined along the path from the order valuation
(skewness 1) by the finite list of steps where its multiplicity jumps.
We store only the (skewness, multiplicity) pairs of those steps; every
formula below is a function of that data:

    A(t)     = 2 + sum over full segments of m_j (a_j - a_{j-1})
                 + m_seg (t - a_seg_start),  slope m_j per segment,
    sigma(t) = (A(t) + N) / t * target_skewness,
    d sigma / dt has the sign of m(t) t - A(t) - N, constant per
    segment, so the minimal certified N is the least integer strictly
    above max |m(t) t - A(t)| over the whole path.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRangeError
from .scalars import as_rat, floor_rat


@dataclass(frozen=True)
class ApproxSeq2D:
    """Approximation-sequence data: steps of (skewness, multiplicity).

    The implicit root has skewness 1 and multiplicity 1.  Skewnesses
    increase strictly from above 1, the first step has multiplicity 1,
    and multiplicities increase strictly across steps.  Multiplicity
    divisibility between consecutive steps is conventional on the
    valuative tree but not required here; a violation only warns.
    """

    steps: tuple  # ((Fraction skewness, int multiplicity), ...)

    @staticmethod
    def of(pairs):
        steps = tuple((as_rat(a), int(m)) for a, m in pairs)
        prev_alpha, prev_mult = Fraction(1), None
        for idx, (alpha, mult) in enumerate(steps):
            if alpha <= prev_alpha:
                raise ValueError(
                    f"skewness must increase strictly from 1, got {alpha} "
                    f"after {prev_alpha}")
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if idx == 0 and mult != 1:
                raise ValueError("the first step must have multiplicity 1")
            if prev_mult is not None:
                if mult <= prev_mult:
                    raise ValueError("multiplicities must increase strictly")
                if mult % prev_mult != 0:
                    warnings.warn(
                        f"multiplicity {mult} is not a multiple of "
                        f"{prev_mult}; unusual for a valuative-tree path",
                        stacklevel=2)
            prev_alpha, prev_mult = alpha, mult
        return ApproxSeq2D(steps)

    @property
    def target_skewness(self):
        return self.steps[-1][0] if self.steps else Fraction(1)

    def segments(self):
        """(start, end, multiplicity, A at start) per segment, in order."""
        out = []
        start, a_at_start = Fraction(1), Fraction(2)
        for alpha, mult in self.steps:
            out.append((start, alpha, mult, a_at_start))
            a_at_start += mult * (alpha - start)
            start = alpha
        return out

    def _check_t(self, t):
        t = as_rat(t)
        if not Fraction(1) <= t <= self.target_skewness:
            raise OutOfRangeError(
                f"skewness {t} outside [1, {self.target_skewness}]")
        return t

    def multiplicity_at(self, t):
        """m(t): multiplicity of the segment (a_{j-1}, a_j] containing t."""
        t = self._check_t(t)
        if t == 1:
            return 1
        for start, end, mult, _ in self.segments():
            if start < t <= end:
                return mult
        raise AssertionError("unreachable: t inside checked range")


def a_disc_2d(seq: ApproxSeq2D, t) -> Fraction:
    """Log discrepancy of the path valuation with skewness t."""
    t = seq._check_t(t)
    value = Fraction(2)
    for start, end, mult, _ in seq.segments():
        if t <= start:
            break
        value += mult * (min(t, end) - start)
    return value


def zv1_member(seq: ApproxSeq2D) -> bool:
    """Zhou relative to the trivial ideal iff the final multiplicity is 1."""
    return seq.multiplicity_at(seq.target_skewness) == 1


def relative_value_2d(w_skewness, v_seq: ApproxSeq2D) -> Fraction:
    """w(a_seq^v) for an ancestor w on the stored path: skewness ratio.

    Valuations off the path would need tangent data we do not store, so
    only ancestors (1 <= skewness(w) <= skewness(v)) are accepted.
    """
    w = v_seq._check_t(w_skewness)
    return w / v_seq.target_skewness


@dataclass(frozen=True)
class ZhouBound:
    """Least certified N with the per-segment monotonicity certificate.

    ``gaps`` holds (segment start, segment end, m*t - A(t)); the last
    quantity is constant on each segment because A has slope m there.
    The bound is sufficient, not necessary: multiplicity-1 paths are
    Zhou already for the trivial ideal even though the bound returns 2.
    """

    n_min: int
    max_gap: Fraction
    gaps: tuple

    def certifies(self, n):
        """sigma strictly decreasing along the path for this N."""
        return all(gap - n < 0 for _, _, gap in self.gaps)


def min_zhou_N(seq: ApproxSeq2D) -> ZhouBound:
    """Least integer N strictly above max |m(t) t - A(t)| on the path."""
    gaps = [(Fraction(1), Fraction(1), Fraction(1) * 1 - Fraction(2))]
    for start, end, mult, a_start in seq.segments():
        gap = mult * end - (a_start + mult * (end - start))
        gaps.append((start, end, gap))
    max_gap = max(abs(g) for _, _, g in gaps)
    n_min = floor_rat(max_gap) + 1
    bound = ZhouBound(n_min, max_gap, tuple(gaps))
    assert bound.certifies(n_min)
    return bound


def sigma_profile(seq: ApproxSeq2D, n, samples) -> list:
    """Exact sigma(t) = (A(t) + N)/t * target_skewness at the samples."""
    n = as_rat(n)
    if n < 0:
        raise ValueError("N must be nonnegative")
    target = seq.target_skewness
    out = []
    for t in samples:
        t = seq._check_t(t)
        out.append((t, (a_disc_2d(seq, t) + n) / t * target))
    return out


__all__ = [
    "ApproxSeq2D",
    "a_disc_2d",
    "zv1_member",
    "relative_value_2d",
    "ZhouBound",
    "min_zhou_N",
    "sigma_profile",
]
