"""Mixed jumping numbers of monomial ideals and graded sequences.

The engine computes

    lct(q, lam * q'; a_eff) = min over rays gamma of
        (sum(gamma) + v_gamma(q) + lam * v_gamma(q')) / den(gamma)

where den is v_gamma(a) for an ideal or the asymptotic value for a
graded sequence, and the rays run over the extreme rays of the common
refinement of the normal fans of all participating data
(:func:`vallab.geometry.critical_rays`).  Minimizing over those rays is
exact: on every cone of the refinement numerator and denominator are
linear, so the ratio is minimized at an extreme ray, provided the
numerator is nonnegative at every candidate ray.  For lam >= 0 that is
automatic; for lam < 0 the engine computes the largest eps such that the
numerator stays positive at all candidate rays and rejects lam <= -eps,
which makes the standing positivity assumption checkable per query.

The value is infinity exactly when no candidate ray gives the
denominator a positive value (the unit ideal / trivial sequence).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (DimensionMismatchError, NegativityViolationError,
                     NotAMinimizerError)
from .geometry import Ray, critical_rays, ideal_forms
from .ideals import MonomialIdeal, WeightVector
from .scalars import INFINITY, as_rat, is_finite
from .valuations import GradedSeq, ValSeq, value_on_graded, value_on_ideal


@dataclass(frozen=True)
class RayCertificate:
    """Exact ingredients of one candidate ray's ratio."""

    log_disc: Fraction
    vq: Fraction
    vqprime: Fraction
    va: Fraction

    def numerator(self, lam):
        return self.log_disc + self.vq + as_rat(lam) * self.vqprime

    def ratio(self, lam):
        return self.numerator(lam) / self.va


@dataclass(frozen=True)
class LctResult:
    """A mixed jumping number with its minimizing rays and certificates.

    ``lambda_bound`` is the exact positivity bound eps0: the query stays
    well-posed for every mixing weight lam > -eps0 (None when unbounded).
    """

    value: object  # Fraction or INFINITY
    lam: Fraction
    minimizing_rays: tuple
    certificates: dict = field(repr=False)
    lambda_bound: Optional[Fraction] = None

    @property
    def is_infinite(self):
        return not is_finite(self.value)


def _check_dims(*objs):
    dims = {o.dim for o in objs if o is not None}
    if len(dims) > 1:
        raise DimensionMismatchError(f"mixed ambient dimensions {sorted(dims)}")
    return dims.pop()


def _evaluate(q, lam, qprime, den_forms, den_value, n, dim_cap=None):
    lam = as_rat(lam)
    q.require_nonzero("jumping-number ideal q")
    qprime = MonomialIdeal.unit(n) if qprime is None else qprime
    qprime.require_nonzero("mixing ideal q'")

    families = [ideal_forms(q), ideal_forms(qprime), den_forms]
    rays = critical_rays(families, n, dim_cap=dim_cap)

    certificates = {}
    bound = None
    for ray in rays:
        cert = RayCertificate(
            log_disc=Fraction(sum(ray.direction)),
            vq=value_on_ideal(ray.direction, q),
            vqprime=value_on_ideal(ray.direction, qprime),
            va=den_value(ray.direction),
        )
        certificates[ray] = cert
        if cert.vqprime > 0:
            b = (cert.log_disc + cert.vq) / cert.vqprime
            bound = b if bound is None else min(bound, b)

    if lam < 0:
        for ray, cert in certificates.items():
            if cert.numerator(lam) <= 0:
                raise NegativityViolationError(
                    f"numerator {cert.numerator(lam)} <= 0 at ray {ray} for "
                    f"lambda = {lam}; query requires lambda > "
                    f"{-bound if bound is not None else '-infinity'}",
                    ray=ray)

    finite = {ray: cert for ray, cert in certificates.items() if cert.va > 0}
    if not finite:
        return LctResult(INFINITY, lam, (), certificates, bound)

    value = min(cert.ratio(lam) for cert in finite.values())
    minimizers = tuple(sorted(ray for ray, cert in finite.items()
                              if cert.ratio(lam) == value))
    return LctResult(value, lam, minimizers, certificates, bound)


def lct_mixed(q: MonomialIdeal, lam, qprime: Optional[MonomialIdeal],
              a: MonomialIdeal, dim_cap=None) -> LctResult:
    """Mixed jumping number lct(q, lam * q'; a) of a monomial ideal."""
    a.require_nonzero("ideal a")
    n = _check_dims(q, qprime, a)
    return _evaluate(q, lam, qprime, ideal_forms(a),
                     lambda g: value_on_ideal(g, a), n, dim_cap)


def lct_mixed_graded(q: MonomialIdeal, lam, qprime: Optional[MonomialIdeal],
                     seq, dim_cap=None) -> LctResult:
    """Mixed jumping number of a graded sequence, by the same ray minimum."""
    if not isinstance(seq, GradedSeq):
        raise TypeError(f"not a graded sequence: {seq!r}")
    n = _check_dims(q, qprime, seq)
    return _evaluate(q, lam, qprime, list(seq.linear_forms()),
                     lambda g: value_on_graded(g, seq), n, dim_cap)


@dataclass(frozen=True)
class TransferReport:
    """Both sides of lct(q, lam q'; ValSeq(alpha)) = v_alpha(seq) * lct(q, lam q'; seq)."""

    lhs: Fraction
    rhs: Fraction
    seq_value: Fraction
    seq_lct: Fraction

    @property
    def equal(self):
        return self.lhs == self.rhs


def compute_transfer_check(alpha: WeightVector, q: MonomialIdeal, lam,
                           qprime: Optional[MonomialIdeal], seq,
                           dim_cap=None) -> TransferReport:
    """Check the compute-transfer identity for a minimizing valuation.

    Requires val_alpha to attain the mixed jumping number of ``seq``
    (its ray must be a reported minimizer); raises NotAMinimizerError
    otherwise.
    """
    base = lct_mixed_graded(q, lam, qprime, seq, dim_cap=dim_cap)
    alpha_ray = Ray.from_vector(alpha.alpha)
    if alpha_ray not in base.minimizing_rays:
        raise NotAMinimizerError(
            f"val_{alpha.alpha} does not attain the jumping number "
            f"{base.value} (minimizers: "
            f"{', '.join(map(str, base.minimizing_rays)) or 'none'})")
    lhs = lct_mixed_graded(q, lam, qprime, ValSeq(alpha), dim_cap=dim_cap).value
    seq_value = value_on_graded(alpha, seq)
    rhs = seq_value * base.value
    return TransferReport(lhs, rhs, seq_value, base.value)


__all__ = [
    "RayCertificate",
    "LctResult",
    "TransferReport",
    "lct_mixed",
    "lct_mixed_graded",
    "compute_transfer_check",
]
