"""Independent multiplier-ideal oracle for monomial ideals.

The multiplier ideal of a monomial ideal at coefficient c is monomial,
generated by the exponents beta such that beta + (1,...,1) lies in the
topological interior of c * Newt(a) (Howald's theorem).  The interior
test is a strict inequality against every facet, coordinate facets
included; boundary points are excluded, which matches the jumping-number
convention min{lambda : q not contained in J(a^lambda)}.

Everything here is decided by exact lattice searches and facet slacks,
with no reference to the ray-minimization engine, so agreement between
:func:`jumping_number_oracle` and :func:`vallab.jumping.lct_mixed` is a
genuine cross-validation.  (The confirmation sweep does fold the
engine's candidate ratios into the probe set, but every probe is judged
by containment alone.)
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .config import dimension_cap
from .errors import CrossCheckError, DimensionCapError
from .geometry import newton_polyhedron
from .ideals import MonomialIdeal, minimal_antichain
from .scalars import INFINITY, as_rat, floor_rat
from .valuations import value_on_ideal


@dataclass(frozen=True)
class MultiplierIdealResult:
    """J(c * a) with per-generator facet slacks as the witness."""

    coefficient: Fraction
    ideal: MonomialIdeal
    witness: dict  # generator -> tuple of exact positive facet slacks


def _strict_lower_bound(x):
    """Least nonnegative integer strictly greater than the rational x."""
    return max(0, floor_rat(x) + 1)


def howald_multiplier(a: MonomialIdeal, c, dim_cap=None) -> MultiplierIdealResult:
    """The multiplier ideal J(c * a) of a monomial ideal, exactly.

    Minimal generators are found by a bounded lattice search: a minimal
    generator beta has, for each coordinate j, some facet (nu, off) with
    nu_j > 0 and beta_j <= c * off / nu_j (otherwise beta - e_j would
    still pass the interior test), which gives a provable search box.
    """
    c = as_rat(c)
    if c <= 0:
        raise ValueError("multiplier coefficient must be positive")
    a.require_nonzero("multiplier-ideal argument")
    n = a.dim
    cap = dimension_cap(dim_cap)
    if n > cap:
        raise DimensionCapError(f"dimension {n} exceeds cap {cap}")

    newt = newton_polyhedron(a)
    facets = newt.nontrivial_facets
    if not facets:  # unit ideal: the scaled polyhedron is the full orthant
        unit = MonomialIdeal.unit(n)
        return MultiplierIdealResult(c, unit, {unit.generators[0]: ()})

    bounds = []
    for j in range(n):
        per_facet = [floor_rat(c * off / nu[j]) for nu, off in facets if nu[j] > 0]
        bounds.append(max(per_facet) if per_facet else 0)

    gens = []
    for prefix in iter_product(*(range(b + 1) for b in bounds[:-1])):
        lower = 0
        feasible = True
        for nu, off in facets:
            partial = sum(nu[j] * (prefix[j] + 1) for j in range(n - 1)) + nu[-1]
            need = c * off - partial  # nu[-1] * beta_n must exceed this
            if nu[-1] == 0:
                if need >= 0:
                    feasible = False
                    break
            else:
                lower = max(lower, _strict_lower_bound(need / nu[-1]))
        if feasible:
            gens.append(prefix + (lower,))

    gens = minimal_antichain(gens)
    ideal = MonomialIdeal(gens, n) if gens else MonomialIdeal.zero(n)
    witness = {}
    for beta in gens:
        shifted = tuple(b + 1 for b in beta)
        witness[beta] = tuple(
            sum(nu[j] * shifted[j] for j in range(n)) - c * off
            for nu, off in facets)
    return MultiplierIdealResult(c, ideal, witness)


def _contains(q: MonomialIdeal, a: MonomialIdeal, lam) -> bool:
    """q contained in J(lam * a), decided by the lattice interior test."""
    return howald_multiplier(a, lam).ideal.contains_ideal(q)


def jumping_number_oracle(q: MonomialIdeal, a: MonomialIdeal, dim_cap=None):
    """min{lambda : q not contained in J(a^lambda)}, or INFINITY for unit a.

    The value is the smallest facet-crossing threshold of the generators
    of q against Newt(a).  A confirmation sweep then probes containment
    at every candidate value (facet crossings plus the engine's ray
    ratios) and at midpoints between consecutive candidates; any
    inconsistency raises CrossCheckError.
    """
    q.require_nonzero("jumping-number ideal q")
    a.require_nonzero("jumping-number ideal a")
    if a.is_unit:
        return INFINITY

    newt = newton_polyhedron(a)
    facets = newt.nontrivial_facets
    crossings = set()
    for m in q.generators:
        shifted = tuple(e + 1 for e in m)
        for nu, off in facets:
            crossings.add(Fraction(sum(v * s for v, s in zip(nu, shifted)), off))
    value = min(crossings)

    from .jumping import lct_mixed  # candidate ratios only; judged below
    engine = lct_mixed(q, 0, None, a, dim_cap=dim_cap)
    candidates = set(crossings)
    candidates.update(cert.ratio(0) for cert in engine.certificates.values()
                      if cert.va > 0)
    candidates = sorted(candidates)

    probes = []
    previous = Fraction(0)
    for cand in candidates:
        probes.append((previous + cand) / 2)
        probes.append(cand)
        previous = cand
        if cand >= value:
            break
    failure = next((p for p in probes if not _contains(q, a, p)), None)
    if failure != value:
        raise CrossCheckError(
            f"containment sweep failed at {failure}, thresholds give {value}")
    for p in probes:
        if p < value and not _contains(q, a, p):
            raise CrossCheckError(f"containment lost below the minimum at {p}")
    return value


@dataclass(frozen=True)
class GrowthEntry:
    ray: object
    t: Fraction
    lhs: Fraction      # v_gamma(b_t) / t
    rhs: Fraction      # v_gamma(b_T)/T - A_gamma / t
    slack: Fraction


@dataclass(frozen=True)
class GrowthReport:
    entries: tuple

    @property
    def all_positive(self):
        return all(e.slack > 0 for e in self.entries)


def controlled_growth_check(a: MonomialIdeal, rays, t_values,
                            dim_cap=None) -> GrowthReport:
    """Controlled-growth slacks of the multiplier system b_t = J(t * a).

    For each listed ray gamma and time t the report records
    v_gamma(b_t)/t against v_gamma(b_T)/T - A_gamma/t, where T is the
    largest listed time (standing in for the asymptotic value); all
    slacks must come out positive.
    """
    a.require_nonzero("growth-check ideal")
    ts = sorted(as_rat(t) for t in t_values)
    if not ts or ts[0] <= 0:
        raise ValueError("t values must be positive")
    t_max = ts[-1]
    b = {t: howald_multiplier(a, t, dim_cap=dim_cap).ideal for t in ts}

    entries = []
    for ray in rays:
        log_disc = Fraction(sum(ray.direction))
        v_top = value_on_ideal(ray.direction, b[t_max]) / t_max
        for t in ts:
            lhs = value_on_ideal(ray.direction, b[t]) / t
            rhs = v_top - log_disc / t
            entries.append(GrowthEntry(ray, t, lhs, rhs, lhs - rhs))
    return GrowthReport(tuple(entries))


__all__ = [
    "MultiplierIdealResult",
    "howald_multiplier",
    "jumping_number_oracle",
    "controlled_growth_check",
    "GrowthReport",
    "GrowthEntry",
]
