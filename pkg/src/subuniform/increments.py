"""Density increment and energy increment over F_2.

Two classical ways to exploit a large nontrivial character coefficient:

* density_increment walks down a chain of cosets.  While the current
  coset has a coefficient of magnitude above eps, the witness frequency
  splits it into two halves whose densities differ by more than 2*eps,
  so recursing into the denser half raises the density by more than eps
  per step and the walk stops within ceil(1/eps) steps.

* regularity_decompose refines a coordinate subspace W until at most an
  eta fraction of its cosets fail to be eps-uniform.  Each round refines
  W by the span of the witnesses of all bad cosets at once, which splits
  every bad coset along its own witness, so the mean squared coset
  density (the partition energy) rises by more than eta*eps^2 per round.
  The energy is at most 1, bounding the number of rounds; the codimension
  also grows every round, so the loop terminates even when eta = 0.

Both routines are specific to p = 2; no increment step is provided for
p = 3, where a bounded-magnitude obstruction can block any such walk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional

from .errors import InputError
from .gf_core import (
    Coset,
    GFVector,
    PointSet,
    Subspace,
    _coset_rep_ranks,
    add_rank,
    canonical_rep,
    extend_span,
    perp,
)
from .spectra import lift_class, packed_max_coef_sq, uniformity_sup


@dataclass(frozen=True)
class IncrementStep:
    """One visited coset: its density and the witness used to leave it."""

    coset: Coset
    density: Fraction
    witness_r: Optional[GFVector]


@dataclass(frozen=True)
class IncrementTrace:
    """Full record of a density-increment walk."""

    steps: tuple[IncrementStep, ...]
    final: Coset
    final_density: Fraction
    final_sup_sq: Fraction

    @property
    def step_count(self) -> int:
        return len(self.steps) - 1


def density_increment(points: PointSet, eps: Fraction) -> IncrementTrace:
    """Walk to a coset on which the set is eps-uniform (p = 2 only).

    Each step halves the current coset along the witness hyperplane
    r.y = const and keeps the denser half; ties cannot occur because the
    witness coefficient magnitude exceeds eps, which forces the two half
    densities apart by more than 2*eps.
    """
    if points.p != 2:
        raise InputError("density_increment is defined over F_2 only")
    if not 0 < eps <= 1:
        raise InputError(f"eps must satisfy 0 < eps <= 1, got {eps}")
    n = points.n
    bits = points.bits
    coset = Coset.whole_space(2, n)
    eps_sq = eps * eps
    steps: list[IncrementStep] = []
    max_steps = ceil(1 / eps) + 1
    for _ in range(max_steps + 1):
        report = uniformity_sup(points, coset)
        if report.sup_sq <= eps_sq:
            steps.append(IncrementStep(coset, report.density, None))
            return IncrementTrace(
                steps=tuple(steps),
                final=coset,
                final_density=report.density,
                final_sup_sq=report.sup_sq,
            )
        r = report.witness_r
        assert r is not None
        steps.append(IncrementStep(coset, report.density, r))
        space = coset.subspace
        half_space = perp(extend_span(perp(space), [r]))
        r_rank = r.rank
        counts = [0, 0]
        first_rank: list[Optional[int]] = [None, None]
        for y in coset.point_ranks():
            side = (r_rank & y).bit_count() & 1
            if first_rank[side] is None:
                first_rank[side] = y
            counts[side] += bits >> y & 1
        side = 0 if counts[0] > counts[1] else 1
        anchor = GFVector.from_rank(2, n, first_rank[side])
        coset = Coset(half_space, canonical_rep(anchor, half_space))
    raise AssertionError("density increment failed to terminate within its bound")


def partition_energy(points: PointSet, space: Subspace) -> Fraction:
    """Mean squared coset density of the set over the cosets of `space`."""
    if (points.p, points.n) != (space.p, space.n):
        raise InputError("point set and subspace live in different ambient spaces")
    mem = points.membership_table()
    p, n = points.p, points.n
    member_ranks = space.point_ranks()
    total = 0
    if p == 2:
        for rep in _coset_rep_ranks(space):
            c = sum(mem[rep ^ v] for v in member_ranks)
            total += c * c
    else:
        for rep in _coset_rep_ranks(space):
            c = sum(mem[add_rank(p, n, rep, v)] for v in member_ranks)
            total += c * c
    cosets = p**space.codim
    return Fraction(total, cosets * space.size * space.size)


@dataclass(frozen=True)
class RegularityResult:
    """Outcome of an energy-increment decomposition.

    On success at most an eta fraction of the cosets of W are bad
    (sup_sq > eps^2); bad_reps lists their canonical representatives.
    On failure (the next refinement would exceed max_codim) the partial
    state is returned with succeeded = False.
    """

    succeeded: bool
    space: Subspace
    good_fraction: Fraction
    bad_reps: tuple[GFVector, ...]
    rounds: int
    energy_trace: tuple[Fraction, ...]


def coordinate_subspace(p: int, n: int, codim: int) -> Subspace:
    """{x : x_1 = ... = x_codim = 0}, the starting foliation."""
    if not 0 <= codim <= n:
        raise InputError(f"codim {codim} out of range 0..{n}")
    return Subspace(
        p, n, tuple(GFVector.unit(p, n, j) for j in range(codim + 1, n + 1))
    )


def _scan_cosets(
    mem: list[int], space: Subspace, eps: Fraction
) -> tuple[list[tuple[int, int]], int]:
    """Per-coset scan: ([(rep rank, witness t) for bad cosets], energy numerator)."""
    k = space.dim
    member_ranks = space.point_ranks()
    rhs = eps.numerator * eps.numerator << (2 * k)
    den_sq = eps.denominator * eps.denominator
    bad: list[tuple[int, int]] = []
    energy_num = 0
    for rep in _coset_rep_ranks(space):
        packed = 0
        for i, v in enumerate(member_ranks):
            packed |= mem[rep ^ v] << i
        count = packed.bit_count()
        energy_num += count * count
        max_sq, witness_t = packed_max_coef_sq(packed, count, k)
        if max_sq * den_sq > rhs:
            bad.append((rep, witness_t))
    return bad, energy_num


def regularity_decompose(
    points: PointSet,
    eps: Fraction,
    eta: Fraction,
    min_codim: int = 0,
    max_codim: Optional[int] = None,
) -> RegularityResult:
    """Refine a coordinate subspace until almost all cosets are eps-uniform.

    Starts from W = {x : x_1 = ... = x_min_codim = 0}.  A coset is bad
    when its uniformity sup_sq exceeds eps^2.  While more than an eta
    fraction of cosets are bad, W is replaced by its intersection with
    the annihilator of the span of the deduplicated bad-coset witnesses.
    Fails (succeeded=False, partial state) if that would push the
    codimension beyond max_codim.
    """
    if points.p != 2:
        raise InputError("regularity_decompose is defined over F_2 only")
    if not 0 < eps <= 1:
        raise InputError(f"eps must satisfy 0 < eps <= 1, got {eps}")
    if not 0 <= eta < 1:
        raise InputError(f"eta must satisfy 0 <= eta < 1, got {eta}")
    n = points.n
    if max_codim is None:
        max_codim = n
    if not 0 <= min_codim <= max_codim <= n:
        raise InputError(
            f"need 0 <= min_codim <= max_codim <= n, got {min_codim}, {max_codim}, {n}"
        )
    space = coordinate_subspace(2, n, min_codim)
    mem = points.membership_table()
    energy_trace: list[Fraction] = []
    rounds = 0
    # codim grows strictly every round, so n + 1 scans always suffice
    for _ in range(n + 1):
        bad, energy_num = _scan_cosets(mem, space, eps)
        cosets = 1 << space.codim
        energy_trace.append(Fraction(energy_num, cosets * space.size * space.size))
        good_fraction = Fraction(cosets - len(bad), cosets)
        bad_reps = tuple(GFVector.from_rank(2, n, rep) for rep, _ in bad)
        if Fraction(len(bad), cosets) <= eta:
            return RegularityResult(
                succeeded=True,
                space=space,
                good_fraction=good_fraction,
                bad_reps=bad_reps,
                rounds=rounds,
                energy_trace=tuple(energy_trace),
            )
        witness_ranks = sorted({lift_class(space, t).rank for _, t in bad})
        witnesses = [GFVector.from_rank(2, n, r) for r in witness_ranks]
        refined = perp(extend_span(perp(space), witnesses))
        if refined.codim > max_codim:
            return RegularityResult(
                succeeded=False,
                space=space,
                good_fraction=good_fraction,
                bad_reps=bad_reps,
                rounds=rounds,
                energy_trace=tuple(energy_trace),
            )
        space = refined
        rounds += 1
    raise AssertionError("regularity decomposition failed to terminate")


@dataclass(frozen=True)
class PipelineParams:
    """Parameters for the end-to-end subspace search.

    eps is the uniformity target; eta the allowed bad-coset fraction per
    regularity round.  d (structure size) defaults to
    ceil(log2(1/eps)) + 1 and buckets (density resolution B) to
    ceil(1/eps); slack C fixes the verified guarantee sup <= C*eps.
    min_codim/max_codim bound the foliation depth; max_codim defaults to
    the ambient dimension at run time.
    """

    eps: Fraction
    eta: Fraction = Fraction(1, 8)
    d: Optional[int] = None
    buckets: Optional[int] = None
    min_codim: int = 0
    max_codim: Optional[int] = None
    slack: int = 4

    def __post_init__(self) -> None:
        if not 0 < self.eps <= 1:
            raise InputError(f"eps must satisfy 0 < eps <= 1, got {self.eps}")
        if not 0 <= self.eta < 1:
            raise InputError(f"eta must satisfy 0 <= eta < 1, got {self.eta}")
        if self.d is not None and self.d < 1:
            raise InputError(f"structure size d must be >= 1, got {self.d}")
        if self.buckets is not None and self.buckets < 1:
            raise InputError(f"bucket count must be >= 1, got {self.buckets}")
        if self.min_codim < 0:
            raise InputError(f"min_codim must be >= 0, got {self.min_codim}")
        if self.max_codim is not None and self.max_codim < self.min_codim:
            raise InputError(
                f"max_codim {self.max_codim} is below min_codim {self.min_codim}"
            )
        if self.slack < 1:
            raise InputError(f"slack must be >= 1, got {self.slack}")

    @property
    def resolved_d(self) -> int:
        if self.d is not None:
            return self.d
        # smallest t with 2^t >= 1/eps, plus one
        inv_num, inv_den = self.eps.denominator, self.eps.numerator
        t = 0
        while (inv_den << t) < inv_num:
            t += 1
        return t + 1

    @property
    def resolved_buckets(self) -> int:
        if self.buckets is not None:
            return self.buckets
        return -(-self.eps.denominator // self.eps.numerator)
