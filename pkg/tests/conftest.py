"""Shared deterministic helpers for the test suite.

All random test data flows through splitmix64 so runs are byte-for-byte
reproducible.  The oracle helpers here (`bf_wht2`, `bf_dft3`, `rec_wht2`,
`tuple_span`) are written from the definitions, independently of the
library's transform and linear-algebra code paths, so they can serve as
cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from subuniform import GFVector, PointSet, Subspace, rref_basis, splitmix64


# ---------------------------------------------------------------------------
# deterministic data generators


def words(seed: int) -> Iterator[int]:
    """Stream of 64-bit words; alias kept short for test-local use."""
    return splitmix64(seed)


def rand_below(stream: Iterator[int], bound: int) -> int:
    """Draw from [0, bound); modulo bias is irrelevant for test data."""
    return next(stream) % bound


def random_vector(stream: Iterator[int], p: int, n: int) -> GFVector:
    return GFVector.from_rank(p, n, rand_below(stream, p**n))


def random_nonzero_vector(stream: Iterator[int], p: int, n: int) -> GFVector:
    return GFVector.from_rank(p, n, 1 + rand_below(stream, p**n - 1))


def random_subspace(stream: Iterator[int], p: int, n: int, dim: int) -> Subspace:
    """Uniform-ish random subspace of exactly the requested dimension."""
    if dim == 0:
        return Subspace.zero(p, n)
    while True:
        space = rref_basis([random_vector(stream, p, n) for _ in range(dim)])
        if space.dim == dim:
            return space


def random_subset(stream: Iterator[int], p: int, n: int, density: Fraction) -> PointSet:
    """Random point set drawn point-by-point from the given stream."""
    num, den = density.numerator, density.denominator
    ranks = [r for r in range(p**n) if next(stream) * den < num << 64]
    return PointSet.from_ranks(p, n, ranks)


def random_int_table(stream: Iterator[int], length: int, bound: int = 9) -> list[int]:
    """Random integer-valued function table with entries in [-bound, bound]."""
    return [rand_below(stream, 2 * bound + 1) - bound for _ in range(length)]


# ---------------------------------------------------------------------------
# independent oracles


def base_p_digits(p: int, n: int, r: int) -> tuple[int, ...]:
    """Base-p expansion of r, first coordinate most significant."""
    return tuple((r // p ** (n - 1 - i)) % p for i in range(n))


def tuple_add(p: int, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple((a + b) % p for a, b in zip(u, v))


def tuple_scale(p: int, c: int, u: Sequence[int]) -> tuple[int, ...]:
    return tuple((c * a) % p for a in u)


def tuple_span(p: int, vectors: Sequence[Sequence[int]]) -> frozenset[tuple[int, ...]]:
    """All linear combinations of the given coordinate tuples (brute force)."""
    if not vectors:
        raise ValueError("need the ambient dimension from at least one vector")
    n = len(vectors[0])
    span = {tuple([0] * n)}
    for v in vectors:
        additions = [tuple_scale(p, c, v) for c in range(1, p)]
        span |= {tuple_add(p, x, a) for x in span for a in additions}
    return frozenset(span)


def bf_wht2(table: Sequence[int]) -> list[int]:
    """Walsh coefficients straight from the double character sum."""
    size = len(table)
    return [
        sum(f * (-1 if ((t & x).bit_count() & 1) else 1) for x, f in enumerate(table))
        for t in range(size)
    ]


def rec_wht2(table: Sequence[int]) -> list[int]:
    """Divide-and-conquer Walsh transform; independent of the butterfly."""
    size = len(table)
    if size == 1:
        return list(table)
    half = size // 2
    even = rec_wht2(table[:half])
    odd = rec_wht2(table[half:])
    return [e + o for e, o in zip(even, odd)] + [e - o for e, o in zip(even, odd)]


# Eisenstein numbers as plain (a, b) pairs with a + b*omega, omega^2 = -1 - omega.
OMEGA_PAIRS = ((1, 0), (0, 1), (-1, -1))


def pair_mul(z: tuple[int, int], w: tuple[int, int]) -> tuple[int, int]:
    a, b = z
    c, d = w
    return (a * c - b * d, a * d + b * c - b * d)


def pair_add(z: tuple[int, int], w: tuple[int, int]) -> tuple[int, int]:
    return (z[0] + w[0], z[1] + w[1])


def pair_norm(z: tuple[int, int]) -> int:
    a, b = z
    return a * a - a * b + b * b


def bf_dft3(table: Sequence[int], k: int) -> list[tuple[int, int]]:
    """dft3 oracle: coefficient(t) = sum_c f(c) * omega^(-t.c), as (a, b) pairs."""
    assert len(table) == 3**k
    out = []
    for t in range(3**k):
        td = base_p_digits(3, k, t)
        acc = (0, 0)
        for c, f in enumerate(table):
            cd = base_p_digits(3, k, c)
            dot = sum(a * b for a, b in zip(td, cd)) % 3
            acc = pair_add(acc, pair_mul((f, 0), OMEGA_PAIRS[(-dot) % 3]))
        out.append(acc)
    return out


def signed_coset_sum(
    points: PointSet, coset_points: Sequence[GFVector], r: GFVector
) -> int:
    """Unnormalized signed sum of the indicator over a coset at frequency r (p=2)."""
    return sum(
        (1 if points.contains(y) else 0) * (-1 if (r.dot(y) & 1) else 1)
        for y in coset_points
    )
