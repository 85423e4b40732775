"""Exact linear algebra over the prime fields F_2 and F_3.

Conventions used throughout the package:

* Vectors live in F_p^n with coordinates numbered 1..n.  The *rank* of a
  vector is the integer obtained by reading its coordinates as base-p
  digits with coordinate 1 most significant, so rank orders vectors
  lexicographically (digit order 0 < 1 < 2).
* A subspace is always stored by its reduced row echelon basis (RREF):
  pivot columns strictly increase, each pivot entry is 1 and is the only
  nonzero entry in its column.  Two subspaces are equal as sets exactly
  when their stored bases are equal, so dataclass equality is set
  equality.
* A coset is stored as (subspace, representative) where the
  representative is the lexicographically least element of the coset.
  That canonical representative is the unique coset element whose pivot
  coordinates are all zero.

Ambient sizes are capped so tables of p^n entries stay addressable:
n <= 24 for p = 2 and n <= 12 for p = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import InputError

MAX_N = {2: 24, 3: 12}


def _check_space(p: int, n: int) -> None:
    if p not in (2, 3):
        raise InputError(f"unsupported field characteristic p={p} (expected 2 or 3)")
    if not 1 <= n <= MAX_N[p]:
        raise InputError(f"dimension n={n} out of range for p={p} (1..{MAX_N[p]})")


@lru_cache(maxsize=None)
def _weights(p: int, n: int) -> tuple[int, ...]:
    """Digit weights (p^(n-1), ..., p, 1): coordinate i has weight p^(n-i)."""
    return tuple(p ** (n - i) for i in range(1, n + 1))


def add_rank(p: int, n: int, x: int, y: int) -> int:
    """Coordinatewise sum mod p of two vectors given by rank."""
    if p == 2:
        return x ^ y
    s = 0
    for w in _weights(p, n):
        s += ((x // w + y // w) % 3) * w
    return s


@dataclass(frozen=True, order=True)
class GFVector:
    """An immutable vector in F_p^n.  Ordering is lexicographic on coords."""

    p: int
    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_space(self.p, self.n)
        if len(self.coords) != self.n:
            raise InputError(
                f"coordinate count {len(self.coords)} does not match n={self.n}"
            )
        if any(not 0 <= c < self.p for c in self.coords):
            raise InputError(f"coordinates {self.coords} not reduced mod {self.p}")

    @classmethod
    def zero(cls, p: int, n: int) -> GFVector:
        return cls(p, n, (0,) * n)

    @classmethod
    def unit(cls, p: int, n: int, j: int) -> GFVector:
        """Standard basis vector e_j (1-based coordinate j)."""
        if not 1 <= j <= n:
            raise InputError(f"unit index {j} out of range 1..{n}")
        return cls(p, n, tuple(1 if i == j else 0 for i in range(1, n + 1)))

    @classmethod
    def from_rank(cls, p: int, n: int, rank: int) -> GFVector:
        _check_space(p, n)
        if not 0 <= rank < p**n:
            raise InputError(f"rank {rank} out of range for F_{p}^{n}")
        return cls(p, n, tuple((rank // w) % p for w in _weights(p, n)))

    @property
    def rank(self) -> int:
        return sum(c * w for c, w in zip(self.coords, _weights(self.p, self.n)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check_same_space(self, other: GFVector) -> None:
        if (self.p, self.n) != (other.p, other.n):
            raise InputError("vectors live in different ambient spaces")

    def __add__(self, other: GFVector) -> GFVector:
        self._check_same_space(other)
        return GFVector(
            self.p,
            self.n,
            tuple((a + b) % self.p for a, b in zip(self.coords, other.coords)),
        )

    def __sub__(self, other: GFVector) -> GFVector:
        self._check_same_space(other)
        return GFVector(
            self.p,
            self.n,
            tuple((a - b) % self.p for a, b in zip(self.coords, other.coords)),
        )

    def __neg__(self) -> GFVector:
        return GFVector(self.p, self.n, tuple((-a) % self.p for a in self.coords))

    def scale(self, c: int) -> GFVector:
        return GFVector(self.p, self.n, tuple((c * a) % self.p for a in self.coords))

    def dot(self, other: GFVector) -> int:
        self._check_same_space(other)
        return sum(a * b for a, b in zip(self.coords, other.coords)) % self.p

    def digits(self) -> str:
        return "".join(str(c) for c in self.coords)


def _rref_rows(p: int, n: int, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place RREF of integer rows mod p.  Returns (nonzero rows, pivot cols)."""
    inv = {1: 1, 2: (p + 1) // 2 if p == 3 else 1}
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next(
            (r for r in range(rank, len(rows)) if rows[r][col] % p != 0), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        head = rows[rank]
        scale = inv[head[col] % p]
        if scale != 1:
            rows[rank] = head = [(scale * v) % p for v in head]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p != 0:
                factor = rows[r][col] % p
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], head)]
        pivots.append(col + 1)
        rank += 1
    return [row for row in rows[:rank]], pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n stored by its canonical RREF basis."""

    p: int
    n: int
    basis: tuple[GFVector, ...]

    def __post_init__(self) -> None:
        _check_space(self.p, self.n)
        last_pivot = 0
        for i, row in enumerate(self.basis):
            if (row.p, row.n) != (self.p, self.n):
                raise InputError("basis row lives in a different ambient space")
            pivot = next((j for j, c in enumerate(row.coords, 1) if c), None)
            if pivot is None or pivot <= last_pivot or row.coords[pivot - 1] != 1:
                raise InputError("basis rows are not in reduced row echelon form")
            if any(other.coords[pivot - 1] for other in self.basis if other != row):
                raise InputError("pivot column has a second nonzero entry")
            last_pivot = pivot

    @classmethod
    def zero(cls, p: int, n: int) -> Subspace:
        return cls(p, n, ())

    @classmethod
    def full(cls, p: int, n: int) -> Subspace:
        return cls(p, n, tuple(GFVector.unit(p, n, j) for j in range(1, n + 1)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.n - len(self.basis)

    @property
    def size(self) -> int:
        return self.p**self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(
            next(j for j, c in enumerate(row.coords, 1) if c) for row in self.basis
        )

    @property
    def free_columns(self) -> tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(j for j in range(1, self.n + 1) if j not in pivot_set)

    def contains(self, v: GFVector) -> bool:
        return canonical_rep(v, self).is_zero

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(row) for row in other.basis)

    def point_ranks(self) -> list[int]:
        """All member ranks, ordered by coefficient index (see spectra)."""
        return _span_ranks(self.p, self.n, tuple(row.rank for row in self.basis))

    def points(self) -> Iterator[GFVector]:
        for r in self.point_ranks():
            yield GFVector.from_rank(self.p, self.n, r)


def rref_basis(vectors: Sequence[GFVector]) -> Subspace:
    """Canonical RREF span of the given vectors (duplicates and zeros allowed)."""
    if not vectors:
        raise InputError("rref_basis needs at least one vector to fix the ambient space")
    p, n = vectors[0].p, vectors[0].n
    for v in vectors:
        if (v.p, v.n) != (p, n):
            raise InputError("vectors live in different ambient spaces")
    rows, _ = _rref_rows(p, n, [list(v.coords) for v in vectors])
    return Subspace(p, n, tuple(GFVector(p, n, tuple(r)) for r in rows))


def perp(space: Subspace) -> Subspace:
    """Annihilator {r : r.v = 0 for every v in the subspace}."""
    p, n = space.p, space.n
    pivots = space.pivots
    pivot_index = {col: i for i, col in enumerate(pivots)}
    rows: list[list[int]] = []
    for free in range(1, n + 1):
        if free in pivot_index:
            continue
        row = [0] * n
        row[free - 1] = 1
        for col, i in pivot_index.items():
            row[col - 1] = (-space.basis[i].coords[free - 1]) % p
        rows.append(row)
    if not rows:
        return Subspace.zero(p, n)
    reduced, _ = _rref_rows(p, n, rows)
    return Subspace(p, n, tuple(GFVector(p, n, tuple(r)) for r in reduced))


def canonical_rep(x: GFVector, space: Subspace) -> GFVector:
    """Lexicographically least element of the coset x + space.

    Obtained by clearing the pivot coordinates of x against the RREF
    basis; any other coset element first differs from the result at a
    pivot coordinate, where the result holds a 0.
    """
    if (x.p, x.n) != (space.p, space.n):
        raise InputError("vector and subspace live in different ambient spaces")
    coords = list(x.coords)
    for row, pivot in zip(space.basis, space.pivots):
        c = coords[pivot - 1]
        if c:
            coords = [(a - c * b) % space.p for a, b in zip(coords, row.coords)]
    return GFVector(x.p, x.n, tuple(coords))


@dataclass(frozen=True)
class Coset:
    """A coset rep + subspace with the canonical (lex-least) representative."""

    subspace: Subspace
    rep: GFVector

    def __post_init__(self) -> None:
        if (self.rep.p, self.rep.n) != (self.subspace.p, self.subspace.n):
            raise InputError("representative and subspace live in different spaces")
        if any(self.rep.coords[pivot - 1] for pivot in self.subspace.pivots):
            raise InputError("representative is not canonical (pivot coordinate set)")

    @classmethod
    def of(cls, space: Subspace, x: GFVector) -> Coset:
        return cls(space, canonical_rep(x, space))

    @classmethod
    def whole_space(cls, p: int, n: int) -> Coset:
        return cls(Subspace.full(p, n), GFVector.zero(p, n))

    @property
    def size(self) -> int:
        return self.subspace.size

    def point_ranks(self) -> list[int]:
        p, n = self.subspace.p, self.subspace.n
        base = self.rep.rank
        return [add_rank(p, n, base, v) for v in self.subspace.point_ranks()]

    def points(self) -> Iterator[GFVector]:
        p, n = self.subspace.p, self.subspace.n
        for r in self.point_ranks():
            yield GFVector.from_rank(p, n, r)

    def contains(self, x: GFVector) -> bool:
        return canonical_rep(x, self.subspace) == self.rep


@dataclass(frozen=True)
class PointSet:
    """A subset of F_p^n stored as a membership bitmask indexed by rank."""

    p: int
    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_space(self.p, self.n)
        if not 0 <= self.bits < 1 << self.p**self.n:
            raise InputError("membership mask does not fit the ambient space")

    @classmethod
    def empty(cls, p: int, n: int) -> PointSet:
        return cls(p, n, 0)

    @classmethod
    def full(cls, p: int, n: int) -> PointSet:
        _check_space(p, n)
        return cls(p, n, (1 << p**n) - 1)

    @classmethod
    def from_ranks(cls, p: int, n: int, ranks: Iterable[int]) -> PointSet:
        _check_space(p, n)
        bits = 0
        total = p**n
        for r in ranks:
            if not 0 <= r < total:
                raise InputError(f"rank {r} out of range for F_{p}^{n}")
            bits |= 1 << r
        return cls(p, n, bits)

    @classmethod
    def from_vectors(cls, vectors: Sequence[GFVector]) -> PointSet:
        if not vectors:
            raise InputError("from_vectors needs at least one vector; use empty()")
        p, n = vectors[0].p, vectors[0].n
        for v in vectors:
            if (v.p, v.n) != (p, n):
                raise InputError("vectors live in different ambient spaces")
        return cls.from_ranks(p, n, (v.rank for v in vectors))

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def ambient_size(self) -> int:
        return self.p**self.n

    def contains_rank(self, rank: int) -> bool:
        return bool(self.bits >> rank & 1)

    def contains(self, v: GFVector) -> bool:
        return self.contains_rank(v.rank)

    def member_ranks(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def members(self) -> Iterator[GFVector]:
        for r in self.member_ranks():
            yield GFVector.from_rank(self.p, self.n, r)

    def membership_table(self) -> list[int]:
        """0/1 list of length p^n indexed by rank."""
        bits = self.bits
        return [(bits >> r) & 1 for r in range(self.ambient_size)]

    def complement(self) -> PointSet:
        return PointSet(self.p, self.n, self.bits ^ ((1 << self.ambient_size) - 1))


def _span_ranks(p: int, n: int, row_ranks: tuple[int, ...]) -> list[int]:
    """Ranks of the span, ordered by coefficient index.

    Index c = sum(c_i p^(k-i)) maps to sum(c_i basis_i); the first basis
    row is the most significant digit, so rows are folded in reverse.
    """
    pts = [0]
    if p == 2:
        for r in reversed(row_ranks):
            pts += [x ^ r for x in pts]
    else:
        for r in reversed(row_ranks):
            r2 = add_rank(p, n, r, r)
            pts = (
                pts
                + [add_rank(p, n, x, r) for x in pts]
                + [add_rank(p, n, x, r2) for x in pts]
            )
    return pts


def _rref_bases_raw(
    p: int, n: int, k: int
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield (pivot columns, basis row ranks) for every k-dim RREF basis.

    Profiles are emitted in lexicographic order of the pivot-column
    tuple; within a profile the free entries are enumerated
    lexicographically, earliest (row, column) slot most significant.
    """
    if k == 0:
        yield (), ()
        return
    digits = tuple(range(p))
    weights = _weights(p, n)
    for pivots in combinations(range(1, n + 1), k):
        pivot_set = set(pivots)
        base_rows = [weights[col - 1] for col in pivots]
        slots = [
            (i, weights[col - 1])
            for i in range(k)
            for col in range(pivots[i] + 1, n + 1)
            if col not in pivot_set
        ]
        if not slots:
            yield pivots, tuple(base_rows)
            continue
        for assignment in product(digits, repeat=len(slots)):
            rows = base_rows.copy()
            for (i, w), d in zip(slots, assignment):
                if d:
                    rows[i] += d * w
            yield pivots, tuple(rows)


def enumerate_subspaces(p: int, n: int, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of F_p^n, each exactly once.

    Deterministic order: by pivot-column profile, then lexicographic
    free entries.  The total count is the Gaussian binomial (n choose k)_p.
    """
    _check_space(p, n)
    if not 0 <= k <= n:
        raise InputError(f"subspace dimension {k} out of range 0..{n}")
    for _, rows in _rref_bases_raw(p, n, k):
        yield Subspace(
            p, n, tuple(GFVector.from_rank(p, n, r) for r in rows)
        )


def extend_span(space: Subspace, vectors: Sequence[GFVector]) -> Subspace:
    """Canonical span of the subspace together with extra vectors."""
    for v in vectors:
        if (v.p, v.n) != (space.p, space.n):
            raise InputError("vectors live in different ambient spaces")
    if not vectors and not space.basis:
        return space
    return rref_basis(list(space.basis) + list(vectors))


@lru_cache(maxsize=None)
def gaussian_binomial(p: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def coset_reps(space: Subspace) -> list[GFVector]:
    """Canonical representatives of all cosets, ordered by quotient index."""
    return [
        GFVector.from_rank(space.p, space.n, r) for r in _coset_rep_ranks(space)
    ]


def _coset_rep_ranks(space: Subspace) -> list[int]:
    p, n = space.p, space.n
    weights = _weights(p, n)
    reps = [0]
    free_weights = [weights[col - 1] for col in space.free_columns]
    for w in reversed(free_weights):
        if p == 2:
            reps += [x + w for x in reps]
        else:
            reps = reps + [x + w for x in reps] + [x + 2 * w for x in reps]
    return reps


def quotient_index(space: Subspace, x: GFVector) -> int:
    """Index of the coset x + space among all cosets.

    The canonical representative is read off at the non-pivot columns;
    those digits, first column most significant, form the index.  This
    is the rank convention transported to the quotient F_p^m with
    m = codim(space).
    """
    rep = canonical_rep(x, space)
    p = space.p
    idx = 0
    for col in space.free_columns:
        idx = idx * p + rep.coords[col - 1]
    return idx


def lift_from_quotient(space: Subspace, index: int) -> GFVector:
    """Canonical coset representative with the given quotient index."""
    p, n = space.p, space.n
    m = space.codim
    if not 0 <= index < p**m:
        raise InputError(f"quotient index {index} out of range for codim {m}")
    coords = [0] * n
    for col in reversed(space.free_columns):
        coords[col - 1] = index % p
        index //= p
    return GFVector(p, n, tuple(coords))
