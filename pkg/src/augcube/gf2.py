"""Exact linear algebra over GF(2) on int bitsets.

Coordinate ``x_i`` of a vector in Z_2^n lives at bit ``n - i``, so the
string ``x_1 x_2 ... x_n`` is the big-endian binary rendering of the int
(``"0011"`` is 3 for n = 4, and ``e_1`` is ``1 << (n - 1)``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

MAX_DIM = 24


class DimensionError(ValueError):
    pass


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise DimensionError(f"dimension {n} outside 1..{MAX_DIM}")


def unit(n: int, i: int) -> int:
    """Bit pattern of e_i (1-based, x_1 is the leftmost character)."""
    if not 1 <= i <= n:
        raise DimensionError(f"e_{i} undefined for n={n}")
    return 1 << (n - i)


def suffix_ones(n: int, k: int) -> int:
    """The vector 0...01...1 with exactly k trailing ones."""
    if not 0 <= k <= n:
        raise DimensionError(f"cannot have {k} trailing ones in dimension {n}")
    return (1 << k) - 1


def to_bitstring(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def parse_bitstring(s: str, n: int | None = None) -> int:
    s = s.strip()
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {s!r}")
    if n is not None and len(s) != n:
        raise ValueError(f"expected {n} characters, got {len(s)} in {s!r}")
    return int(s, 2)


@dataclass(frozen=True, order=True)
class GF2Vector:
    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise DimensionError(f"{self.bits} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, s: str, n: int | None = None) -> GF2Vector:
        bits = parse_bitstring(s, n)
        return cls(len(s.strip()), bits)

    @classmethod
    def unit(cls, n: int, i: int) -> GF2Vector:
        return cls(n, unit(n, i))

    @classmethod
    def zero(cls, n: int) -> GF2Vector:
        return cls(n, 0)

    def __str__(self) -> str:
        return to_bitstring(self.bits, self.n)

    def __int__(self) -> int:
        return self.bits

    def __add__(self, other: GF2Vector) -> GF2Vector:
        return vec_add(self, other)

    def weight(self) -> int:
        return bin(self.bits).count("1")


def vec_add(u: GF2Vector, v: GF2Vector) -> GF2Vector:
    if u.n != v.n:
        raise DimensionError(f"cannot add vectors of dimension {u.n} and {v.n}")
    return GF2Vector(u.n, u.bits ^ v.bits)


def _reduce(x: int, pivots: dict[int, int]) -> int:
    """Reduce x against an echelon basis keyed by pivot bit."""
    for bit, row in pivots.items():
        if x & bit:
            x ^= row
    return x


def echelon(vectors: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of the span, sorted by descending pivot."""
    pivots: dict[int, int] = {}
    for v in vectors:
        v = _reduce(v, pivots)
        if not v:
            continue
        top = 1 << (v.bit_length() - 1)
        for bit in list(pivots):
            if pivots[bit] & top:
                pivots[bit] ^= v
        pivots[top] = v
        # keep pivots ordered high to low so _reduce sweeps left to right
        pivots = dict(sorted(pivots.items(), reverse=True))
    return list(pivots.values())


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


@dataclass(frozen=True)
class GF2Matrix:
    """Linear map on Z_2^n stored as the images of e_1, ..., e_n.

    ``rows[i - 1]`` is the image of ``e_i``; applying the matrix sends
    ``x`` to the XOR of the rows selected by the coordinates of ``x``.
    """

    n: int
    rows: tuple[int, ...]
    _invertible: bool | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_dim(self.n)
        if len(self.rows) != self.n:
            raise DimensionError(f"need {self.n} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.n):
                raise DimensionError(f"row {r} does not fit in {self.n} bits")
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, tuple(unit(n, i) for i in range(1, n + 1)))

    @classmethod
    def from_images(cls, n: int, images: Sequence[int | str]) -> GF2Matrix:
        rows = [parse_bitstring(x, n) if isinstance(x, str) else x for x in images]
        return cls(n, tuple(rows))

    def __call__(self, x: int) -> int:
        acc = 0
        n = self.n
        for i, row in enumerate(self.rows):
            if (x >> (n - 1 - i)) & 1:
                acc ^= row
        return acc

    @cached_property
    def table(self) -> tuple[int, ...]:
        """Image of every vector, indexed by its int value."""
        out = [0] * (1 << self.n)
        for x in range(1, 1 << self.n):
            low = x & -x
            # low is e_i for i = n - low.bit_length() + 1
            out[x] = out[x ^ low] ^ self.rows[self.n - low.bit_length()]
        return tuple(out)

    def is_invertible(self) -> bool:
        if self._invertible is None:
            object.__setattr__(self, "_invertible", rank(self.rows) == self.n)
        return bool(self._invertible)

    def then(self, other: GF2Matrix) -> GF2Matrix:
        """Matrix of ``x -> other(self(x))``."""
        if other.n != self.n:
            raise DimensionError("matrix dimension mismatch")
        return GF2Matrix(self.n, tuple(other(r) for r in self.rows))

    def row_strings(self) -> list[str]:
        return [to_bitstring(r, self.n) for r in self.rows]


def mat_apply(m: GF2Matrix, v: GF2Vector) -> GF2Vector:
    if m.n != v.n:
        raise DimensionError(f"matrix of dimension {m.n} applied to vector of dimension {v.n}")
    return GF2Vector(m.n, m(v.bits))


def mat_invertible(m: GF2Matrix) -> bool:
    return m.is_invertible()


def mat_inverse(m: GF2Matrix) -> GF2Matrix:
    """Gauss-Jordan on the augmented rows ``[M | I]``."""
    n = m.n
    full = (1 << n) - 1
    work = [(row << n) | unit(n, i + 1) for i, row in enumerate(m.rows)]
    for col in range(n):
        bit = 1 << (2 * n - 1 - col)
        pivot = next((r for r in range(col, n) if work[r] & bit), None)
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        work[col], work[pivot] = work[pivot], work[col]
        for r in range(n):
            if r != col and work[r] & bit:
                work[r] ^= work[col]
    return GF2Matrix(n, tuple(w & full for w in work))


@dataclass(frozen=True)
class Subspace:
    """Subspace of Z_2^n kept as a reduced echelon basis."""

    n: int
    basis: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n)
        reduced = tuple(echelon(self.basis))
        if len(reduced) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", reduced)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def __contains__(self, x: object) -> bool:
        if isinstance(x, GF2Vector):
            x = x.bits
        if not isinstance(x, int):
            return False
        for row in self.basis:
            top = 1 << (row.bit_length() - 1)
            if x & top:
                x ^= row
        return x == 0

    @cached_property
    def members(self) -> tuple[int, ...]:
        out = [0]
        for b in self.basis:
            out += [x ^ b for x in out]
        return tuple(sorted(out))

    def basis_strings(self) -> list[str]:
        return [to_bitstring(b, self.n) for b in self.basis]


def span(vs: Sequence[GF2Vector | int], n: int | None = None) -> Subspace:
    ints = []
    for v in vs:
        if isinstance(v, GF2Vector):
            if n is None:
                n = v.n
            elif v.n != n:
                raise DimensionError("mixed dimensions in span")
            ints.append(v.bits)
        else:
            ints.append(v)
    if n is None:
        raise DimensionError("ambient dimension unknown for an empty span")
    return Subspace(n, tuple(echelon(ints)))


def is_subspace(s: Iterable[GF2Vector | int], n: int | None = None) -> bool:
    """True iff the set contains 0 and is closed under addition."""
    ints = set()
    for v in s:
        if isinstance(v, GF2Vector):
            if n is not None and v.n != n:
                raise DimensionError("mixed dimensions")
            n = v.n
            ints.add(v.bits)
        else:
            ints.add(v)
    if not ints:
        raise ValueError("is_subspace needs a nonempty set")
    if 0 not in ints:
        return False
    # s is inside its own span, so equal sizes mean s is the span
    return len(ints) == 1 << rank(ints)


def coset_partition(s: Subspace) -> list[tuple[int, ...]]:
    """Cosets of s in ascending order of their least element; s comes first."""
    seen = bytearray(1 << s.n)
    out = []
    for x in range(1 << s.n):
        if seen[x]:
            continue
        coset = tuple(sorted(x ^ m for m in s.members))
        for y in coset:
            seen[y] = 1
        out.append(coset)
    return out
