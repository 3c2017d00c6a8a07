"""Partitions in a k x (n-k) box, their binary-string encoding, and small
symmetric-function utilities shared by the dimer, crystal and cohomology code.

Positions in a binary string run 1..n; the canonical text form prints them in
the order b_n ... b_1, so position 1 is the rightmost character.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class BoxShape:
    k: int
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"circumference n={self.n} must be at least 3")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"k={self.k} must lie in 0..{self.n}")

    @property
    def width(self) -> int:
        return self.n - self.k

    def transpose(self) -> "BoxShape":
        return BoxShape(self.n - self.k, self.n)

    def partitions(self) -> list["Partition"]:
        return list(_box_partitions(self))

    def compositions(self) -> Iterator["Composition"]:
        for parts in itertools.product(range(self.width + 1), repeat=self.k):
            yield Composition(parts, self)


@dataclass(frozen=True, slots=True)
class BinaryString:
    n: int
    mask: int  # bit p-1 holds b_p

    @classmethod
    def from_positions(cls, n: int, positions) -> "BinaryString":
        mask = 0
        for p in positions:
            if not 1 <= p <= n:
                raise DomainError(f"position {p} outside 1..{n}")
            mask |= 1 << (p - 1)
        return cls(n, mask)

    @classmethod
    def parse(cls, text: str) -> "BinaryString":
        """Read the printed form b_n ... b_1."""
        if not text or set(text) - {"0", "1"}:
            raise DomainError(f"not a binary string: {text!r}")
        n = len(text)
        return cls(n, int(text, 2))

    @classmethod
    def zeros(cls, n: int) -> "BinaryString":
        return cls(n, 0)

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def ones(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.n + 1) if self.mask >> (p - 1) & 1)

    def __getitem__(self, p: int) -> int:
        # cyclic: b_0 is b_n, b_{n+1} is b_1
        return self.mask >> ((p - 1) % self.n) & 1

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")

    def rotate(self, shift: int = 1) -> "BinaryString":
        """Move every letter from position p to position p + shift (mod n)."""
        s = shift % self.n
        full = (1 << self.n) - 1
        return BinaryString(self.n, ((self.mask << s) | (self.mask >> (self.n - s))) & full)

    def reflect(self, offset: int = 0) -> "BinaryString":
        """Send position p to (offset - p) mod n, with residue 0 read as n."""
        return BinaryString.from_positions(
            self.n, [((offset - p - 1) % self.n) + 1 for p in self.ones]
        )


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...]
    box: BoxShape

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise DomainError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts {parts} are not weakly decreasing")
        parts = tuple(x for x in parts if x)
        if len(parts) > self.box.k:
            raise DomainError(f"{parts} has more than k={self.box.k} nonzero parts")
        for x in parts:
            if x > self.box.width:
                raise DomainError(f"part {x} exceeds box width n-k={self.box.width}")
        object.__setattr__(self, "parts", parts)

    @property
    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.box.k - len(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True, slots=True)
class Composition:
    parts: tuple[int, ...]
    box: BoxShape

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if len(parts) != self.box.k:
            raise DomainError(f"composition {parts} must have exactly k={self.box.k} parts")
        for x in parts:
            if not 0 <= x <= self.box.width:
                raise DomainError(f"part {x} outside 0..{self.box.width}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def sorted_partition(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)), self.box)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def as_composition(lam, box: BoxShape) -> Composition:
    """Accept a Partition, Composition or plain sequence and pad it to k parts."""
    if isinstance(lam, Composition):
        return lam
    parts = tuple(lam.parts if isinstance(lam, Partition) else lam)
    if len(parts) < box.k:
        parts = parts + (0,) * (box.k - len(parts))
    return Composition(parts, box)


def partition_to_string(mu: Partition) -> BinaryString:
    k, n = mu.box.k, mu.box.n
    padded = mu.padded
    return BinaryString.from_positions(n, [padded[k - i] + i for i in range(1, k + 1)])


def string_to_partition(b: BinaryString) -> Partition:
    ones = b.ones
    k = len(ones)
    box = BoxShape(k, b.n)
    # ones[i-1] = mu_{k+1-i} + i
    return Partition(tuple(ones[k - j] - (k + 1 - j) for j in range(1, k + 1)), box)


@lru_cache(maxsize=None)
def _box_partitions(box: BoxShape) -> tuple[Partition, ...]:
    out = [
        string_to_partition(BinaryString.from_positions(box.n, c))
        for c in itertools.combinations(range(1, box.n + 1), box.k)
    ]
    return tuple(sorted(out, key=lambda p: (p.size, p.parts)))


def conjugate(mu: Partition) -> Partition:
    if not mu.parts:
        return Partition((), mu.box.transpose())
    cols = tuple(sum(1 for x in mu.parts if x > j) for j in range(mu.parts[0]))
    return Partition(cols, mu.box.transpose())


def partial_sums(b: BinaryString, direction: str = "top") -> tuple[int, ...]:
    """n_i for i = 1..n.

    ``top`` sums the i highest positions (b_{n+1-i} + ... + b_n); ``bottom``
    sums b_1 + ... + b_i.
    """
    n = b.n
    if direction == "top":
        return tuple(sum(b[j] for j in range(n + 1 - i, n + 1)) for i in range(1, n + 1))
    if direction == "bottom":
        return tuple(sum(b[j] for j in range(1, i + 1)) for i in range(1, n + 1))
    raise ValueError(f"unknown partial-sum direction {direction!r}")


@dataclass(frozen=True)
class BoundaryPair:
    mu: Partition
    nu: Partition
    partial_sums_mu: tuple[int, ...]
    partial_sums_nu: tuple[int, ...]
    d_min: int
    direction: str = "top"

    @property
    def min_dimers(self) -> int:
        n = self.mu.box.n
        return n * self.d_min + self.nu.size - self.mu.size


def boundary_pair(mu: Partition, nu: Partition, direction: str = "top") -> BoundaryPair:
    """Partial-sum profiles of b^mu, b^nu and the minimal crossing number.

    With top sums, particles entering the top i positions must be balanced
    by those leaving through the seam, so d_min = max_i (n_i(mu) - n_i(nu)).
    The bottom-sum form max_i (n_i(nu) - n_i(mu)) gives the same number.
    """
    if mu.box != nu.box:
        raise DomainError(f"boxes differ: {mu.box} vs {nu.box}")
    sm = partial_sums(partition_to_string(mu), direction)
    sn = partial_sums(partition_to_string(nu), direction)
    if direction == "top":
        d_min = max(a - b for a, b in zip(sm, sn))
    else:
        d_min = max(b - a for a, b in zip(sm, sn))
    return BoundaryPair(mu, nu, sm, sn, max(d_min, 0), direction)


def degree(lambda_total: int, mu: Partition, nu: Partition) -> int | None:
    num = lambda_total + mu.size - nu.size
    n = mu.box.n
    if num < 0 or num % n:
        return None
    return num // n


@dataclass(frozen=True)
class ThetaProfile:
    theta: tuple[int, ...]
    flags: tuple[int, ...]

    def flag(self, i: int) -> int:
        """Theta_i with cyclic index, so flag(n + 1) == flag(1)."""
        return self.flags[(i - 1) % len(self.flags)]

    @property
    def all_positive(self) -> bool:
        return all(self.flags)


def theta_profile(pair: BoundaryPair, d: int) -> ThetaProfile:
    # with top sums theta_i counts horizontal dimers in column n - i
    theta = tuple(d + b - a for a, b in zip(pair.partial_sums_mu, pair.partial_sums_nu))
    return ThetaProfile(theta, tuple(int(t > 0) for t in theta))


def _parts(lam) -> tuple[int, ...]:
    if isinstance(lam, (Partition, Composition)):
        return tuple(x for x in lam.parts if x)
    return tuple(x for x in lam if x)


def hooks_and_contents(lam) -> list[tuple[tuple[int, int], int, int]]:
    parts = _parts(lam)
    cols = [sum(1 for x in parts if x > j) for j in range(parts[0])] if parts else []
    cells = []
    for i, row in enumerate(parts, start=1):
        for j in range(1, row + 1):
            hook = row + cols[j - 1] - i - j + 1
            cells.append(((i, j), hook, j - i))
    return cells


def hook_content_product(lam, m: int) -> int | Fraction:
    value = Fraction(1)
    for _, h, c in hooks_and_contents(lam):
        value *= Fraction(m + c, h)
    return int(value) if value.denominator == 1 else value


def semistandard_tableaux(outer, max_entry: int, inner=()) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All SSYT of skew shape outer/inner with entries in 1..max_entry.

    A tableau is returned row by row; row i lists the entries of cells
    inner_i+1 .. outer_i.
    """
    outer = _parts(outer)
    inner = _parts(inner) + (0,) * (len(outer) - len(_parts(inner)))
    if any(a > b for a, b in zip(inner, outer)) or len(_parts(inner)) > len(outer):
        return
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            yield tuple(
                tuple(filling[(i, j)] for j in range(inner[i], outer[i])) for i in range(len(outer))
            )
            return
        i, j = cells[idx]
        lo = 1
        if j > inner[i]:
            lo = filling[(i, j - 1)]
        if i > 0 and j >= inner[i - 1]:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[(i, j)] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def tableau_content(tableau, length: int) -> tuple[int, ...]:
    c = [0] * length
    for row in tableau:
        for v in row:
            c[v - 1] += 1
    return tuple(c)


def schur_polynomial(lam, k_vars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of s_lam(x_1..x_k) as {exponent vector: coefficient}."""
    if len(_parts(lam)) > k_vars:
        return {}
    poly: Counter = Counter()
    for t in semistandard_tableaux(lam, k_vars):
        poly[tableau_content(t, k_vars)] += 1
    return dict(poly)


def kostka_number(lam, content: Sequence[int]) -> int:
    """Classical Kostka number: SSYT of shape lam with the given content."""
    content = tuple(content)
    m = len(content)
    return sum(
        1 for t in semistandard_tableaux(lam, m) if tableau_content(t, m) == content
    )
