"""Dimer configurations on the honeycomb cylinder in particle coordinates.

A configuration is a chain of k rows.  The k one-letters of a boundary string
are particles; a row with r horizontal dimers moves the particles weakly to the
right by a total of r steps without any particle reaching the old position of
the next one (cyclically).  A particle passing from position n to position 1
crosses the seam once.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .combinatorics import (
    BinaryString,
    BoxShape,
    Composition,
    Partition,
    as_composition,
    partition_to_string,
    string_to_partition,
)
from .errors import BudgetExceeded, DomainError

# Where a particle moving from l by m lays its horizontal dimers:
#   "start": l, l+1, ..., l+m-1      "end": l+1, ..., l+m
DIMER_POSITION_CONVENTION = "start"


@dataclass(frozen=True, slots=True)
class RowMove:
    displacements: tuple[int, ...]
    crossings: int

    @property
    def size(self) -> int:
        return sum(self.displacements)


def _row_moves(ones: tuple[int, ...], n: int, r: int) -> list[tuple[int, ...]]:
    k = len(ones)
    out: list[tuple[int, ...]] = []
    ms = [0] * k

    def rec(j, rem):
        if j == k:
            if rem == 0:
                out.append(tuple(ms))
            return
        nxt = ones[j + 1] if j + 1 < k else ones[0] + n
        for m in range(min(rem, nxt - ones[j] - 1) + 1):
            ms[j] = m
            rec(j + 1, rem - m)
        ms[j] = 0

    rec(0, r)
    return out


@lru_cache(maxsize=None)
def row_successors(u: BinaryString, r: int) -> tuple[tuple[BinaryString, RowMove], ...]:
    n, k = u.n, u.weight
    if not 0 <= r <= n - k:
        raise DomainError(f"row size r={r} outside 0..{n - k}")
    ones = u.ones
    if k == 0:
        return ((u, RowMove((), 0)),) if r == 0 else ()
    result = []
    for ms in _row_moves(ones, n, r):
        new = [ones[j] + ms[j] for j in range(k)]
        wraps = sum(1 for p in new if p > n)
        w = BinaryString.from_positions(n, [(p - 1) % n + 1 for p in new])
        result.append((w, RowMove(ms, wraps)))
    return tuple(result)


def dimer_positions(u: BinaryString, move: RowMove, convention: str | None = None) -> BinaryString:
    convention = convention or DIMER_POSITION_CONVENTION
    first = {"start": 0, "end": 1}[convention]
    n = u.n
    cols = [
        (p + t - 1) % n + 1
        for p, m in zip(u.ones, move.displacements)
        for t in range(first, m + first)
    ]
    return BinaryString.from_positions(n, cols)


@dataclass(frozen=True)
class DimerConfiguration:
    shape: BoxShape
    levels: tuple[BinaryString, ...]
    moves: tuple[RowMove, ...]
    row_dimer_positions: tuple[BinaryString, ...]

    @property
    def crossings(self) -> int:
        return sum(m.crossings for m in self.moves)

    @property
    def row_sizes(self) -> tuple[int, ...]:
        return tuple(m.size for m in self.moves)

    @property
    def mu(self) -> Partition:
        return string_to_partition(self.levels[0])

    @property
    def nu(self) -> Partition:
        return string_to_partition(self.levels[-1])

    def sort_key(self) -> str:
        return "".join(map(str, self.levels))

    def to_json(self) -> dict:
        return {
            "n": self.shape.n,
            "k": self.shape.k,
            "levels": [str(b) for b in self.levels],
            "rows": [
                {"dimers": str(d), "crossings": m.crossings}
                for d, m in zip(self.row_dimer_positions, self.moves)
            ],
        }

    @classmethod
    def from_json(cls, data: dict, convention: str | None = None) -> "DimerConfiguration":
        shape = BoxShape(data["k"], data["n"])
        levels = tuple(BinaryString.parse(s) for s in data["levels"])
        moves, dimers = [], []
        for u, w, row in zip(levels, levels[1:], data["rows"]):
            d = BinaryString.parse(row["dimers"])
            for w2, move in row_successors(u, d.weight):
                if w2 == w and dimer_positions(u, move, convention) == d:
                    break
            else:
                raise DomainError(f"row {row} is not a valid move from {u} to {w}")
            if move.crossings != row["crossings"]:
                raise DomainError(f"row {row} has inconsistent crossing count")
            moves.append(move)
            dimers.append(d)
        return cls(shape, levels, tuple(moves), tuple(dimers))


def _check_boxes(mu: Partition, nu: Partition):
    if mu.box != nu.box:
        raise DomainError(f"boxes differ: {mu.box} vs {nu.box}")


def enumerate_configurations(
    mu: Partition,
    nu: Partition,
    alpha,
    convention: str | None = None,
    budget: int | None = None,
) -> list[DimerConfiguration]:
    _check_boxes(mu, nu)
    box = mu.box
    alpha = as_composition(alpha, box)
    n, k = box.n, box.k
    num = alpha.size + mu.size - nu.size
    if num < 0 or num % n:
        return []
    start, target = partition_to_string(mu), partition_to_string(nu)
    rows = alpha.parts
    # suffix sums of row sizes for the weight/degree prune
    rest = [sum(rows[i:]) for i in range(k + 1)]
    out: list[DimerConfiguration] = []
    levels = [start]
    moves: list[RowMove] = []

    def feasible(u_size, i, crossings):
        m = u_size + rest[i] - nu.size
        return m >= 0 and m % n == 0 and crossings + m // n <= num // n

    def rec(i, u, u_size, crossings):
        if i == k:
            if u == target:
                out.append(
                    DimerConfiguration(
                        box,
                        tuple(levels),
                        tuple(moves),
                        tuple(dimer_positions(a, m, convention) for a, m in zip(levels, moves)),
                    )
                )
                if budget is not None and len(out) > budget:
                    raise BudgetExceeded(f"more than {budget} configurations", budget)
            return
        for w, move in row_successors(u, rows[i]):
            w_size = u_size + move.size - n * move.crossings
            if not feasible(w_size, i + 1, crossings + move.crossings):
                continue
            levels.append(w)
            moves.append(move)
            rec(i + 1, w, w_size, crossings + move.crossings)
            levels.pop()
            moves.pop()

    rec(0, start, mu.size, 0)
    out.sort(key=DimerConfiguration.sort_key)
    return out


def count_from(mu: Partition, alpha) -> dict[Partition, int]:
    """|Gamma_alpha(mu, nu)| for every nu at once, by row-transfer counting."""
    alpha = as_composition(alpha, mu.box)
    states: dict[BinaryString, int] = {partition_to_string(mu): 1}
    for r in alpha.parts:
        nxt: dict[BinaryString, int] = defaultdict(int)
        for u, c in states.items():
            for w, _ in row_successors(u, r):
                nxt[w] += c
        states = nxt
    return {string_to_partition(w): c for w, c in states.items()}


def count_configurations(mu: Partition, nu: Partition, alpha) -> int:
    _check_boxes(mu, nu)
    return count_from(mu, alpha).get(nu, 0)


@lru_cache(maxsize=None)
def crossing_profile_from(mu: Partition) -> dict[tuple[Partition, tuple[int, ...]], Counter]:
    """For every (nu, alpha): how many configurations have each crossing total."""
    box = mu.box
    states: dict = {(partition_to_string(mu), (), 0): 1}
    for _ in range(box.k):
        nxt: dict = defaultdict(int)
        for (u, prefix, d), c in states.items():
            for r in range(box.width + 1):
                for w, move in row_successors(u, r):
                    nxt[(w, prefix + (r,), d + move.crossings)] += c
        states = nxt
    out: dict = defaultdict(Counter)
    for (w, a, d), c in states.items():
        out[(string_to_partition(w), a)][d] += c
    return dict(out)


def enumerate_all(mu: Partition, nu: Partition) -> dict[Composition, int]:
    """Nonzero class sizes |Gamma_alpha(mu, nu)| over all compositions alpha."""
    _check_boxes(mu, nu)
    table = {
        Composition(a, mu.box): sum(hist.values())
        for (w, a), hist in crossing_profile_from(mu).items()
        if w == nu
    }
    return dict(sorted(table.items(), key=lambda kv: kv[0].parts))


def total_configurations(mu: Partition, nu: Partition) -> int:
    return sum(enumerate_all(mu, nu).values())


def to_crystal_vertex(c: DimerConfiguration, convention: str | None = None) -> tuple[BinaryString, ...]:
    """The KR crystal vertex recording each row's horizontal dimers, bottom row first.

    Crystal letters run opposite to boundary positions: a dimer at start
    column p becomes the letter at n - p (mod n).
    """
    convention = convention or DIMER_POSITION_CONVENTION
    offset = {"start": 0, "end": 1}[convention]
    n = c.shape.n
    return tuple(
        dimer_positions(u, m, convention).reflect(n + offset) for u, m in zip(c.levels, c.moves)
    )


@dataclass(frozen=True, slots=True)
class Lozenge:
    row: int
    column: int
    kind: str  # "vertical", "horizontal" or "empty"
    straddles_seam: bool


def to_lozenge_cells(c: DimerConfiguration) -> list[Lozenge]:
    """One cell per (row, column) of the period-n strip, bottom row first.

    Columns use the start convention regardless of how the configuration
    stores its dimer strings, so a horizontal cell in column n always belongs
    to a particle wrapping across the seam.
    """
    n = c.shape.n
    cells = []
    for row, (u, move) in enumerate(zip(c.levels, c.moves), start=1):
        dimers = set(dimer_positions(u, move, "start").ones)
        idle = {p for p, m in zip(u.ones, move.displacements) if m == 0}
        for col in range(1, n + 1):
            if col in dimers:
                kind = "horizontal"
            elif col in idle:
                kind = "vertical"
            else:
                kind = "empty"
            cells.append(Lozenge(row, col, kind, kind == "horizontal" and col == n))
    return cells


def configurations_to_json(configs: Iterable[DimerConfiguration]) -> str:
    return json.dumps([c.to_json() for c in configs], indent=1, sort_keys=True)


def crossing_histogram(configs: Iterable[DimerConfiguration]) -> Counter:
    return Counter(c.crossings for c in configs)
