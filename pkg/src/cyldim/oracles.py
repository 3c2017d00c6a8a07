"""Brute-force oracles that share no code path with the row-move machinery."""
from __future__ import annotations

from .combinatorics import _parts, semistandard_tableaux, tableau_content


def is_lattice_word(word) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def lr_coefficient(lam, mu, nu) -> int:
    """c^nu_{lam,mu}: LR tableaux of shape nu/mu and content lam.

    The reverse reading word (rows top to bottom, each right to left) of the
    skew tableau must be a lattice word.
    """
    lam, mu, nu = _parts(lam), _parts(mu), _parts(nu)
    if sum(nu) != sum(lam) + sum(mu) or len(mu) > len(nu):
        return 0
    if any(a > b for a, b in zip(mu, nu)):
        return 0
    m = len(lam)
    count = 0
    for t in semistandard_tableaux(nu, m, inner=mu):
        if tableau_content(t, m) != lam:
            continue
        if is_lattice_word([v for row in t for v in reversed(row)]):
            count += 1
    return count


def _partitions_bounded(total: int, rows: int, width: int):
    if total == 0:
        yield ()
        return
    if rows == 0:
        return
    for first in range(min(total, width), 0, -1):
        for rest in _partitions_bounded(total - first, rows - 1, first):
            yield (first,) + rest


def rim_hook_reduce(nu, k: int, n: int):
    """Reduce sigma_nu (at most k rows, any width) into the k x (n-k) box.

    Works on k beads at nu_i + k - i: removing an n-rim hook slides one bead
    down by n and costs the sign (-1)^(k - height).  Returns (sign, core, d) or
    None when the class vanishes.
    """
    nu = _parts(nu)
    if len(nu) > k:
        return None
    beads = sorted((nu + (0,) * (k - len(nu)))[i] + k - 1 - i for i in range(k))
    sign, d = 1, 0
    while beads and beads[-1] >= n:
        top = beads.pop()
        low = top - n
        if low in beads:
            return None
        between = sum(1 for b in beads if low < b < top)
        sign *= (-1) ** (k - 1 - between)
        d += 1
        beads = sorted(beads + [low])
    core = tuple(b - i for i, b in enumerate(sorted(beads)))[::-1]
    return sign, tuple(x for x in core if x), d


def rim_hook_product(lam, mu, k: int, n: int) -> dict[tuple[int, ...], dict[int, int]]:
    """sigma_lam * sigma_mu in QH*(Gr_k(C^n)) from classical LR plus rim-hook reduction."""
    lam, mu = _parts(lam), _parts(mu)
    total = sum(lam) + sum(mu)
    width = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for nu in _partitions_bounded(total, k, width):
        c = lr_coefficient(lam, mu, nu)
        if not c:
            continue
        red = rim_hook_reduce(nu, k, n)
        if red is None:
            continue
        sign, core, d = red
        by_d = out.setdefault(core, {})
        by_d[d] = by_d.get(d, 0) + sign * c
    return {nu: {d: c for d, c in by_d.items() if c} for nu, by_d in out.items() if any(by_d.values())}
