"""Small quantum cohomology of Gr_k(C^n) in the Schubert basis.

Multiplication by h_r is the quantum Pieri rule, realised by the same
cylindric row moves that build dimer configurations: each move from b^kappa
contributes q^{crossings} sigma_{kappa'}.  Products of Schubert classes expand
sigma_lambda = det(h_{lambda_i - i + j}) and apply the Pieri steps term by term.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .combinatorics import (
    BoxShape,
    Composition,
    Partition,
    as_composition,
    degree,
    hook_content_product,
    partition_to_string,
    schur_polynomial,
    string_to_partition,
)
from .dimers import enumerate_all, row_successors
from .errors import DomainError, InvariantViolation

Term = tuple[Partition, int]


class RingElement:
    """Finite Z-combination of q^d sigma_lambda, lambda in the k x (n-k) box."""

    __slots__ = ("box", "terms")

    def __init__(self, box: BoxShape, terms: Mapping[Term, int] | None = None):
        self.box = box
        clean = {}
        for (lam, d), c in (terms or {}).items():
            if c:
                if lam.box != box:
                    raise DomainError(f"{lam} does not live in {box}")
                clean[(lam, d)] = c
        self.terms: dict[Term, int] = clean

    @classmethod
    def schubert(cls, lam: Partition, q_degree: int = 0, coefficient: int = 1) -> "RingElement":
        return cls(lam.box, {(lam, q_degree): coefficient})

    @classmethod
    def one(cls, box: BoxShape) -> "RingElement":
        return cls.schubert(Partition((), box))

    def __add__(self, other: "RingElement") -> "RingElement":
        acc = Counter(self.terms)
        acc.update(other.terms)
        return RingElement(self.box, acc)

    def __rmul__(self, c: int) -> "RingElement":
        return RingElement(self.box, {t: c * v for t, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = RingElement(self.box)
        for (lam, d), c in other.terms.items():
            out = out + c * shift_q(multiply_schubert(self, lam), d)
        return out

    def __eq__(self, other):
        return isinstance(other, RingElement) and self.box == other.box and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lam, d), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0].parts)):
            q = "" if d == 0 else ("q*" if d == 1 else f"q^{d}*")
            parts.append(f"{c}*{q}s[{lam}]")
        return " + ".join(parts)

    def coefficient(self, lam: Partition, d: int = 0) -> int:
        return self.terms.get((lam, d), 0)

    def by_partition(self) -> dict[Partition, dict[int, int]]:
        out: dict[Partition, dict[int, int]] = defaultdict(dict)
        for (lam, d), c in self.terms.items():
            out[lam][d] = c
        return dict(out)


def shift_q(elem: RingElement, d: int) -> RingElement:
    return RingElement(elem.box, {(lam, e + d): c for (lam, e), c in elem.terms.items()})


def pieri_multiply(elem: RingElement, r: int) -> RingElement:
    """elem * h_r.  h_0 = 1; h_r = 0 for r < 0 and for n-k < r < n."""
    box = elem.box
    if r == 0:
        return elem
    if r < 0 or r > box.width:
        return RingElement(box)
    acc: Counter = Counter()
    for (kappa, d0), c in elem.terms.items():
        for w, move in row_successors(partition_to_string(kappa), r):
            acc[(string_to_partition(w), d0 + move.crossings)] += c
    return RingElement(box, acc)


def _single_degree(elem: RingElement, what: str) -> dict[Partition, tuple[int, int]]:
    out = {}
    for lam, by_d in elem.by_partition().items():
        if len(by_d) != 1:
            raise InvariantViolation(f"{what}: sigma_{lam} appears at q-degrees {sorted(by_d)}")
        (d, c), = by_d.items()
        out[lam] = (d, c)
    return out


def quantum_kostka(mu: Partition, lam) -> dict[Partition, tuple[int, int]]:
    """{nu: (d, K_{nu/d/mu, lam})} from sigma_mu * h_{lam_1} * ... * h_{lam_k}."""
    return dict(_kostka_table(mu, as_composition(lam, mu.box)))


@lru_cache(maxsize=4096)
def _kostka_table(mu: Partition, lam: Composition) -> tuple:
    elem = RingElement.schubert(mu)
    for r in lam.parts:
        elem = pieri_multiply(elem, r)
    table = _single_degree(elem, f"sigma_{mu} * h_{lam}")
    for nu, (d, _) in table.items():
        if degree(lam.size, mu, nu) != d:
            raise InvariantViolation(f"K_{nu}/{d}/{mu},{lam}: degree disagrees with (|lam|+|mu|-|nu|)/n")
    return tuple(sorted(table.items(), key=lambda kv: kv[0].parts))


def _perm_sign(p: tuple[int, ...]) -> int:
    inv = sum(1 for a, b in itertools.combinations(range(len(p)), 2) if p[a] > p[b])
    return -1 if inv % 2 else 1


def multiply_schubert(elem: RingElement, lam: Partition) -> RingElement:
    """elem * sigma_lam through the Jacobi-Trudi determinant."""
    parts = lam.parts
    m = len(parts)
    out: Counter = Counter()
    for perm in itertools.permutations(range(m)):
        idx = [parts[i] - i + perm[i] for i in range(m)]
        if any(x < 0 or x > elem.box.width for x in idx):
            continue
        term = elem
        for r in idx:
            term = pieri_multiply(term, r)
            if not term.terms:
                break
        sign = _perm_sign(perm)
        for t, c in term.terms.items():
            out[t] += sign * c
    return RingElement(elem.box, out)


def schubert_product(mu: Partition, lam: Partition) -> dict[Partition, dict[int, int]]:
    """{nu: {d: C^{nu,d}_{lam,mu}}} for sigma_mu * sigma_lam."""
    return {nu: {d: c} for nu, d, c in _schubert_table(mu, lam)}


@lru_cache(maxsize=4096)
def _schubert_table(mu: Partition, lam: Partition) -> tuple:
    elem = multiply_schubert(RingElement.schubert(mu), lam)
    table = _single_degree(elem, f"sigma_{mu} * sigma_{lam}")
    for nu, (d, c) in table.items():
        if c < 0:
            raise InvariantViolation(f"negative Gromov-Witten invariant C^{nu},{d}_{lam},{mu} = {c}")
    return tuple((nu, d, c) for nu, (d, c) in sorted(table.items(), key=lambda kv: kv[0].parts))


def gromov_witten(lam: Partition, mu: Partition, nu: Partition, d: int) -> int:
    return schubert_product(mu, lam).get(nu, {}).get(d, 0)


def schur_coefficients_from_monomials(monomials: Mapping[tuple[int, ...], int], k: int) -> dict[tuple[int, ...], int]:
    """Invert the unitriangular Kostka transition on a symmetric polynomial.

    Repeatedly strip the dominant (lexicographically largest) partition
    exponent together with its Schur polynomial.
    """
    rest = Counter({a: c for a, c in monomials.items() if c})
    out = {}
    while rest:
        # the lexicographically largest exponent of a symmetric polynomial is a partition
        lead = max(rest)
        if list(lead) != sorted(lead, reverse=True):
            raise InvariantViolation(f"polynomial is not symmetric: {dict(rest)}")
        c = rest[lead]
        out[tuple(x for x in lead if x)] = c
        for a, v in schur_polynomial(lead, k).items():
            rest[a] -= c * v
            if rest[a] == 0:
                del rest[a]
    return out


@dataclass
class ToricExpansion:
    mu: Partition
    nu: Partition
    degree: int
    monomials: dict[tuple[int, ...], int] = field(default_factory=dict)
    schur_coeffs: dict[Partition, int] = field(default_factory=dict)

    def monomials_from_schur(self) -> dict[tuple[int, ...], int]:
        k = self.mu.box.k
        acc: Counter = Counter()
        for lam, c in self.schur_coeffs.items():
            for a, v in schur_polynomial(lam, k).items():
                acc[a] += c * v
        return {a: v for a, v in acc.items() if v}


def toric_schur(mu: Partition, nu: Partition, d: int) -> ToricExpansion:
    if d < 0:
        raise DomainError("degree must be nonnegative")
    box = mu.box
    size = box.n * d + nu.size - mu.size
    monomials = {a.parts: c for a, c in enumerate_all(mu, nu).items() if a.size == size}
    coeffs = {}
    for lam in box.partitions():
        if lam.size != size:
            continue
        c = gromov_witten(lam, mu, nu, d)
        if c:
            coeffs[lam] = c
    exp = ToricExpansion(mu, nu, d, dict(sorted(monomials.items())), coeffs)
    if exp.monomials_from_schur() != exp.monomials:
        raise InvariantViolation(f"toric Schur s_{nu}/{d}/{mu}: monomial and Schur expansions disagree")
    return exp


def composition_multiplicity(lam: Partition) -> int:
    """Number of k-part compositions rearranging lam: l!/prod m_i! * C(k, l)."""
    mult = math.prod(math.factorial(m) for m in lam.multiplicities().values())
    return math.factorial(lam.length) // mult * math.comb(lam.box.k, lam.length)


def sum_rule_kostka(mu: Partition, nu: Partition) -> int:
    total = 0
    for lam in mu.box.partitions():
        d = degree(lam.size, mu, nu)
        if d is None:
            continue
        entry = quantum_kostka(mu, lam).get(nu)
        if entry:
            total += entry[1] * composition_multiplicity(lam)
    return total


def sum_rule_gw(mu: Partition, nu: Partition, variables: str = "k") -> int:
    """sum_lam C^{nu,d}_{lam,mu} prod_s (m + c(s))/h(s) with m = k (default) or n."""
    box = mu.box
    m = {"k": box.k, "n": box.n}[variables]
    total = 0
    for lam in box.partitions():
        d = degree(lam.size, mu, nu)
        if d is None:
            continue
        c = gromov_witten(lam, mu, nu, d)
        if c:
            total += c * hook_content_product(lam, m)
    return total


def projective_product(a: int, b: int, n: int) -> dict[int, tuple[int, int]]:
    """sigma_a * sigma_b in qH*(P^{n-1}) straight from Z[q][e1]/<h_n - q>.

    For k = 1 the Chern class h_r equals e1^r, so sigma_r = e1^r and the only
    relation trades e1^n for q.  Returns {r: (d, coefficient)}.
    """
    poly = Counter({(a + b, 0): 1})  # (power of e1, power of q) -> coefficient
    while any(e >= n for e, _ in poly):
        reduced: Counter = Counter()
        for (e, d), c in poly.items():
            reduced[(e - n, d + 1) if e >= n else (e, d)] += c
        poly = reduced
    return {e: (d, c) for (e, d), c in poly.items() if c}


# ------------------------------------------------------------------ tables

TABLE_COLUMNS = ("n", "k", "mu", "nu", "lambda", "d", "value")


def kostka_rows(mu: Partition, lam) -> list[dict]:
    lam = as_composition(lam, mu.box)
    return [
        {"n": mu.box.n, "k": mu.box.k, "mu": str(mu), "nu": str(nu), "lambda": str(lam), "d": d, "value": c}
        for nu, (d, c) in quantum_kostka(mu, lam).items()
    ]


def gw_rows(mu: Partition, lam: Partition) -> list[dict]:
    return [
        {"n": mu.box.n, "k": mu.box.k, "mu": str(mu), "nu": str(nu), "lambda": str(lam), "d": d, "value": c}
        for nu, by_d in schubert_product(mu, lam).items()
        for d, c in by_d.items()
    ]


def toric_rows(exp: ToricExpansion) -> list[dict]:
    box = exp.mu.box
    rows = []
    for a, c in exp.monomials.items():
        rows.append({"n": box.n, "k": box.k, "mu": str(exp.mu), "nu": str(exp.nu),
                     "lambda": ",".join(map(str, a)), "d": exp.degree, "value": c, "basis": "monomial"})
    for lam, c in sorted(exp.schur_coeffs.items(), key=lambda kv: kv[0].parts):
        rows.append({"n": box.n, "k": box.k, "mu": str(exp.mu), "nu": str(exp.nu),
                     "lambda": str(lam), "d": exp.degree, "value": c, "basis": "schur"})
    return rows


def rows_to_tsv(rows: Iterable[dict]) -> str:
    rows = list(rows)
    cols = list(TABLE_COLUMNS) + (["basis"] if rows and "basis" in rows[0] else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(rows: Iterable[dict]) -> str:
    return json.dumps(list(rows), indent=1, sort_keys=True)
