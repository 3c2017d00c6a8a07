"""Exact verification suites: dimers vs crystals vs quantum cohomology.

Each suite returns a ``SuiteResult`` holding per-check tallies and the first
few counterexamples of every failing check.
"""
from __future__ import annotations

import itertools
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field

from .combinatorics import (
    BoxShape,
    Partition,
    as_composition,
    boundary_pair,
    degree,
    semistandard_tableaux,
    tableau_content,
    theta_profile,
)
from .crystals import (
    build_crystal_graph,
    column_highest,
    e,
    epsilon_by_iteration,
    f,
    omega,
    phi_by_iteration,
    r_matrix_table,
    satisfies_rmatrix_condition,
    satisfies_signature_condition,
    select_B_lambda,
    signature,
    tensor_vertices,
)
from .dimers import (
    count_from,
    crossing_profile_from,
    dimer_positions,
    enumerate_all,
    enumerate_configurations,
    to_crystal_vertex,
    total_configurations,
)
from .errors import InvariantViolation
from .oracles import lr_coefficient, rim_hook_product
from .qcohomology import (
    RingElement,
    projective_product,
    quantum_kostka,
    schubert_product,
    schur_coefficients_from_monomials,
    sum_rule_gw,
    sum_rule_kostka,
    toric_schur,
)

MAX_EXAMPLES = 5


@dataclass
class SuiteConfig:
    max_n: int = 6
    max_k: int = 3
    sample_ns: tuple[int, ...] = (7, 8, 9)
    samples_per_n: int = 12
    crystal_max_n: int = 5
    r_matrix_max_n: int = 6
    yang_baxter_max_n: int = 5
    associativity_samples: int = 40
    seed: int = 20141


@dataclass
class SuiteResult:
    number: int
    name: str
    counts: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    failures: dict[str, list[str]] = field(default_factory=lambda: defaultdict(list))
    failure_counts: dict[str, int] = field(default_factory=lambda: defaultdict(int))
    seconds: float = 0.0

    def check(self, ok: bool, label: str, message=None) -> bool:
        self.counts[label] += 1
        if not ok:
            self.failure_counts[label] += 1
            if len(self.failures[label]) < MAX_EXAMPLES:
                self.failures[label].append(message() if callable(message) else str(message))
        return ok

    @property
    def passed(self) -> bool:
        return not self.failure_counts

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        total = sum(self.counts.values())
        bad = ", ".join(f"{k}: {v} failed" for k, v in self.failure_counts.items())
        tail = f" [{bad}]" if bad else ""
        return f"[{status}] criterion {self.number}: {self.name} ({total} checks, {self.seconds:.1f}s){tail}"

    def details(self) -> str:
        lines = [self.line()]
        for label in self.counts:
            mark = "ok " if not self.failure_counts.get(label) else "BAD"
            lines.append(f"    {mark} {label}: {self.counts[label]} checks, {self.failure_counts.get(label, 0)} failed")
            for ex in self.failures.get(label, []):
                lines.append(f"        counterexample: {ex}")
        return "\n".join(lines)


def boxes(max_n: int, max_k: int):
    for n in range(3, max_n + 1):
        for k in range(0, min(max_k, n) + 1):
            yield BoxShape(k, n)


def _timed(fn):
    def wrapper(config: SuiteConfig | None = None) -> SuiteResult:
        start = time.perf_counter()
        res = fn(config or SuiteConfig())
        res.seconds = time.perf_counter() - start
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


N9K5 = dict(n=9, k=5, mu=(4, 4, 3, 2, 2), nu=(3, 3, 3, 1, 0), lam=(2, 4, 2, 3, 2))


@_timed
def suite_worked_instance(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(1, "worked instance n=9, k=5")
    box = BoxShape(N9K5["k"], N9K5["n"])
    mu, nu = Partition(N9K5["mu"], box), Partition(N9K5["nu"], box)
    lam = as_composition(N9K5["lam"], box)
    d = degree(lam.size, mu, nu)
    res.check(d == 2, "degree", f"degree={d}")
    configs = enumerate_configurations(mu, nu, lam)
    res.check(len(configs) > 0, "nonempty", "no configurations")
    for c in configs:
        res.check(c.crossings == 2, "crossings", lambda: f"{c.to_json()} has {c.crossings}")
        b = to_crystal_vertex(c)
        res.check(satisfies_signature_condition(b, mu, nu), "signature-membership", lambda: [str(x) for x in b])
        res.check(satisfies_rmatrix_condition(b, mu, nu), "rmatrix-identity", lambda: [str(x) for x in b])
    kostka = quantum_kostka(mu, lam).get(nu)
    res.check(kostka == (2, len(configs)), "kostka", f"K={kostka}, |Gamma|={len(configs)}")
    return res


@_timed
def suite_triple_equality(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(2, f"|Gamma| = |B| = K for n<={config.max_n}, k<={config.max_k}")
    for box in boxes(config.max_n, config.max_k):
        parts = box.partitions()
        for lam in parts:
            comp = as_composition(lam, box)
            for mu in parts:
                gamma = count_from(mu, comp)
                kostka = quantum_kostka(mu, comp)
                for nu in parts:
                    d = degree(lam.size, mu, nu)
                    g = gamma.get(nu, 0)
                    if d is None:
                        res.check(g == 0 and nu not in kostka, "divisibility", (box, lam, mu, nu))
                        continue
                    kd, kv = kostka.get(nu, (d, 0))
                    chosen = select_B_lambda(mu, nu, comp)
                    b = len(chosen)
                    if g:
                        image = [to_crystal_vertex(c) for c in enumerate_configurations(mu, nu, comp)]
                        res.check(len(set(image)) == len(image) and set(image) <= set(chosen), "image-in-B",
                                  lambda: f"n={box.n} k={box.k} lam={lam} mu={mu} nu={nu}")
                    res.check(
                        g == b == kv and kd == d,
                        "triple",
                        lambda: f"n={box.n} k={box.k} lam={lam} mu={mu} nu={nu}: Gamma={g} B={b} K={kv}@{kd}",
                    )
    return res


@_timed
def suite_row_laws(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(3, "permutation invariance, divisibility, crossing law")
    for box in boxes(config.max_n, config.max_k):
        parts = box.partitions()
        comps = [c.parts for c in box.compositions()]
        for mu in parts:
            prof = crossing_profile_from(mu)
            for (nu, a), hist in prof.items():
                d = degree(sum(a), mu, nu)
                res.check(d is not None, "divisibility", (box, mu, nu, a))
                res.check(set(hist) == {d}, "crossings", lambda: f"{box} mu={mu} nu={nu} a={a} crossings={dict(hist)} d={d}")
            for nu in parts:
                groups = defaultdict(set)
                for a in comps:
                    hist = prof.get((nu, a))
                    groups[tuple(sorted(a))].add(sum(hist.values()) if hist else 0)
                for key, vals in groups.items():
                    res.check(len(vals) == 1, "permutation", lambda: f"{box} mu={mu} nu={nu} parts={key} counts={vals}")
    rng = random.Random(config.seed)
    for n in config.sample_ns:
        for _ in range(config.samples_per_n):
            k = rng.randint(1, n - 1)
            box = BoxShape(k, n)
            mu = rng.choice(box.partitions())
            a = [rng.randint(0, box.width) for _ in range(k)]
            perms = sorted(set(itertools.permutations(a)))
            rng.shuffle(perms)
            tables = [count_from(mu, p) for p in perms[:6]]
            res.check(all(t == tables[0] for t in tables), "permutation-sampled", (n, k, mu, a))
            for nu, cnt in tables[0].items():
                res.check(degree(sum(a), mu, nu) is not None, "divisibility-sampled", (n, k, mu, nu, a))
            for nu in sorted(tables[0], key=lambda p: p.parts)[:2]:
                d = degree(sum(a), mu, nu)
                configs = enumerate_configurations(mu, nu, a, budget=20000)
                res.check(len(configs) == tables[0][nu], "count-sampled", (n, k, mu, nu, a))
                res.check(all(c.crossings == d for c in configs), "crossings-sampled", (n, k, mu, nu, a))
    return res


@_timed
def suite_boundary_laws(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(4, "minimal dimer number, theta positivity, column coverage")
    for box in boxes(config.max_n, config.max_k):
        n = box.n
        parts = box.partitions()
        for mu in parts:
            prof = crossing_profile_from(mu)
            for nu in parts:
                pair = boundary_pair(mu, nu)
                classes = {a: hist for (w, a), hist in prof.items() if w == nu}
                if not res.check(bool(classes), "nonempty-boundary", (box, mu, nu)):
                    continue
                smallest = min(sum(a) for a in classes)
                res.check(smallest == pair.min_dimers, "min-dimers",
                          lambda: f"{box} mu={mu} nu={nu}: brute {smallest}, formula {pair.min_dimers}")
                minimal = set().union(*(set(h) for a, h in classes.items() if sum(a) == smallest))
                res.check(minimal == {pair.d_min}, "min-crossings", (box, mu, nu, minimal, pair.d_min))
                for lam in parts:
                    d = degree(lam.size, mu, nu)
                    if d is None or d <= pair.d_min:
                        continue
                    nonempty = count_from(mu, lam).get(nu, 0) > 0
                    positive = theta_profile(pair, d).all_positive
                    res.check(nonempty == positive, "emptiness-law",
                              lambda: f"n={n} k={box.k} mu={mu} nu={nu} lam={lam} d={d} d_min={pair.d_min}: "
                                      f"nonempty={nonempty} theta>0={positive}")
                    res.check(not nonempty or positive, "theta-necessary", (box, mu, nu, lam))
                for a in classes:
                    d = degree(sum(a), mu, nu)
                    if d <= pair.d_min:
                        continue
                    for c in enumerate_configurations(mu, nu, a):
                        cols = set()
                        for u, m in zip(c.levels, c.moves):
                            cols.update(dimer_positions(u, m, "start").ones)
                        res.check(len(cols) == n, "column-coverage", lambda: c.to_json())
    return res


def _all_weights(max_n, max_k):
    seen = set()
    for box in boxes(max_n, max_k):
        for lam in box.partitions():
            w = lam.padded
            if lam.parts and (w, box.n) not in seen:
                seen.add((w, box.n))
                yield w, box.n


@_timed
def suite_crystals(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(5, "crystal axioms, R-matrix, Yang-Baxter, connectedness")
    for weights, n in _all_weights(config.crystal_max_n, config.max_k):
        for v in tensor_vertices(weights, n):
            sig = signature(v, n)
            for i in range(1, n + 1):
                w = f(v, i)
                res.check(w is None or e(w, i) == v, "e-inverts-f", (weights, n, v, i))
                u = e(v, i)
                res.check(u is None or f(u, i) == v, "f-inverts-e", (weights, n, v, i))
                res.check(sig.epsilon(i) == epsilon_by_iteration(v, i), "eps-two-routes", (weights, n, v, i))
                res.check(sig.varphi(i) == phi_by_iteration(v, i), "phi-two-routes", (weights, n, v, i))
        graph = build_crystal_graph(weights, n)
        res.check(graph.is_connected(), "connected", (weights, n))
    for n in range(3, config.r_matrix_max_n + 1):
        for r, s in itertools.product(range(1, n), repeat=2):
            table = r_matrix_table(r, s, n)
            back = r_matrix_table(s, r, n)
            res.check(len(set(table.values())) == len(table) == len(tensor_vertices((r, s), n)), "R-bijective", (r, s, n))
            res.check(all(back[y] == x for x, y in table.items()), "R-inverse", (r, s, n))
            if r == s:
                u = (column_highest(n, r), column_highest(n, s))
                res.check(table[u] == u, "R-anchor-fixed", (r, n))
            for x, y in table.items():
                res.check(signature(x, n) == signature(y, n), "R-signature", (r, s, n, x))
                res.check(table[omega(x)] == omega(y), "R-omega", (r, s, n, x))
                for i in range(1, n + 1):
                    for op in (f, e):
                        x2, y2 = op(x, i), op(y, i)
                        res.check((x2 is None and y2 is None) or (x2 is not None and table[x2] == y2),
                                  "R-commutes", (r, s, n, x, i, op.__name__))
    for n in range(3, config.yang_baxter_max_n + 1):
        for a, b, c in itertools.product(range(1, n), repeat=3):
            for v in tensor_vertices((a, b, c), n):
                lhs = _r12(_r23(_r12(v)))
                rhs = _r23(_r12(_r23(v)))
                res.check(lhs == rhs, "yang-baxter", (a, b, c, n, v))
    return res


def _r12(v):
    x, y = r_matrix_table(v[0].weight, v[1].weight, v[0].n)[(v[0], v[1])]
    return (x, y, v[2])


def _r23(v):
    x, y = r_matrix_table(v[1].weight, v[2].weight, v[0].n)[(v[1], v[2])]
    return (v[0], x, y)


@_timed
def suite_sum_rules(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(6, "sum rules: Kostka multinomial and GW hook-content (k variables)")
    for box in boxes(config.max_n, config.max_k):
        parts = box.partitions()
        for mu in parts:
            for nu in parts:
                total = total_configurations(mu, nu)
                sk = sum_rule_kostka(mu, nu)
                sg = sum_rule_gw(mu, nu)
                res.check(total == sk, "kostka-sum", lambda: f"{box} mu={mu} nu={nu}: |Gamma|={total} sum={sk}")
                res.check(total == sg, "gw-sum", lambda: f"{box} mu={mu} nu={nu}: |Gamma|={total} sum={sg}")
    box = BoxShape(1, 3)
    mu, nu = Partition((2,), box), Partition((), box)
    values = (total_configurations(mu, nu), sum_rule_kostka(mu, nu), sum_rule_gw(mu, nu), sum_rule_gw(mu, nu, "n"))
    res.check(values == (1, 1, 1, 3), "oracle-case", f"(|Gamma|, Kostka sum, GW k-sum, GW n-sum) = {values}")
    return res


def skew_monomials(mu: Partition, nu: Partition) -> dict[tuple[int, ...], int]:
    """Skew Schur s_{nu/mu}(x_1..x_k) by direct skew-SSYT enumeration."""
    k = mu.box.k
    out = defaultdict(int)
    for t in semistandard_tableaux(nu.parts, k, inner=mu.parts):
        out[tableau_content(t, k)] += 1
    return dict(out)


@_timed
def suite_toric(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(7, "toric Schur: monomial side equals GW Schur side; d=0 is skew Schur")
    for box in boxes(config.max_n, config.max_k):
        n, k = box.n, box.k
        parts = box.partitions()
        for mu in parts:
            for nu in parts:
                d = 0
                while n * d + nu.size - mu.size <= k * box.width:
                    size = n * d + nu.size - mu.size
                    if size >= 0:
                        try:
                            exp = toric_schur(mu, nu, d)
                        except InvariantViolation as err:
                            res.check(False, "expansions-agree", str(err))
                            d += 1
                            continue
                        res.check(True, "expansions-agree")
                        extracted = schur_coefficients_from_monomials(exp.monomials, k)
                        expected = {lam.parts: c for lam, c in exp.schur_coeffs.items()}
                        res.check(extracted == expected, "kostka-transition",
                                  lambda: f"{box} mu={mu} nu={nu} d={d}: {extracted} vs {expected}")
                        if d == 0:
                            for lam in parts:
                                if lam.size != size:
                                    continue
                                lr = lr_coefficient(lam.parts, mu.parts, nu.parts)
                                got = exp.schur_coeffs.get(lam, 0)
                                res.check(got == lr, "lr-oracle", lambda: f"{box} lam={lam} mu={mu} nu={nu}: {got} vs {lr}")
                            res.check(exp.monomials == skew_monomials(mu, nu), "skew-schur", (box, mu, nu))
                    d += 1
    return res


@_timed
def suite_ring(config: SuiteConfig) -> SuiteResult:
    res = SuiteResult(8, "ring sanity: P^2, Gr(2,4), commutativity, associativity, rim-hook oracle")
    p2 = BoxShape(1, 3)
    s = lambda *p: Partition(p, p2)  # noqa: E731
    res.check(schubert_product(s(2), s(2)) == {s(1): {1: 1}}, "P2 s2*s2=q s1", schubert_product(s(2), s(2)))
    res.check(schubert_product(s(2), s(1)) == {s(): {1: 1}}, "P2 s2*s1=q", schubert_product(s(2), s(1)))
    res.check(projective_product(2, 2, 3) == {1: (1, 1)}, "P2 presentation s2*s2", projective_product(2, 2, 3))
    res.check(projective_product(2, 1, 3) == {0: (1, 1)}, "P2 presentation s2*s1", projective_product(2, 1, 3))
    for n in range(3, config.max_n + 1):
        box = BoxShape(1, n)
        for a, b in itertools.product(range(n), repeat=2):
            pres = {Partition((r,), box): {d: c} for r, (d, c) in projective_product(a, b, n).items()}
            got = schubert_product(Partition((a,), box), Partition((b,), box))
            res.check(got == pres, "k=1 presentation", (n, a, b, got, pres))
    gr24 = BoxShape(2, 4)
    for lam, mu in itertools.product(gr24.partitions(), repeat=2):
        prod = schubert_product(mu, lam)
        for nu in gr24.partitions():
            if nu.size == lam.size + mu.size:
                classical = prod.get(nu, {}).get(0, 0)
                res.check(classical == lr_coefficient(lam.parts, mu.parts, nu.parts), "Gr(2,4) classical", (lam, mu, nu))
    rng = random.Random(config.seed)
    for box in boxes(config.max_n, config.max_k):
        parts = box.partitions()
        for a, b in itertools.combinations_with_replacement(parts, 2):
            prod = schubert_product(a, b)
            res.check(prod == schubert_product(b, a), "commutative", (box, a, b))
            oracle = rim_hook_product(a.parts, b.parts, box.k, box.n)
            res.check({nu.parts: v for nu, v in prod.items()} == oracle, "rim-hook oracle",
                      lambda: f"{box} {a} * {b}: {prod} vs {oracle}")
        for _ in range(config.associativity_samples if len(parts) > 1 else 1):
            a, b, c = (RingElement.schubert(rng.choice(parts)) for _ in range(3))
            res.check((a * b) * c == a * (b * c), "associative", lambda: (box, a, b, c))
    return res


SUITES = (
    suite_worked_instance,
    suite_triple_equality,
    suite_row_laws,
    suite_boundary_laws,
    suite_crystals,
    suite_sum_rules,
    suite_toric,
    suite_ring,
)


def run_all(config: SuiteConfig | None = None, only=None) -> list[SuiteResult]:
    config = config or SuiteConfig()
    return [suite(config) for j, suite in enumerate(SUITES, start=1) if not only or j in only]


def report(results: list[SuiteResult], verbose: bool = False) -> str:
    body = [r.details() if verbose or not r.passed else r.line() for r in results]
    ok = sum(r.passed for r in results)
    body.append(f"{ok}/{len(results)} criteria passed")
    return "\n".join(body) + "\n"
