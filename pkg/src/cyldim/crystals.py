"""Single-column Kirillov-Reshetikhin crystals B_r of affine type A_{n-1}^{(1)}.

Vertices of B_r are weight-r binary strings.  Colors are 1..n; f_i moves a
one-letter from position i to i+1, with color n moving it from n to 1.
Tensor products follow the rule

    f_i(b1 (x) b2) = f_i(b1) (x) b2   if eps_i(b1) >= phi_i(b2), else b1 (x) f_i(b2)
    e_i(b1 (x) b2) = e_i(b1) (x) b2   if eps_i(b1) >  phi_i(b2), else b1 (x) e_i(b2)

and a k-fold product is read as b1 (x) (b2 (x) (... (x) bk)).
"""
from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .combinatorics import (
    BinaryString,
    Partition,
    as_composition,
    boundary_pair,
    conjugate,
    degree,
    partition_to_string,
    theta_profile,
)
from .errors import BudgetExceeded, DomainError, InvariantViolation

TensorVertex = tuple[BinaryString, ...]

DEFAULT_GRAPH_BUDGET = 200_000


def column_highest(n: int, r: int) -> BinaryString:
    return BinaryString.from_positions(n, range(1, r + 1))


def phi_single(b: BinaryString, i: int) -> int:
    return int(b[i] == 1 and b[i + 1] == 0)


def eps_single(b: BinaryString, i: int) -> int:
    return int(b[i] == 0 and b[i + 1] == 1)


def f_single(b: BinaryString, i: int) -> BinaryString | None:
    if not phi_single(b, i):
        return None
    src, dst = (i - 1) % b.n, i % b.n
    return BinaryString(b.n, b.mask ^ (1 << src) ^ (1 << dst))


def e_single(b: BinaryString, i: int) -> BinaryString | None:
    if not eps_single(b, i):
        return None
    src, dst = (i - 1) % b.n, i % b.n
    return BinaryString(b.n, b.mask ^ (1 << src) ^ (1 << dst))


def tensor_pair(left: tuple[int, int], right: tuple[int, int]) -> tuple[int, int]:
    """(eps, phi) of x (x) y from (eps, phi) of x and of y."""
    ex, px = left
    ey, py = right
    return ey + max(0, ex - py), px + max(0, py - ex)


def _suffix_data(b: TensorVertex, i: int) -> list[tuple[int, int]]:
    suf = [(0, 0)] * (len(b) + 1)
    for j in range(len(b) - 1, -1, -1):
        suf[j] = tensor_pair((eps_single(b[j], i), phi_single(b[j], i)), suf[j + 1])
    return suf


def f(b: TensorVertex, i: int) -> TensorVertex | None:
    suf = _suffix_data(b, i)
    for j, x in enumerate(b):
        if eps_single(x, i) >= suf[j + 1][1]:
            y = f_single(x, i)
            return None if y is None else b[:j] + (y,) + b[j + 1:]
    return None


def e(b: TensorVertex, i: int) -> TensorVertex | None:
    suf = _suffix_data(b, i)
    for j, x in enumerate(b):
        if eps_single(x, i) > suf[j + 1][1]:
            y = e_single(x, i)
            return None if y is None else b[:j] + (y,) + b[j + 1:]
    return None


@dataclass(frozen=True, slots=True)
class SignatureVector:
    eps: tuple[int, ...]
    phi: tuple[int, ...]

    def epsilon(self, i: int) -> int:
        return self.eps[(i - 1) % len(self.eps)]

    def varphi(self, i: int) -> int:
        return self.phi[(i - 1) % len(self.phi)]


def signature(b: TensorVertex, n: int | None = None) -> SignatureVector:
    n = n if n is not None else b[0].n
    eps, phi = [], []
    for i in range(1, n + 1):
        e_i, p_i = _suffix_data(b, i)[0]
        eps.append(e_i)
        phi.append(p_i)
    return SignatureVector(tuple(eps), tuple(phi))


def epsilon_by_iteration(b: TensorVertex, i: int) -> int:
    p = 0
    while (b := e(b, i)) is not None:
        p += 1
    return p


def phi_by_iteration(b: TensorVertex, i: int) -> int:
    p = 0
    while (b := f(b, i)) is not None:
        p += 1
    return p


def omega(b: TensorVertex, shift: int = 1) -> TensorVertex:
    """Dynkin rotation: every letter moves from position p to p + shift."""
    return tuple(x.rotate(shift) for x in b)


def tensor_vertices(weights: Sequence[int], n: int) -> list[TensorVertex]:
    factors = [
        [BinaryString.from_positions(n, c) for c in itertools.combinations(range(1, n + 1), r)]
        for r in weights
    ]
    return [tuple(v) for v in itertools.product(*factors)]


def vertex_key(b: TensorVertex) -> str:
    return "".join(str(x) for x in b)


# ---------------------------------------------------------------- R-matrix

_R_CACHE: dict[tuple[int, int, int], dict[TensorVertex, TensorVertex]] = {}


def _extend(anchor, image, n, size):
    mapping = {anchor: image}
    queue = deque([anchor])
    while queue:
        x = queue.popleft()
        y = mapping[x]
        for i in range(1, n + 1):
            for op in (f, e):
                x2, y2 = op(x, i), op(y, i)
                if (x2 is None) != (y2 is None):
                    return None
                if x2 is None:
                    continue
                seen = mapping.get(x2)
                if seen is None:
                    mapping[x2] = y2
                    queue.append(x2)
                elif seen != y2:
                    return None
    if len(mapping) != size or len(set(mapping.values())) != size:
        return None
    return mapping


def r_matrix_table(r: int, s: int, n: int) -> dict[TensorVertex, TensorVertex]:
    """The crystal isomorphism B_r (x) B_s -> B_s (x) B_r as a lookup table.

    The anchor u_r (x) u_s is sent to every target vertex with the same
    signature in turn; a candidate survives if edge-by-edge transport along
    all colors extends it to a total bijection.  Exactly one must survive.
    """
    key = (r, s, n)
    if key in _R_CACHE:
        return _R_CACHE[key]
    source = tensor_vertices((r, s), n)
    target = tensor_vertices((s, r), n)
    anchor = (column_highest(n, r), column_highest(n, s))
    sig = signature(anchor, n)
    found = []
    for cand in target:
        if signature(cand, n) != sig:
            continue
        mapping = _extend(anchor, cand, n, len(source))
        if mapping is not None:
            found.append(mapping)
    if len(found) != 1:
        raise InvariantViolation(
            f"R-matrix B_{r} x B_{s} (n={n}): {len(found)} candidate isomorphisms extend"
        )
    _R_CACHE[key] = found[0]
    return found[0]


def combinatorial_R(left: BinaryString, right: BinaryString) -> tuple[BinaryString, BinaryString]:
    if left.n != right.n:
        raise DomainError("factors live on different circumferences")
    return r_matrix_table(left.weight, right.weight, left.n)[(left, right)]


def R_lambda(front: BinaryString, b: TensorVertex) -> tuple[TensorVertex, BinaryString]:
    """Thread ``front`` rightward through every factor of ``b``."""
    out = []
    cur = front
    for x in b:
        y, cur = combinatorial_R(cur, x)
        out.append(y)
    return tuple(out), cur


# ------------------------------------------------------ boundary conditions

def boundary_signature(mu: Partition, nu: Partition, d: int) -> SignatureVector:
    """The signature phi_i = b^mu_{n-i} Theta_i, eps_i = b^nu_{n-i} Theta_{i+1}."""
    n = mu.box.n
    prof = theta_profile(boundary_pair(mu, nu), d)
    bm, bn = partition_to_string(mu), partition_to_string(nu)
    phi = tuple(bm[n - i] * prof.flag(i) for i in range(1, n + 1))
    eps = tuple(bn[n - i] * prof.flag(i + 1) for i in range(1, n + 1))
    return SignatureVector(eps, phi)


def satisfies_signature_condition(b: TensorVertex, mu: Partition, nu: Partition) -> bool:
    d = degree(sum(x.weight for x in b), mu, nu)
    if d is None:
        return False
    return signature(b, mu.box.n) == boundary_signature(mu, nu, d)


def satisfies_rmatrix_condition(b: TensorVertex, mu: Partition, nu: Partition) -> bool:
    """R_lambda(b^{mu'} (x) Omega(b)) == b (x) b^{nu'}."""
    front = partition_to_string(conjugate(mu))
    back = partition_to_string(conjugate(nu))
    return R_lambda(front, omega(b)) == (b, back)


@lru_cache(maxsize=256)
def signature_buckets(weights: tuple[int, ...], n: int) -> dict[SignatureVector, tuple[TensorVertex, ...]]:
    buckets: dict[SignatureVector, list[TensorVertex]] = {}
    for b in tensor_vertices(weights, n):
        buckets.setdefault(signature(b, n), []).append(b)
    return {s: tuple(v) for s, v in buckets.items()}


def select_B_lambda(mu: Partition, nu: Partition, lam, condition: str = "both") -> list[TensorVertex]:
    """Vertices of B_lambda cut out by the boundary data (mu, nu).

    ``condition`` is ``"signature"`` (the Theta-masked signature match),
    ``"rmatrix"`` (the R-matrix fixed-point identity) or ``"both"``.  The
    signature match alone is necessary but can over-count; see the README.
    """
    box = mu.box
    lam = as_composition(lam, box)
    n = box.n
    d = degree(lam.size, mu, nu)
    if d is None:
        return []
    weights = lam.parts
    if condition == "rmatrix":
        pool = tensor_vertices(weights, n)
    else:
        pool = signature_buckets(weights, n).get(boundary_signature(mu, nu, d), ())
    if condition == "signature":
        return sorted(pool, key=vertex_key)
    if condition not in ("rmatrix", "both"):
        raise ValueError(f"unknown condition {condition!r}")
    return sorted((b for b in pool if satisfies_rmatrix_condition(b, mu, nu)), key=vertex_key)


# ------------------------------------------------------------ whole graphs

@dataclass
class CrystalGraph:
    n: int
    weights: tuple[int, ...]
    vertices: list[TensorVertex]
    edges: dict[tuple[TensorVertex, int], TensorVertex]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[TensorVertex, list[TensorVertex]] = {v: [] for v in self.vertices}
        for (v, _), w in self.edges.items():
            adj[v].append(w)
            adj[w].append(v)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_dot(self) -> str:
        index = {v: j for j, v in enumerate(self.vertices)}
        lines = [f'digraph "B_{",".join(map(str, self.weights))}" {{']
        for v in self.vertices:
            label = " x ".join(str(x) for x in v)
            lines.append(f'  v{index[v]} [label="{label}"];')
        for (v, i), w in sorted(self.edges.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])):
            lines.append(f'  v{index[v]} -> v{index[w]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        index = {v: j for j, v in enumerate(self.vertices)}
        payload = {
            "n": self.n,
            "weights": list(self.weights),
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "edges": [
                {"source": index[v], "target": index[w], "color": i}
                for (v, i), w in sorted(self.edges.items(), key=lambda kv: (index[kv[0][0]], kv[0][1]))
            ],
        }
        return json.dumps(payload, indent=1)


def build_crystal_graph(weights, n: int, budget: int = DEFAULT_GRAPH_BUDGET) -> CrystalGraph:
    weights = tuple(weights.parts if hasattr(weights, "parts") else weights)
    size = math.prod(math.comb(n, r) for r in weights)
    if size > budget:
        raise BudgetExceeded(f"B_{weights} has {size} vertices, budget is {budget}", size)
    vertices = sorted(tensor_vertices(weights, n), key=vertex_key)
    edges = {}
    for v in vertices:
        for i in range(1, n + 1):
            w = f(v, i)
            if w is not None:
                edges[(v, i)] = w
    return CrystalGraph(n, weights, vertices, edges)
