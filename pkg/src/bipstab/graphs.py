"""Independence polynomials: brute-force oracle and closed forms for K_{m,n}.

The independence polynomial of a graph G is

    i(G, x) = sum_k  i_k(G) * x^k,

where i_k(G) counts the independent sets of size k (i_0 = 1 for the empty
set).  For the complete bipartite graph K_{m,n} an independent set lives
entirely inside one part, so

    i(K_{m,n}, x) = (1+x)^n + (1+x)^m - 1.

Substituting y = 1 + x turns this into the trinomial y^n + y^m - 1, which is
what the root solver actually works with.  All coefficient arithmetic here is
exact (Python integers), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import InvalidInputError, SizeLimitError

ENUMERATION_VERTEX_LIMIT = 24

# 16-bit popcount lookup, used to bucket enumerated subsets by size.
_POPCNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
_CHUNK = 1 << 20


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with exact integer coefficients, index = degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def __call__(self, z):
        """Horner evaluation; exact for int arguments, numeric otherwise."""
        acc = 0 if isinstance(z, int) else type(z)(0)
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        ))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coefficients))

    def times_power(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        return IntPolynomial((0,) * k + self.coefficients)

    def derivative(self) -> "IntPolynomial":
        if self.degree == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def shift_argument(self, c: int) -> "IntPolynomial":
        """Exact composition p(x + c); Taylor shift with integer binomials."""
        out = [0] * (self.degree + 1)
        for i, ai in enumerate(self.coefficients):
            if ai == 0:
                continue
            # (x + c)^i expanded exactly
            for j in range(i + 1):
                out[j] += ai * comb(i, j) * c ** (i - j)
        return IntPolynomial(tuple(out))

    @staticmethod
    def monomial(degree: int, coefficient: int = 1) -> "IntPolynomial":
        return IntPolynomial((0,) * degree + (coefficient,))


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(f"edge {e} has endpoint outside 0..{self.vertex_count - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        return SimpleGraph(vertex_count, frozenset((int(u), int(v)) for u, v in edges))

    @staticmethod
    def complete_bipartite(m: int, n: int) -> "SimpleGraph":
        if m < 1 or n < 1:
            raise InvalidInputError("both parts of K_{m,n} must be non-empty")
        edges = frozenset((i, m + j) for i in range(m) for j in range(n))
        return SimpleGraph(m + n, edges)

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks


@dataclass(frozen=True)
class TrinomialSpec:
    """The trinomial y^n + y^m - 1 (exponents stored with m <= n).

    This is i(K_{m,n}, x) rewritten in the shifted coordinate y = 1 + x; a
    root y corresponds to the independence root x = y - 1.  When n == m the
    trinomial degenerates to 2*y^m - 1.
    """

    n: int
    m: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidInputError("trinomial exponents must be positive")
        if self.m > self.n:
            raise InvalidInputError("trinomial stored with m <= n")

    @property
    def is_balanced(self) -> bool:
        """True for the equal-exponent degenerate form 2*y^m - 1."""
        return self.n == self.m

    @property
    def degree(self) -> int:
        return self.n


def independence_polynomial_bruteforce(g: SimpleGraph) -> IntPolynomial:
    """Count independent sets of every size by exhaustive subset enumeration.

    Vectorized bitmask sweep over all 2^n subsets, chunked to bound memory.
    Intended as the ground-truth oracle for small graphs; refuses graphs with
    more than ENUMERATION_VERTEX_LIMIT vertices.
    """
    n = g.vertex_count
    if n > ENUMERATION_VERTEX_LIMIT:
        raise SizeLimitError(
            f"brute-force enumeration capped at {ENUMERATION_VERTEX_LIMIT} vertices, got {n}"
        )
    if n == 0:
        return IntPolynomial((1,))
    adj = g.adjacency_masks()
    counts = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        subsets = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        dependent = np.zeros(subsets.shape, dtype=bool)
        for v in range(n):
            if adj[v]:
                in_set = ((subsets >> v) & 1).astype(bool)
                dependent |= in_set & ((subsets & adj[v]) != 0)
        independent = subsets[~dependent]
        sizes = _POPCNT16[independent & 0xFFFF] + _POPCNT16[(independent >> 16) & 0xFFFF]
        counts += np.bincount(sizes, minlength=n + 1)
    return IntPolynomial(tuple(int(c) for c in counts))


def independence_polynomial_bipartite(m: int, n: int) -> IntPolynomial:
    """Exact expansion of (1+x)^n + (1+x)^m - 1, the closed form for K_{m,n}."""
    if m < 1 or n < 1:
        raise InvalidInputError("part sizes must be positive")
    deg = max(m, n)
    coeffs = [comb(n, k) + comb(m, k) for k in range(deg + 1)]
    coeffs[0] -= 1
    return IntPolynomial(tuple(coeffs))


def phi_trinomial(m: int, n: int) -> TrinomialSpec:
    """The y = 1 + x transform of i(K_{m,n}, x): the trinomial y^n + y^m - 1."""
    if m < 1 or n < 1:
        raise InvalidInputError("part sizes must be positive")
    return TrinomialSpec(n=max(m, n), m=min(m, n))


def load_edge_list(stream: TextIO) -> SimpleGraph:
    """Parse the edge-list format: `p <vertex_count>` header, then `<u> <v>` lines.

    Lines starting with `#` and blank lines are ignored.  The explicit vertex
    count makes isolated vertices representable.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if vertex_count is not None:
                raise InvalidInputError(f"line {lineno}: duplicate header")
            if len(parts) != 2:
                raise InvalidInputError(f"line {lineno}: header must be 'p <vertex_count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise InvalidInputError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            continue
        if vertex_count is None:
            raise InvalidInputError(f"line {lineno}: edge before 'p <vertex_count>' header")
        if len(parts) != 2:
            raise InvalidInputError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidInputError(f"line {lineno}: non-integer endpoint") from None
        edges.append((u, v))
    if vertex_count is None:
        raise InvalidInputError("missing 'p <vertex_count>' header")
    return SimpleGraph.from_edges(vertex_count, edges)


def load_edge_list_file(path) -> SimpleGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return load_edge_list(fh)
