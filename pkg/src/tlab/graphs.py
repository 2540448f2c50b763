"""Bit-packed simple graphs, graph6 I/O, degree statistics, and generators.

Neighbor rows are Python ints used as bitmasks, so neighborhood algebra is
word operations.  Everything here is immutable and pure; graph6 I/O covers
the short form only (n <= 62), larger graphs travel as edge-list text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def bits(mask: int):
    """Yield the set bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    ``adj[v]`` is the bitmask of neighbors of v.  Construction validates
    symmetry and irreflexivity, so downstream code may assume both.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor out of range in row {v}")
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"asymmetric edge ({v},{u})")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]
    delta: int
    edge_count: int
    avg_degree: Fraction


def build_graph(n: int, edges) -> Graph:
    """Graph with exactly the given edges; duplicates collapse, loops rejected."""
    if n < 0:
        raise ValueError("negative vertex count")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"endpoint out of range in ({u},{v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise ValueError("minimum degree undefined on the empty graph")
    degrees = tuple(row.bit_count() for row in g.adj)
    m = sum(degrees) // 2
    return DegreeStats(degrees, min(degrees), m, Fraction(2 * m, g.n))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full & ~row & ~(1 << v)) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` plus the new-to-old label mapping.

    New labels follow ascending original order: new vertex i is
    ``mapping[i]`` in ``g``.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows)), tuple(keep)


# ---------------------------------------------------------------------------
# graph6 (short form)

def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line.

    Layout: one size byte 63+n, then the upper triangle of the adjacency
    matrix in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian in
    6-bit chunks, each chunk offset by 63.
    """
    s = line.rstrip("\n")
    if not s:
        raise Graph6Error("empty line", 0)
    data = s.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside graph6 range [63,126]", off)
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"size byte encodes n={n} > {GRAPH6_MAX_N}", 0)
    need = 1 + (n * (n - 1) // 2 + 5) // 6
    if len(data) < need:
        raise Graph6Error(f"truncated: need {need} bytes, got {len(data)}", len(data))
    if len(data) > need:
        raise Graph6Error("trailing garbage after graph data", need)
    rows = [0] * n
    t = 0
    for col in range(1, n):
        for rowi in range(col):
            chunk = data[1 + t // 6] - 63
            if (chunk >> (5 - t % 6)) & 1:
                rows[rowi] |= 1 << col
                rows[col] |= 1 << rowi
            t += 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Canonical short-form graph6 line (no trailing newline)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form supports n <= {GRAPH6_MAX_N}; use edge-list text")
    out = [g.n + 63]
    chunk = 0
    filled = 0
    for col in range(1, g.n):
        for rowi in range(col):
            chunk = (chunk << 1) | ((g.adj[rowi] >> col) & 1)
            filled += 1
            if filled == 6:
                out.append(chunk + 63)
                chunk = 0
                filled = 0
    if filled:
        out.append((chunk << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list text ("n m" header, then one "u v" line per edge)

def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge-list text needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"expected {m} edges, found {(len(tokens) - 2) // 2}")
    pairs = [(int(tokens[2 + 2 * i]), int(tokens[3 + 2 * i])) for i in range(m)]
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators

def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _join_parts(parts: list[list[int]], n: int, internal_clique: bool) -> Graph:
    edges = []
    for i, p in enumerate(parts):
        if internal_clique:
            edges.extend((u, v) for ai, u in enumerate(p) for v in p[ai + 1:])
        for q in parts[i + 1:]:
            edges.extend((u, v) for u in p for v in q)
    return build_graph(n, edges)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph with part sizes as equal as possible."""
    if not 1 <= r <= n:
        raise ValueError("turan needs 1 <= r <= n")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return _join_parts(parts, n, internal_clique=False)


def bipartite_minus_matching(n: int, m: int) -> Graph:
    """K_{n/2,n/2} with an m-edge matching removed (matched pairs (i, n/2+i))."""
    if n % 2 or n <= 0:
        raise ValueError("bipartite_minus_matching needs even positive n")
    half = n // 2
    if not 0 <= m <= half:
        raise ValueError("matching size must be between 0 and n/2")
    edges = [(u, half + v) for u in range(half) for v in range(half) if not (u == v and u < m)]
    return build_graph(n, edges)


def _cycle_blowup(lengths: list[int]) -> Graph:
    """Blow up a cycle into consecutive groups of the given sizes.

    Each group is internally complete and completely joined to the cyclically
    adjacent groups.
    """
    k = len(lengths)
    parts, start = [], 0
    for s in lengths:
        parts.append(list(range(start, start + s)))
        start += s
    edges = []
    for p in parts:
        edges.extend((u, v) for ai, u in enumerate(p) for v in p[ai + 1:])
    for i in range(k):
        edges.extend((u, v) for u in parts[i] for v in parts[(i + 1) % k])
    return build_graph(start, edges)


def c5_blowup(t: int) -> Graph:
    """Five-cycle with two non-adjacent vertices replaced by K_t blobs.

    Cyclic group sizes (1, t, 1, 1, t): vertex 0 sits between the two blobs.
    """
    if t < 1:
        raise ValueError("blob size must be positive")
    return _cycle_blowup([1, t, 1, 1, t])


def c7_blowup(t: int) -> Graph:
    """Seven-cycle with three pairwise non-adjacent vertices blown up to K_t.

    Blobs sit at cyclic positions 0, 2, 5; any other pairwise non-adjacent
    triple gives an isomorphic graph, this labeling is fixed for
    reproducibility.
    """
    if t < 1:
        raise ValueError("blob size must be positive")
    return _cycle_blowup([t, 1, t, 1, 1, t, 1])


def clique_chain(sizes) -> Graph:
    """Disjoint cliques plus one edge joining vertex 0 of consecutive cliques."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("clique sizes must be positive")
    edges = []
    starts, start = [], 0
    for s in sizes:
        starts.append(start)
        edges.extend((start + u, start + v) for u in range(s) for v in range(u + 1, s))
        start += s
    for a, b in zip(starts, starts[1:]):
        edges.append((a, b))
    return build_graph(start, edges)


FAMILIES = {
    "cycle": cycle,
    "complete": complete,
    "turan": turan,
    "bipartite_minus_matching": bipartite_minus_matching,
    "c5_blowup": c5_blowup,
    "c7_blowup": c7_blowup,
    "clique_chain": None,  # variadic, dispatched in generate()
}


def generate(family: str, *params: int) -> Graph:
    """Build a named family member, e.g. generate("turan", 6, 2)."""
    if family == "clique_chain":
        return clique_chain(params)
    fn = FAMILIES.get(family)
    if fn is None:
        raise ValueError(f"unknown family {family!r}; known: {sorted(FAMILIES)}")
    return fn(*params)
