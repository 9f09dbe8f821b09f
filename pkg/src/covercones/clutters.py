"""Graphs, clutters, cliques, covers, blockers and their monomial encodings.

Vertices are 1-based indices 1..n.  Vertex subsets are returned as ascending
tuples and subset lists are sorted lexicographically, so every operation is
deterministic and outputs are directly comparable.  Internally subsets live
as integer bitmasks (bit i-1 = vertex i).

A clutter is a hypergraph whose edges form an antichain.  Graphs are the
special case where all edges have two vertices; the edge ideal of a clutter
is the square-free monomial ideal generated by its edge monomials, and the
cover ideal is the edge ideal of the blocker (minimal vertex covers).
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError, DegenerateMinorError, InputError
from .report import ORACLE, CheckReport

PERFECTION_ORACLE_CAP = 9


def _mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _vertices_of(mask):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 1..n (no loops, no multi-edges)."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        adj = [0] * (n + 1)
        seen = set()
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {e} out of range 1..{n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            seen.add((u, v))
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)

    def adjacent(self, u, v):
        return bool(self.adj[u] >> (v - 1) & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def isolated_vertices(self):
        return tuple(v for v in range(1, self.n + 1) if not self.adj[v])

    def induced(self, vertices):
        """Induced subgraph, relabelled 1..k in the order of `vertices`."""
        vs = sorted(vertices)
        idx = {v: i + 1 for i, v in enumerate(vs)}
        edges = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph(len(vs), edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


class Clutter:
    """An antichain of non-empty vertex subsets of 1..n.

    The strict constructor (default) rejects comparable edges so that no
    input data is ever dropped silently; minimalize=True instead keeps the
    inclusion-minimal edges.  Duplicate edges are merged either way.
    """

    __slots__ = ("n", "edges", "_masks")

    def __init__(self, n, edges, minimalize=False):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        masks = []
        for e in edges:
            vs = tuple(sorted(set(e)))
            if not vs:
                raise InputError("empty edge in clutter")
            if vs[0] < 1 or vs[-1] > n:
                raise InputError(f"edge {vs} out of range 1..{n}")
            masks.append(_mask_of(vs))
        masks = sorted(set(masks))
        if minimalize:
            masks = [m for m in masks
                     if not any(o != m and o & m == o for o in masks)]
        else:
            for a, b in combinations(masks, 2):
                if a & b == a or a & b == b:
                    raise InputError(
                        f"comparable edges {_vertices_of(a)} and {_vertices_of(b)}"
                        " (use minimalize=True to drop supersets)")
        self.n = n
        self._masks = tuple(sorted(masks, key=_vertices_of))
        self.edges = tuple(_vertices_of(m) for m in self._masks)

    def masks(self):
        return self._masks

    def __eq__(self, other):
        return isinstance(other, Clutter) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Clutter(n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 matrix whose j-th column is the incidence vector of edge j."""

    n: int
    columns: tuple

    @property
    def q(self):
        return len(self.columns)

    def rows(self):
        return tuple(tuple(col[i] for col in self.columns) for i in range(self.n))


# ---------------------------------------------------------------------------
# clutters from graphs, complements, duality

def edge_clutter(G):
    """The clutter of the edges of G (supports of the edge ideal)."""
    if not G.edges:
        raise InputError("graph has no edges")
    return Clutter(G.n, G.edges)


def complement(G):
    edges = [(u, v) for u, v in combinations(range(1, G.n + 1), 2)
             if not G.adjacent(u, v)]
    return Graph(G.n, edges)


def maximal_cliques(G):
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting).

    The pivot choice only affects the search order; the returned set is
    sorted canonically and independent of it.
    """
    if G.n == 0:
        return []
    adj = G.adj
    full = (1 << G.n) - 1
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot, best = 0, -1
        for ub in _bits(pool):
            c = (p & adj[ub.bit_length()]).bit_count()
            if c > best:
                best, pivot = c, ub.bit_length()
        for vb in _bits(p & ~adj[pivot]):
            v = vb.bit_length()
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    expand(0, full, 0)
    return sorted(_vertices_of(m) for m in out)


def all_cliques(G):
    """All non-empty cliques, the empty clique excluded."""
    adj = G.adj
    out = []

    def grow(mask, cand):
        for vb in _bits(cand):
            v = vb.bit_length()
            m = mask | vb
            out.append(m)
            grow(m, cand & adj[v] & ~((vb << 1) - 1))

    grow(0, (1 << G.n) - 1)
    return sorted(_vertices_of(m) for m in out)


def minimal_vertex_covers(C):
    """All minimal transversals, by Berge's sequential edge expansion."""
    if not C.edges:
        raise InputError("clutter has no edges")
    partial = [0]
    for e in C.masks():
        grown = []
        for t in partial:
            if t & e:
                grown.append(t)
            else:
                grown.extend(t | vb for vb in _bits(e))
        grown = sorted(set(grown), key=lambda m: m.bit_count())
        keep = []
        for m in grown:
            if not any(k & m == k for k in keep):
                keep.append(m)
        partial = keep
    return sorted(_vertices_of(m) for m in partial)


def blocker(C):
    """The clutter of minimal vertex covers of C."""
    return Clutter(C.n, minimal_vertex_covers(C))


def maximal_independent_sets(G):
    """Maximal independent sets; these are the complements of the minimal
    vertex covers of the edge clutter."""
    full = set(range(1, G.n + 1))
    if not G.edges:
        return [tuple(sorted(full))] if G.n else []
    covers = minimal_vertex_covers(edge_clutter(G))
    return sorted(tuple(sorted(full - set(c))) for c in covers)


def _exponent(n, support):
    return tuple(1 if v in support else 0 for v in range(1, n + 1))


def cover_ideal(C):
    """Exponent vectors of the cover ideal generators (one per minimal cover)."""
    return sorted(_exponent(C.n, set(c)) for c in minimal_vertex_covers(C))


def cover_ideal_of_complement(G):
    """Generators of the cover ideal of the complement graph, computed from
    the maximal cliques of G: each generator's support is the complement of
    a maximal clique.

    Degenerate when the vertex set itself is a clique (the complement has no
    edges and the construction would emit the zero exponent).
    """
    exps = []
    for clique in maximal_cliques(G):
        supp = set(range(1, G.n + 1)) - set(clique)
        if not supp:
            raise InputError(
                "complement graph has only isolated vertices; cover ideal degenerate")
        exps.append(_exponent(G.n, supp))
    return sorted(exps)


def dual_ideal(ideal):
    """Componentwise complement w = 1 - v of square-free exponent vectors."""
    out = []
    for v in ideal:
        if any(x not in (0, 1) for x in v):
            raise InputError(f"exponent vector {v} is not square-free")
        w = tuple(1 - x for x in v)
        if not any(w):
            raise InputError(f"dual of {v} is the zero exponent")
        out.append(w)
    return sorted(out)


# ---------------------------------------------------------------------------
# minors

def _reindex_map(n, v):
    return {w: (w if w < v else w - 1) for w in range(1, n + 1) if w != v}


def contraction(C, v):
    """Contract vertex v: remove it from every edge, keep minimal elements.

    Returns (clutter, index_map) on the remaining vertices re-indexed to
    1..n-1.  Contracting the vertex of a singleton edge would leave an empty
    edge, which no clutter can carry; this degenerate case raises.
    """
    if not 1 <= v <= C.n:
        raise InputError(f"vertex {v} out of range")
    idx = _reindex_map(C.n, v)
    stripped = []
    for e in C.edges:
        rest = tuple(idx[w] for w in e if w != v)
        if not rest and v in e:
            raise DegenerateMinorError(
                f"contracting {v} empties the singleton edge {e}")
        stripped.append(rest)
    return Clutter(C.n - 1, stripped, minimalize=True), idx


def deletion(C, v):
    """Delete vertex v: drop the edges containing it.

    Returns (clutter, index_map); the result may be the empty clutter, which
    is the degenerate flag callers should test for.
    """
    if not 1 <= v <= C.n:
        raise InputError(f"vertex {v} out of range")
    idx = _reindex_map(C.n, v)
    kept = [tuple(idx[w] for w in e) for e in C.edges if v not in e]
    return Clutter(C.n - 1, kept), idx


def clique_equalization(G):
    """Grow G until all maximal cliques have the same size.

    Repeatedly takes a lowest-size maximal clique C (lexicographically first
    among ties) and adds a new vertex adjacent exactly to C, so that the
    maximal clique family changes by replacing C with C + {z}.  Returns the
    grown graph and the list of added vertices.  Intended for perfect G;
    perfection is the caller's responsibility and is not checked here.
    """
    cliques = maximal_cliques(G)
    if not cliques:
        return G, []
    sizes = [len(c) for c in cliques]
    cap = G.n * (max(sizes) - min(sizes)) + 1
    H = G
    added = []
    for _ in range(cap):
        cliques = maximal_cliques(H)
        sizes = [len(c) for c in cliques]
        if min(sizes) == max(sizes):
            return H, added
        target = min((c for c in cliques if len(c) == min(sizes)))
        z = H.n + 1
        H2 = Graph(H.n + 1, list(H.edges) + [(u, z) for u in target])
        expected = sorted([c for c in cliques if c != target] + [target + (z,)])
        if maximal_cliques(H2) != expected:
            raise RuntimeError("clique equalization step changed unrelated cliques")
        H = H2
        added.append(z)
    raise RuntimeError("clique equalization did not converge within its cap")


# ---------------------------------------------------------------------------
# colouring, cliques, perfection oracle

def is_unmixed(C):
    """True when all minimal vertex covers have the same cardinality."""
    covers = minimal_vertex_covers(C)
    return len({len(c) for c in covers}) <= 1


def clique_number(G):
    if G.n == 0:
        return 0
    return max(len(c) for c in maximal_cliques(G))


def _colorable(G, k):
    if k >= G.n:
        return True
    order = sorted(range(1, G.n + 1), key=lambda v: -G.degree(v))
    colors = {}

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[u] for u in colors if G.adjacent(u, v)}
        for c in range(1, min(used + 1, k) + 1):
            if c not in forbidden:
                colors[v] = c
                if assign(i + 1, max(used, c)):
                    return True
                del colors[v]
        return False

    return assign(0, 0)


def chromatic_number(G):
    """Exact chromatic number by backtracking search."""
    if G.n == 0:
        return 0
    k = clique_number(G)
    while not _colorable(G, k):
        k += 1
    return k


def is_perfect_definitional(G, cap=PERFECTION_ORACLE_CAP):
    """Decide perfection straight from the definition: every induced
    subgraph must have chromatic number equal to its clique number.

    Subsets are scanned by size then lexicographically; the witness of a
    false verdict is the first violating vertex subset.
    """
    if G.n > cap:
        raise CapExceededError(f"perfection oracle capped at n <= {cap}")
    vertices = range(1, G.n + 1)
    for size in range(1, G.n + 1):
        for subset in combinations(vertices, size):
            H = G.induced(subset)
            chi, omega = chromatic_number(H), clique_number(H)
            if chi != omega:
                return CheckReport(
                    name="perfect-definitional", verdict=False, method=ORACLE,
                    witness={"subset": subset, "chromatic": chi, "clique": omega},
                    search_bounds={"n_cap": cap})
    return CheckReport(
        name="perfect-definitional", verdict=True, method=ORACLE,
        certificate={"induced_subgraphs_checked": 2 ** G.n - 1},
        search_bounds={"n_cap": cap})


# ---------------------------------------------------------------------------
# matrices

def incidence_matrix(C):
    """Columns are the incidence vectors of the edges, in canonical order."""
    return IncidenceMatrix(C.n, tuple(_exponent(C.n, set(e)) for e in C.edges))


def vertex_clique_matrix(G):
    """Columns are the incidence vectors of the maximal cliques."""
    return IncidenceMatrix(
        G.n, tuple(_exponent(G.n, set(c)) for c in maximal_cliques(G)))


# ---------------------------------------------------------------------------
# induced cycles (used by chordality and balancedness checks)

def chordless_cycles(n, adjacency, min_len=4):
    """Enumerate induced (chordless) cycles of length >= min_len.

    `adjacency` is a sequence indexed 1..n of neighbour bitmasks.  Cycles are
    yielded as vertex tuples starting at their smallest vertex, each exactly
    once; the orientation with the smaller second vertex is kept.
    """
    for s in range(1, n + 1):
        sbit = 1 << (s - 1)
        higher = ~((sbit << 1) - 1)
        stack = []
        for vb in _bits(adjacency[s] & higher):
            v = vb.bit_length()
            stack.append(((s, v), sbit | vb, adjacency[v] & higher & ~sbit & ~vb))
        while stack:
            path, mask, cand = stack.pop()
            last = path[-1]
            internal = mask & ~sbit & ~(1 << (last - 1))
            for vb in _bits(cand):
                v = vb.bit_length()
                if adjacency[v] & internal:
                    continue
                if adjacency[v] & sbit:
                    if len(path) + 1 >= min_len and path[1] < v:
                        yield path + (v,)
                else:
                    stack.append((path + (v,), mask | vb,
                                  adjacency[v] & higher & ~mask))


def graph_chordless_cycles(G, min_len=4):
    return list(chordless_cycles(G.n, G.adj, min_len))


def is_chordal(G):
    """Chordal means no induced cycle of length four or more.  Returns the
    verdict together with a witness cycle when one exists."""
    for cycle in chordless_cycles(G.n, G.adj, 4):
        return False, cycle
    return True, None
