"""Core graph types and the inversion/pushing/connectivity operations.

Vertices are 0..n-1.  MultiDigraph and Multigraph are value-semantic
(equality and hashing by content) and immutable after construction; all
operations return new objects.  Connectivity uses the kernel dispatch
layer (compiled when built, pure Python otherwise).

An inversion of a vertex set X reverses every arc with both endpoints
in X.  Applying a family of sets applies them one after another; the
result does not depend on the order, and applying a family twice is the
identity.  Inverting a set that spans a digon (arcs both ways) leaves
that digon unchanged.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from . import _kernels
from .errors import InvalidArgumentError, ParseError

INFINITY = math.inf


def _check_vertex(v, n, what="vertex"):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise InvalidArgumentError(f"{what} id {v!r} out of range 0..{n - 1}")


class MultiDigraph:
    """Directed graph with parallel arcs allowed, no loops."""

    __slots__ = ("n", "_m", "_hash")

    def __init__(self, n, arcs=()):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgumentError(f"vertex count must be a non-negative int, got {n!r}")
        m = {}
        for arc in arcs:
            if len(arc) == 2:
                t, h = arc
                mult = 1
            elif len(arc) == 3:
                t, h, mult = arc
            else:
                raise InvalidArgumentError(f"arc must be (tail, head[, mult]), got {arc!r}")
            _check_vertex(t, n, "tail")
            _check_vertex(h, n, "head")
            if t == h:
                raise InvalidArgumentError(f"loop at vertex {t} not allowed")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidArgumentError(f"multiplicity must be a positive int, got {mult!r}")
            m[(t, h)] = m.get((t, h), 0) + mult
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_m", m)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("MultiDigraph is immutable")

    # -- queries ------------------------------------------------------

    def mult(self, t, h):
        return self._m.get((t, h), 0)

    def arcs(self):
        """Iterate (tail, head, mult), sorted."""
        for (t, h) in sorted(self._m):
            yield t, h, self._m[(t, h)]

    def arc_count(self):
        return sum(self._m.values())

    def has_arc(self, t, h):
        return (t, h) in self._m

    def out_degree(self, v):
        return sum(m for (t, _h), m in self._m.items() if t == v)

    def in_degree(self, v):
        return sum(m for (_t, h), m in self._m.items() if h == v)

    def adjacent(self, u, v):
        return (u, v) in self._m or (v, u) in self._m

    def is_digraph(self):
        """No parallel arcs (digons still allowed)."""
        return all(m == 1 for m in self._m.values())

    def is_oriented(self):
        """Digraph without digons."""
        return self.is_digraph() and not any(True for _ in self.digon_pairs())

    def digon_pairs(self):
        """Iterate unordered pairs (u, v), u < v, with arcs both ways."""
        for (t, h) in sorted(self._m):
            if t < h and (h, t) in self._m:
                yield t, h

    def simple_arcs(self):
        """Arcs (t, h) with mult 1 and no opposite arc, sorted."""
        return [
            (t, h)
            for (t, h) in sorted(self._m)
            if self._m[(t, h)] == 1 and (h, t) not in self._m
        ]

    # -- derived objects ----------------------------------------------

    def underlying(self):
        """Underlying multigraph: each arc becomes an edge (digons give
        two parallel edges)."""
        edges = []
        for (t, h), m in self._m.items():
            edges.append((min(t, h), max(t, h), m))
        return Multigraph(self.n, edges)

    def reverse(self):
        return MultiDigraph(self.n, [(h, t, m) for (t, h), m in self._m.items()])

    def induced(self, vertices):
        """(sub-multidigraph, sorted id list); ids reindexed by rank."""
        ids = sorted(set(vertices))
        for v in ids:
            _check_vertex(v, self.n)
        pos = {v: i for i, v in enumerate(ids)}
        arcs = [
            (pos[t], pos[h], m)
            for (t, h), m in self._m.items()
            if t in pos and h in pos
        ]
        return MultiDigraph(len(ids), arcs), ids

    def caps_flat(self):
        n = self.n
        caps = [0] * (n * n)
        for (t, h), m in self._m.items():
            caps[t * n + h] = m
        return caps

    # -- value semantics ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return self.n == other.n and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.n, frozenset(self._m.items())))
            )
        return self._hash

    def __repr__(self):
        return f"MultiDigraph(n={self.n}, arcs={self.arc_count()})"


class Multigraph:
    """Undirected graph with parallel edges allowed, no loops."""

    __slots__ = ("n", "_m", "_hash")

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgumentError(f"vertex count must be a non-negative int, got {n!r}")
        m = {}
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                mult = 1
            elif len(edge) == 3:
                u, v, mult = edge
            else:
                raise InvalidArgumentError(f"edge must be (u, v[, mult]), got {edge!r}")
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u} not allowed")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidArgumentError(f"multiplicity must be a positive int, got {mult!r}")
            key = (min(u, v), max(u, v))
            m[key] = m.get(key, 0) + mult
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_m", m)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Multigraph is immutable")

    def mult(self, u, v):
        if u == v:
            return 0
        return self._m.get((min(u, v), max(u, v)), 0)

    def edges(self):
        """Iterate (u, v, mult) with u < v, sorted."""
        for (u, v) in sorted(self._m):
            yield u, v, self._m[(u, v)]

    def edge_count(self):
        return sum(self._m.values())

    def degree(self, v):
        return sum(m for (a, b), m in self._m.items() if a == v or b == v)

    def adjacent(self, u, v):
        return self.mult(u, v) > 0

    def neighbors(self, v):
        out = set()
        for (a, b) in self._m:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def induced(self, vertices):
        ids = sorted(set(vertices))
        for v in ids:
            _check_vertex(v, self.n)
        pos = {v: i for i, v in enumerate(ids)}
        edges = [
            (pos[u], pos[v], m)
            for (u, v), m in self._m.items()
            if u in pos and v in pos
        ]
        return Multigraph(len(ids), edges), ids

    def contract(self, groups):
        """Contract each group to one vertex (group i -> vertex i).

        Groups must partition 0..n-1.  Edges inside a group vanish;
        multiplicities across groups add up.
        """
        owner = {}
        for i, grp in enumerate(groups):
            for v in grp:
                _check_vertex(v, self.n)
                if v in owner:
                    raise InvalidArgumentError(f"vertex {v} in two groups")
                owner[v] = i
        if len(owner) != self.n:
            raise InvalidArgumentError("groups must cover all vertices")
        edges = []
        for (u, v), m in self._m.items():
            gu, gv = owner[u], owner[v]
            if gu != gv:
                edges.append((min(gu, gv), max(gu, gv), m))
        return Multigraph(len(groups), edges)

    def caps_flat(self):
        n = self.n
        caps = [0] * (n * n)
        for (u, v), m in self._m.items():
            caps[u * n + v] = m
            caps[v * n + u] = m
        return caps

    def cut_size(self, side):
        """Number of edges with exactly one endpoint in ``side``."""
        s = set(side)
        return sum(m for (u, v), m in self._m.items() if (u in s) != (v in s))

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.n, frozenset(self._m.items())))
            )
        return self._hash

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={self.edge_count()})"


def underlying(D):
    return D.underlying()


def reverse(D):
    return D.reverse()


# -- cuts -------------------------------------------------------------


@dataclass(frozen=True)
class Cut:
    """A vertex side and its boundary sizes.

    For cuts of a MultiDigraph all three sizes are set and
    out_size + in_size == undirected_size.  For cuts of a Multigraph
    only undirected_size is set.
    """

    side: frozenset
    undirected_size: int
    out_size: int | None = None
    in_size: int | None = None


def dicut(D, side):
    """Cut record of a MultiDigraph for the given side."""
    s = frozenset(side)
    for v in s:
        _check_vertex(v, D.n)
    out = 0
    inn = 0
    for (t, h), m in D._m.items():
        if t in s and h not in s:
            out += m
        elif h in s and t not in s:
            inn += m
    return Cut(side=s, undirected_size=out + inn, out_size=out, in_size=inn)


def _mask_to_set(mask):
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


# -- flows and connectivity -------------------------------------------


def max_flow(obj, s, t):
    """Maximum number of arc-disjoint s->t paths (edge-disjoint for a
    Multigraph).  s must differ from t."""
    _check_vertex(s, obj.n, "source")
    _check_vertex(t, obj.n, "sink")
    if s == t:
        raise InvalidArgumentError("source and sink must differ")
    flow, _mask = _kernels.st_max_flow(obj.n, obj.caps_flat(), s, t, -1)
    return flow


def min_cut(obj, s, t):
    """A minimum s-t cut as a Cut record (side contains s)."""
    _check_vertex(s, obj.n, "source")
    _check_vertex(t, obj.n, "sink")
    if s == t:
        raise InvalidArgumentError("source and sink must differ")
    _flow, mask = _kernels.st_max_flow(obj.n, obj.caps_flat(), s, t, -1)
    side = _mask_to_set(mask)
    if isinstance(obj, MultiDigraph):
        return dicut(obj, side)
    return Cut(side=side, undirected_size=obj.cut_size(side))


def edge_connectivity(G):
    """Global edge-connectivity of a Multigraph; INFINITY for n <= 1."""
    if not isinstance(G, Multigraph):
        raise InvalidArgumentError("edge_connectivity expects a Multigraph")
    if G.n <= 1:
        return INFINITY
    value, _mask = _kernels.global_min_cut(G.n, G.caps_flat())
    return value


def violating_dicut(D, k, core=None):
    """A dicut of D with out-size < k, or None if D is k-arc-strong.

    With ``core=W`` (a vertex set the caller knows induces a
    k-arc-strong subdigraph) only connectivity between W and the rest is
    checked; sound and complete given a correct core.
    """
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("violating_dicut expects a MultiDigraph")
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    n = D.n
    if n <= 1:
        return None
    if core is None:
        mask = _kernels.karc_deficient_cut(n, D.caps_flat(), k)
        if mask == -1:
            return None
        return dicut(D, _mask_to_set(mask))
    w = set(core)
    for v in w:
        _check_vertex(v, n, "core vertex")
    if not w:
        raise InvalidArgumentError("core must be nonempty")
    rest = [v for v in range(n) if v not in w]
    if not rest:
        return None  # D[W] = D, trusted k-arc-strong
    # contract W to the last index of a smaller matrix
    nn = len(rest) + 1
    wi = nn - 1
    pos = {v: i for i, v in enumerate(rest)}
    caps = [0] * (nn * nn)
    for (t, h), m in D._m.items():
        a = pos.get(t, wi)
        b = pos.get(h, wi)
        if a != b:
            caps[a * nn + b] += m
    for v in rest:
        i = pos[v]
        flow, mask = _kernels.st_max_flow(nn, caps, i, wi, k)
        if flow < k:
            side = {rest[j] for j in range(len(rest)) if (mask >> j) & 1}
            return dicut(D, side)
        flow, mask = _kernels.st_max_flow(nn, caps, wi, i, k)
        if flow < k:
            side = {rest[j] for j in range(len(rest)) if (mask >> j) & 1}
            side |= w
            return dicut(D, side)
    return None


def is_k_arc_strong(D, k, core=None):
    """True iff every dicut of D has at least k arcs leaving."""
    return violating_dicut(D, k, core=core) is None


# -- inversions and pushing -------------------------------------------


class InversionFamily:
    """An ordered list of vertex sets, each of size >= 2.

    Order is kept for display but never affects the result of applying
    the family.  Equality is by the exact sequence; use canonical() to
    compare families as multisets.
    """

    __slots__ = ("sets",)

    def __init__(self, sets):
        out = []
        for s in sets:
            fs = frozenset(s)
            if len(fs) < 2:
                raise InvalidArgumentError(f"inversion set must have >= 2 vertices, got {sorted(fs)}")
            for v in fs:
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise InvalidArgumentError(f"bad vertex id {v!r} in inversion set")
            out.append(fs)
        object.__setattr__(self, "sets", tuple(out))

    def __setattr__(self, *a):
        raise AttributeError("InversionFamily is immutable")

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i):
        return self.sets[i]

    def canonical(self):
        return tuple(sorted(tuple(sorted(s)) for s in self.sets))

    def __eq__(self, other):
        if not isinstance(other, InversionFamily):
            return NotImplemented
        return self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)

    def __repr__(self):
        return f"InversionFamily({[sorted(s) for s in self.sets]})"

    @staticmethod
    def symmetric_difference(*families):
        """Sets appearing an odd number of times across the families.

        Valid composition rule: applying F then G equals applying their
        symmetric difference, because two applications of the same set
        cancel.  Output order is canonical (sorted)."""
        count = {}
        for fam in families:
            for s in fam:
                count[s] = count.get(s, 0) + 1
        odd = [s for s, c in count.items() if c % 2 == 1]
        odd.sort(key=lambda s: tuple(sorted(s)))
        return InversionFamily(odd)

    def to_lines(self):
        return ["inv: " + " ".join(str(v) for v in sorted(s)) for s in self.sets]

    @staticmethod
    def from_lines(lines):
        sets = []
        for ln in lines:
            ln = ln.strip()
            if not ln:
                continue
            if not ln.startswith("inv:"):
                raise InvalidArgumentError(f"expected 'inv:' line, got {ln!r}")
            sets.append([int(tok) for tok in ln[4:].split()])
        return InversionFamily(sets)


def _coerce_family(family):
    if isinstance(family, InversionFamily):
        return family
    return InversionFamily(family)


def apply_inversions(D, family):
    """Apply each set of the family in order; see module docstring."""
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("apply_inversions expects a MultiDigraph")
    fam = _coerce_family(family)
    n = D.n
    m = dict(D._m)
    for X in fam:
        xs = sorted(X)
        for v in xs:
            _check_vertex(v, n)
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                u, v = xs[i], xs[j]
                a = m.get((u, v), 0)
                b = m.get((v, u), 0)
                if a != b:
                    if a:
                        m[(v, u)] = a
                    else:
                        m.pop((v, u), None)
                    if b:
                        m[(u, v)] = b
                    else:
                        m.pop((u, v), None)
    return MultiDigraph(n, [(t, h, mm) for (t, h), mm in m.items()])


def push(D, X):
    """Reverse every arc with exactly one endpoint in X."""
    if not isinstance(D, MultiDigraph):
        raise InvalidArgumentError("push expects a MultiDigraph")
    s = set(X)
    for v in s:
        _check_vertex(v, D.n)
    arcs = []
    for (t, h), m in D._m.items():
        if (t in s) != (h in s):
            arcs.append((h, t, m))
        else:
            arcs.append((t, h, m))
    return MultiDigraph(D.n, arcs)


# -- frames -----------------------------------------------------------


@dataclass(frozen=True)
class FramePartition:
    """Partition of the vertices into maximal k-edge-connected pieces.

    blocks are sorted tuples, listed by smallest element; contracted is
    the multigraph on block indices (edges inside blocks dropped)."""

    k: int
    blocks: tuple
    contracted: Multigraph = field(compare=False)

    def block_index(self, v):
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise InvalidArgumentError(f"vertex {v} not in any block")


def frames(G, k):
    """Split G into maximal vertex sets inducing k-edge-connected
    subgraphs (singletons count as infinitely connected).

    Recursive: a piece whose induced subgraph has a cut below k is split
    along a minimum cut; the result is the unique frame partition, so
    the choice of minimum cut does not matter.  Internally the split
    side comes from a fixed-root flow scan and the lexicographically
    smaller side recurses first, making the run deterministic."""
    if not isinstance(G, Multigraph):
        raise InvalidArgumentError("frames expects a Multigraph")
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError(f"k must be a positive int, got {k!r}")
    blocks = []

    def split(ids):
        if len(ids) <= 1:
            blocks.append(tuple(ids))
            return
        sub, _ = G.induced(ids)
        value, mask = _kernels.global_min_cut(sub.n, sub.caps_flat())
        if value >= k:
            blocks.append(tuple(ids))
            return
        a = [ids[i] for i in range(len(ids)) if (mask >> i) & 1]
        b = [ids[i] for i in range(len(ids)) if not (mask >> i) & 1]
        first, second = (a, b) if a < b else (b, a)
        split(first)
        split(second)

    split(list(range(G.n)))
    blocks.sort(key=lambda b: b[0] if b else -1)
    groups = [list(b) for b in blocks]
    contracted = G.contract(groups) if G.n else Multigraph(0)
    return FramePartition(k=k, blocks=tuple(blocks), contracted=contracted)


# -- .mdg text format ---------------------------------------------------


def parse_mdg(text):
    """Parse the .mdg format.

    Line types: ``mdg <n>`` header (required first non-blank line),
    ``a <tail> <head> [mult]`` arcs, ``#`` comments, blank lines
    ignored.  Malformed input raises ParseError with the line number."""
    n = None
    arcs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if toks[0] != "mdg" or len(toks) != 2:
                raise ParseError(line_no, f"expected 'mdg <n>' header, got {raw.strip()!r}")
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(line_no, f"bad vertex count {toks[1]!r}") from None
            if n < 0:
                raise ParseError(line_no, f"bad vertex count {n}")
            continue
        if toks[0] != "a" or len(toks) not in (3, 4):
            raise ParseError(line_no, f"expected 'a <tail> <head> [mult]', got {raw.strip()!r}")
        try:
            t = int(toks[1])
            h = int(toks[2])
            mult = int(toks[3]) if len(toks) == 4 else 1
        except ValueError:
            raise ParseError(line_no, f"bad arc tokens in {raw.strip()!r}") from None
        if not 0 <= t < n or not 0 <= h < n:
            raise ParseError(line_no, f"arc endpoint out of range 0..{n - 1}")
        if t == h:
            raise ParseError(line_no, f"loop at vertex {t} not allowed")
        if mult < 1:
            raise ParseError(line_no, f"multiplicity must be >= 1, got {mult}")
        arcs.append((t, h, mult))
    if n is None:
        raise ParseError(1, "missing 'mdg <n>' header")
    return MultiDigraph(n, arcs)


def emit_mdg(D, comment=None):
    """Canonical .mdg text: sorted arcs, multiplicity only when > 1."""
    lines = []
    if comment:
        for c in str(comment).splitlines():
            lines.append(f"# {c}")
    lines.append(f"mdg {D.n}")
    for t, h, m in D.arcs():
        lines.append(f"a {t} {h}" if m == 1 else f"a {t} {h} {m}")
    return "\n".join(lines) + "\n"


def read_mdg(path):
    with open(path, encoding="utf-8") as fh:
        return parse_mdg(fh.read())


def write_mdg(path, D, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_mdg(D, comment=comment))
