"""Labeled resolution graph and its correction-term combinatorics.

Each vertex carries the label (a, m, g): the coefficient of the curve in
the configuration divisor, m = -(self-intersection), and the genus.
Edges are counted with multiplicity (one edge per transverse
intersection point).

A -1 vertex of genus 0 is a *bridge* when it meets exactly two vertices,
once each, whose coefficients sum to -2, or exactly one vertex, once,
with coefficient -2.  The families S_a, R_a, B_a, B'_a and the count d
drive the correction summand phi(a); their connectivity notion is
path-based with monotonicity constraints, with the debatable readings
exposed as interpretation flags rather than silently fixed.
"""

from fractions import Fraction

__all__ = ["Vertex", "ResolutionGraph", "InterpretationFlags",
           "graph_from_model", "is_bridge", "connected_to_minus_one",
           "combinatorial_sets"]

MINUS_ONE = Fraction(-1)
MINUS_TWO = Fraction(-2)


class InterpretationFlags:
    """Switches for the readings the formula leaves ambiguous.

    correction:      'default' reads the bridge subtraction per-bridge as
                     (m_v - 1); 'alt' reads (sum m_v) - 1.
    path_condition:  'literal' applies the path conditions to every vertex
                     including the source; 'interior' exempts the source.
    r_connectivity:  how "connected to a bridge" is met: 'path' or 'adjacent'.
    bp_connectivity: how a bridge joins B'_a: 'adjacent' or 'path'.
    """

    __slots__ = ("correction", "path_condition", "r_connectivity",
                 "bp_connectivity")

    def __init__(self, correction="default", path_condition="literal",
                 r_connectivity="path", bp_connectivity="adjacent"):
        if correction not in ("default", "alt"):
            raise ValueError("correction must be 'default' or 'alt'")
        if path_condition not in ("literal", "interior"):
            raise ValueError("path_condition must be 'literal' or 'interior'")
        if r_connectivity not in ("path", "adjacent"):
            raise ValueError("r_connectivity must be 'path' or 'adjacent'")
        if bp_connectivity not in ("adjacent", "path"):
            raise ValueError("bp_connectivity must be 'adjacent' or 'path'")
        self.correction = correction
        self.path_condition = path_condition
        self.r_connectivity = r_connectivity
        self.bp_connectivity = bp_connectivity

    def describe(self):
        return ("correction=%s,path-condition=%s,r-connectivity=%s,"
                "bp-connectivity=%s" % (self.correction, self.path_condition,
                                        self.r_connectivity, self.bp_connectivity))


class Vertex:
    __slots__ = ("name", "a", "m", "g")

    def __init__(self, name, a, m, g):
        self.name = name
        self.a = Fraction(a)
        self.m = m
        self.g = g


class ResolutionGraph:
    def __init__(self, vertices, edges):
        """edges: {(name_i, name_j): multiplicity}, unordered pairs."""
        self.vertices = list(vertices)
        self.index = {v.name: v for v in self.vertices}
        self.adj = {v.name: {} for v in self.vertices}
        for (i, j), m in edges.items():
            if i == j or m <= 0:
                raise ValueError("edges join distinct vertices with multiplicity >= 1")
            self.adj[i][j] = self.adj[i].get(j, 0) + m
            self.adj[j][i] = self.adj[j].get(i, 0) + m

    def vertex(self, name):
        return self.index[name]

    def neighbors(self, name):
        return self.adj[name]

    def names(self):
        return [v.name for v in self.vertices]


def graph_from_model(model, coeffs):
    """Derive the labeled graph of a configuration on a surface model.

    Curves with coefficient 0 do not belong to the divisor and are left
    out of the graph entirely.
    """
    verts = []
    kept = set()
    for c in model.curves:
        a = Fraction(coeffs.get(c.label, 0))
        if a == 0:
            continue
        kept.add(c.label)
        verts.append(Vertex(c.label, a, -c.self_int, c.genus))
    edges = {}
    for (i, j), m in model.intersections().items():
        if i in kept and j in kept:
            edges[(i, j)] = m
    return ResolutionGraph(verts, edges)


def is_bridge(graph, name):
    """Bridge test for a vertex (by name)."""
    v = graph.vertex(name)
    if v.a != MINUS_ONE or v.g != 0:
        return False
    nbrs = graph.neighbors(name)
    if len(nbrs) == 2:
        (n1, m1), (n2, m2) = sorted(nbrs.items())
        if m1 == 1 and m2 == 1:
            return graph.vertex(n1).a + graph.vertex(n2).a == MINUS_TWO
        return False
    if len(nbrs) == 1:
        (n1, m1), = nbrs.items()
        return m1 == 1 and graph.vertex(n1).a == MINUS_TWO
    return False


def _path_reaches(graph, start, targets, flags):
    """Is there a path from start to some target vertex such that every
    vertex before the target has genus 0 and coefficient >= a_start
    (when a_start > -1) or <= a_start (when a_start < -1)?

    Under the literal reading the source itself must pass the genus
    condition; its coefficient condition is vacuous.
    """
    v0 = graph.vertex(start)
    a0 = v0.a
    if flags.path_condition == "literal" and v0.g != 0:
        return False
    if a0 > MINUS_ONE:
        ok = lambda v: v.g == 0 and v.a >= a0
    else:
        ok = lambda v: v.g == 0 and v.a <= a0
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for name in frontier:
            for nb in graph.neighbors(name):
                if nb in targets:
                    return True
                if nb not in seen:
                    seen.add(nb)
                    if ok(graph.vertex(nb)):
                        nxt.append(nb)
        frontier = nxt
    return False


def connected_to_minus_one(graph, name, flags=None, targets=None):
    """Path-connectivity of a non-(-1) vertex to a -1 vertex.

    By default the targets are the -1 vertices that are not bridges (the
    condition entering S_a); pass an explicit target set to reuse the
    same notion with bridges as targets (the R_a condition).
    """
    flags = flags or InterpretationFlags()
    v = graph.vertex(name)
    if v.a == MINUS_ONE:
        raise ValueError("connectivity is defined for vertices with a != -1")
    if targets is None:
        targets = {n for n in graph.names()
                   if graph.vertex(n).a == MINUS_ONE and not is_bridge(graph, n)}
    if not targets:
        return False
    return _path_reaches(graph, name, targets, flags)


def combinatorial_sets(graph, flags=None):
    """The families (S, R, B, Bp) as maps coefficient -> vertex-name set,
    plus the count d of edges joining two -1 vertices.

    A bridge joins B_a for both neighbor coefficients a and -2-a (and
    B_{-2} together with B_0 in the single-neighbor case); bridges whose
    neighbors both have coefficient -1 belong to no family.
    """
    flags = flags or InterpretationFlags()
    bridges = {n for n in graph.names() if is_bridge(graph, n)}
    plain_minus_one = {n for n in graph.names()
                       if graph.vertex(n).a == MINUS_ONE and n not in bridges}

    S = {}
    for name in graph.names():
        v = graph.vertex(name)
        if v.a == MINUS_ONE:
            continue
        if plain_minus_one and _path_reaches(graph, name, plain_minus_one, flags):
            S.setdefault(v.a, set()).add(name)

    R = {}
    for a, members in S.items():
        for name in members:
            if flags.r_connectivity == "adjacent":
                hit = any(nb in bridges for nb in graph.neighbors(name))
            else:
                hit = bool(bridges) and _path_reaches(graph, name, bridges, flags)
            if hit:
                R.setdefault(a, set()).add(name)

    B = {}
    for name in bridges:
        for a in _bridge_coefficients(graph, name):
            B.setdefault(a, set()).add(name)

    Bp = {}
    for a, members in B.items():
        targets = R.get(a, set())
        if not targets:
            continue
        for name in members:
            if flags.bp_connectivity == "adjacent":
                hit = any(nb in targets for nb in graph.neighbors(name))
            else:
                hit = any(_path_reaches(graph, t, {name}, flags) for t in targets)
            if hit:
                Bp.setdefault(a, set()).add(name)

    d = 0
    seen = set()
    minus_ones = plain_minus_one | bridges
    for name in minus_ones:
        for nb, m in graph.neighbors(name).items():
            if nb in minus_ones and (nb, name) not in seen:
                seen.add((name, nb))
                d += m
    return S, R, B, Bp, d


def _bridge_coefficients(graph, name):
    """Coefficient families a (with partner -2-a) a bridge belongs to."""
    nbrs = list(graph.neighbors(name))
    if len(nbrs) == 1:
        a = graph.vertex(nbrs[0]).a
        return {a, MINUS_TWO - a} - {MINUS_ONE}
    a1 = graph.vertex(nbrs[0]).a
    a2 = graph.vertex(nbrs[1]).a
    return {a1, a2} - {MINUS_ONE}


def bridge_phi_argument(graph, name):
    """One neighbor coefficient of a bridge (phi is symmetric in a, -2-a);
    None when both neighbors carry coefficient -1."""
    fams = _bridge_coefficients(graph, name)
    if not fams:
        return None
    return min(fams)
