"""Plabic graphs in a disk: trips, reducedness, measurements, butterflies.

Boundary vertices are the marker values themselves (ints); internal vertices
are strings. Rotations list incident edge names clockwise. Boundary vertices
carry at most one edge; the vertex holding it may be either color.  A marker
held at a white belongs to the boundary of a matching when its leg is used,
a marker held at a black when its leg is unused; isolated markers never do.
Trips use the rules of the road: arriving at a white, leave one step clockwise;
at a black, one step counterclockwise.

Butterfly products are computed on the positroid first (the k generalized
chords of the product are a transversal system, so the product bases are the
disjoint unions B_L + {x} + B_R with x drawn from the five butterfly markers)
and the graph is then rebuilt in a canonical reduced form through its bridge
decomposition.  The twelve canonical butterfly edges are renamed onto the
rebuilt graph, the designated five by what their deletion does to the cell.
"""

from fractions import Fraction

__all__ = [
    "PlabicGraph", "TripPermutation", "Positroid", "ButterflyIndices",
    "trivial_cell", "bcfw_product", "product_bases", "graph_pre", "graph_cyc",
    "graph_refl", "delete_edge", "recipe_cell", "cell_from_chords",
    "cell_from_decorated_permutation", "graph_from_window",
    "window_from_bases", "dim_from_window", "window_k",
]


def window_k(window):
    n = len(window)
    total = sum(w - i for i, w in enumerate(window, start=1))
    if total % n:
        raise ValueError("window is not a bounded affine permutation")
    return total // n


def _window_length(window):
    """Inversions of the bounded affine permutation."""
    n = len(window)

    def f(t):
        return window[(t - 1) % n] + n * ((t - 1) // n)

    return sum(1 for i in range(1, n + 1)
               for j in range(i + 1, i + n + 1) if f(i) > f(j))


def dim_from_window(window):
    """Cell dimension k(n-k) - inversion count."""
    n = len(window)
    k = window_k(window)
    return k * (n - k) - _window_length(window)


class TripPermutation:
    """Bounded affine window with its fixed points read as decorations."""

    def __init__(self, window):
        self.window = tuple(window)
        n = len(self.window)
        for i, w in enumerate(self.window, start=1):
            if not i <= w <= i + n:
                raise ValueError(f"window entry {w} escapes [{i}, {i + n}]")
        self.k = window_k(self.window)

    def __eq__(self, other):
        other = other.window if isinstance(other, TripPermutation) else other
        return self.window == tuple(other)

    def __iter__(self):
        return iter(self.window)

    def dim(self):
        return dim_from_window(self.window)

    def loops(self):
        return tuple(i for i, w in enumerate(self.window, start=1) if w == i)

    def coloops(self):
        n = len(self.window)
        return tuple(i for i, w in enumerate(self.window, start=1)
                     if w == i + n)


class ButterflyIndices:
    """The five butterfly markers (a, b, c, d, n) with their frozen brackets."""

    def __init__(self, a, b, c, d, n):
        if not (a < b <= c < d < n):
            raise ValueError("butterfly markers must satisfy a<b<=c<d<n")
        self.a, self.b, self.c, self.d, self.n = a, b, c, d, n

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d, self.n))

    def frozen(self):
        """The four frozen brackets <abcn>, <abcd>, <bcdn>, <acdn>."""
        a, b, c, d, n = self
        return (tuple(sorted((a, b, c, n))), tuple(sorted((a, b, c, d))),
                tuple(sorted((b, c, d, n))), tuple(sorted((a, c, d, n))))


class PlabicGraph:
    """Disk-embedded bicolored graph with named edges and clockwise rotations."""

    def __init__(self, markers, colors, edges, rotations):
        self.markers = tuple(sorted(markers))
        self.colors = dict(colors)          # internal id -> "w" | "b"
        self.edges = dict(edges)            # name -> (u, v)
        self.rotations = {v: tuple(r) for v, r in rotations.items()}
        for m in self.markers:
            self.rotations.setdefault(m, ())
        for v in self.colors:
            self.rotations.setdefault(v, ())
        self._match_cache = None
        self._bases_cache = None

    # -- basic structure -------------------------------------------------

    def copy(self):
        G = PlabicGraph(self.markers, self.colors, self.edges, self.rotations)
        G._bases_cache = self._bases_cache
        return G

    @property
    def n(self):
        return len(self.markers)

    def is_boundary(self, v):
        return v not in self.colors

    def other_end(self, name, v):
        u, w = self.edges[name]
        return w if u == v else u

    def degree(self, v):
        return len(self.rotations.get(v, ()))

    def holder(self, m):
        """Internal vertex holding the leg of marker m, or None if isolated."""
        rot = self.rotations.get(m, ())
        return self.other_end(rot[0], m) if rot else None

    def has_unicolor_edges(self):
        return any(self.colors.get(u) is not None
                   and self.colors.get(u) == self.colors.get(v)
                   for u, v in self.edges.values())

    def contracted(self):
        """Copy with unicolored edges contracted away; self when none."""
        if not self.has_unicolor_edges():
            return self
        colors = dict(self.colors)
        edges = dict(self.edges)
        rotations = {v: tuple(r) for v, r in self.rotations.items()}
        _contract_unicolor(colors, edges, rotations)
        return PlabicGraph(self.markers, colors, edges, rotations)

    def k(self):
        if self.has_unicolor_edges():
            return self.contracted().k()
        w = sum(1 for c in self.colors.values() if c == "w")
        b = sum(1 for c in self.colors.values() if c == "b")
        held_black = sum(1 for m in self.markers
                         if self.colors.get(self.holder(m)) == "b")
        # |boundary of M| is this for every almost perfect matching M
        return w - b + held_black

    def dim(self):
        return len(self.edges) + self.n - (len(self.colors) + self.n)

    def assert_valid(self):
        for name, (u, v) in self.edges.items():
            if u == v:
                raise AssertionError(f"self loop {name}")
            if self.colors.get(u) is None and self.colors.get(v) is None:
                raise AssertionError(f"boundary-boundary edge {name}")
            for x in (u, v):
                if self.rotations.get(x, ()).count(name) != 1:
                    raise AssertionError(f"edge {name} missing in rotation of {x}")
        for v, rot in self.rotations.items():
            for name in rot:
                if name not in self.edges or v not in self.edges[name]:
                    raise AssertionError(f"rotation of {v} lists foreign edge")
            if self.is_boundary(v) and len(rot) > 1:
                raise AssertionError(f"boundary vertex {v} has degree > 1")
        if self.contracted() is not self and self.contracted().dim() != self.dim():
            raise AssertionError("unicolor contraction broke the edge count")
        # faces must close up to Euler's count for a disk embedding
        if self.face_count() != self.dim() + 1:
            raise AssertionError("rotation system is not a disk embedding")

    def face_count(self):
        """Interior faces of the disk drawing, boundary arcs included."""
        # directed edges include the boundary circle arcs between markers
        marks = self.markers
        narcs = len(marks)
        darts = []
        for name in self.edges:
            darts.append((name, 0))
            darts.append((name, 1))
        for t in range(narcs):
            darts.append((("~arc", t), 0))
            darts.append((("~arc", t), 1))

        def arc_ends(t):
            return marks[t], marks[(t + 1) % narcs]

        def head(d):
            name, direction = d
            if isinstance(name, tuple):
                u, v = arc_ends(name[1])
            else:
                u, v = self.edges[name]
            return v if direction == 0 else u

        # clockwise rotation at each vertex, with the two boundary arcs
        # flanking the single leg: previous arc, leg, next arc (clockwise)
        rot = {}
        for v, r in self.rotations.items():
            rot[v] = list(r)
        for t in range(narcs):
            u, v = arc_ends(t)
            # arc t leaves u clockwise and enters v counterclockwise
            rot[u] = [("~arc", t)] + rot.get(u, [])
            rot[v] = rot.get(v, []) + [("~arc", (t) % narcs)]

        def next_dart(d):
            v = head(d)
            names = rot[v]
            name = d[0]
            i = names.index(name)
            nxt = names[(i + 1) % len(names)]
            if isinstance(nxt, tuple):
                u, w = arc_ends(nxt[1])
                return (nxt, 0) if u == v else (nxt, 1)
            u, w = self.edges[nxt]
            return (nxt, 0) if u == v else (nxt, 1)

        seen = set()
        faces = 0
        for d in darts:
            if d in seen:
                continue
            faces += 1
            cur = d
            while cur not in seen:
                seen.add(cur)
                cur = next_dart(cur)
        return faces - 1  # drop the outer face beyond the circle

    # -- trips -----------------------------------------------------------

    def _step(self, name, v):
        """Directed edge (name, into v) -> next directed edge out of v."""
        rot = self.rotations[v]
        i = rot.index(name)
        if self.colors[v] == "w":
            nxt = rot[(i + 1) % len(rot)]
        else:
            nxt = rot[(i - 1) % len(rot)]
        return nxt, self.other_end(nxt, v)

    def trips(self):
        """(finite permutation, decorations, trip edge lists, closed?)."""
        perm, deco, paths = {}, {}, {}
        used = set()
        for m in self.markers:
            rot = self.rotations.get(m, ())
            if not rot:
                perm[m] = m
                deco[m] = "loop"
                paths[m] = ()
                continue
            name, v = rot[0], self.other_end(rot[0], m)
            path = [(name, m, v)]
            used.add((name, m))
            while not self.is_boundary(v):
                name, w = self._step(name, v)
                path.append((name, v, w))
                used.add((name, v))
                v = w
            perm[m] = v
            paths[m] = tuple(path)
            if v == m:
                deco[m] = "coloop" if len(path) == 2 else "long"
            else:
                deco[m] = ""
        total_darts = 2 * len(self.edges)
        has_closed = len(used) < total_darts
        return perm, deco, paths, has_closed

    def window(self):
        """Bounded affine window; fixed points read from the decoration."""
        perm, deco, _, closed = self.trips()
        if closed:
            raise ValueError("graph has closed trips; no decorated permutation")
        pos = {m: t for t, m in enumerate(self.markers, start=1)}
        out = []
        for i in self.markers:
            j = perm[i]
            if i == j:
                if deco[i] == "long":
                    raise ValueError("non-lollipop fixed point")
                out.append(pos[i] if deco[i] == "loop" else pos[i] + self.n)
            else:
                # positions, not raw labels, when markers are not 1..n
                pi, pj = pos[i], pos[j]
                out.append(pj if pj > pi else pj + self.n)
        return tuple(out)

    def is_reduced(self):
        """No roundtrips, no double edge use, no bad double crossings."""
        perm, deco, paths, closed = self.trips()
        if closed or any(d == "long" for d in deco.values()):
            return False
        tripnames = {}
        for m, path in paths.items():
            names = [p[0] for p in path]
            seen = {}
            for t, (nm, u, v) in enumerate(path):
                if nm in seen:
                    p = seen[nm]
                    # the only benign reuse bounces off a leaf, reversed
                    if not (t == p + 1 and self.degree(path[p][2]) == 1):
                        return False
                seen[nm] = t
            tripnames[m] = {nm: t for t, nm in enumerate(names)}
        marks = list(paths)
        for x in range(len(marks)):
            for y in range(x + 1, len(marks)):
                t1, t2 = tripnames[marks[x]], tripnames[marks[y]]
                shared = sorted(set(t1) & set(t2), key=lambda nm: t1[nm])
                for a in range(len(shared)):
                    for b in range(a + 1, len(shared)):
                        e, f = shared[a], shared[b]
                        # a double crossing is bad when both trips pass the
                        # shared pair in the same order
                        if (t1[e] < t1[f]) == (t2[e] < t2[f]):
                            return False
        return True

    def reduced_by_dimension(self):
        """Face count matches the trip window's cell dimension (cross-check)."""
        try:
            w = self.window()
        except ValueError:
            return False
        perm, deco, _, _ = self.trips()
        if any(d == "long" for d in deco.values()):
            return False
        return self.dim() == dim_from_window(w)

    # -- measurements ------------------------------------------------------

    def matchings_by_boundary(self):
        """{frozenset boundary of M: [tuples of matching edge names]}, cached.

        An almost perfect matching covers every internal vertex exactly once
        and each boundary vertex at most once.  Its boundary set contains the
        markers matched at a white holder and the ones unmatched at a black
        holder, so its size is k() for every matching.
        """
        if self._match_cache is not None:
            return self._match_cache
        if self.has_unicolor_edges():
            self._match_cache = self.contracted().matchings_by_boundary()
            return self._match_cache
        internals = sorted(self.colors)
        adj = {v: [] for v in internals}
        for name, (u, v) in self.edges.items():
            if u in adj:
                adj[u].append((name, v))
            if v in adj:
                adj[v].append((name, u))
        black_legs = frozenset(m for m in self.markers
                               if self.colors.get(self.holder(m)) == "b")
        out = {}
        covered = set()
        picked = []

        def grow():
            # take the most constrained uncovered internal vertex first
            best_opt = None
            for v in internals:
                if v in covered:
                    continue
                opt = [(nm, u) for nm, u in adj[v] if u not in covered]
                if not opt:
                    return
                if best_opt is None or len(opt) < len(best_opt):
                    best_opt = opt
                    if len(opt) == 1:
                        break
            if best_opt is None:
                used = {x for nm in picked for x in self.edges[nm]}
                J = frozenset(m for m in self.markers
                              if (m in used) != (m in black_legs))
                out.setdefault(J, []).append(tuple(sorted(picked)))
                return
            for name, u in best_opt:
                v = self.other_end(name, u)
                covered.add(v)
                covered.add(u)
                picked.append(name)
                grow()
                picked.pop()
                covered.discard(v)
                covered.discard(u)

        grow()
        self._match_cache = out
        return out

    def bases(self):
        if self._bases_cache is not None:
            return list(self._bases_cache)
        mats = self.matchings_by_boundary()
        return sorted(mats, key=lambda J: tuple(sorted(J)))

    def positroid(self):
        return Positroid(self.markers, self.bases())

    def lexmin_basis(self):
        bases = self.bases()
        if not bases:
            raise ValueError("graph has no almost perfect matching")
        return tuple(sorted(bases[0]))

    def coindependent(self, J):
        """True when some basis avoids every marker in J."""
        Jset = set(J)
        return any(not (B & Jset) for B in self.bases())

    def partition_value(self, J, weights):
        mats = self.matchings_by_boundary().get(frozenset(J), [])
        total = 0
        for m in mats:
            prod = 1
            for name in m:
                prod *= weights[name]
            total += prod
        return total

    def sample_point(self, rng=None, weights=None):
        """Integer matrix sampled from the cell; rows follow lexmin basis."""
        if self.has_unicolor_edges():
            return self.contracted().sample_point(rng, weights)
        if weights is None:
            from .rng import positive_weights
            names = sorted(self.edges)
            ws = positive_weights(rng, len(names))
            weights = dict(zip(names, ws))
        J0 = self.lexmin_basis()
        k = len(J0)
        if k != self.k():
            raise AssertionError("basis size disagrees with graph rank")
        cols = {m: t for t, m in enumerate(self.markers)}
        z0 = self.partition_value(J0, weights)
        C = [[0] * self.n for _ in range(k)]
        for i, ji in enumerate(J0, start=1):
            C[i - 1][cols[ji]] = z0
            for j in self.markers:
                if j in J0:
                    continue
                D = sorted(set(J0) - {ji} | {j})
                p = D.index(j) + 1
                sgn = -1 if (i + p) % 2 else 1
                C[i - 1][cols[j]] = sgn * self.partition_value(D, weights)
        return C


class Positroid:
    """Positroid presented by its bases; the necklace recovers the window."""

    def __init__(self, markers, bases):
        self.markers = tuple(sorted(markers))
        self.bases = sorted({frozenset(B) for B in bases},
                            key=lambda B: tuple(sorted(B)))
        if not self.bases:
            raise ValueError("a positroid has at least one basis")
        self.k = len(self.bases[0])
        if any(len(B) != self.k for B in self.bases):
            raise ValueError("bases of unequal size")

    def __eq__(self, other):
        return (self.markers == other.markers and self.bases == other.bases)

    def window(self):
        return window_from_bases(self.markers, self.bases)

    def dim(self):
        return dim_from_window(self.window())

    def contains(self, B):
        return frozenset(B) in set(self.bases)

    def coindependent(self, J):
        Jset = set(J)
        return any(not (B & Jset) for B in self.bases)

    def loops(self):
        live = set().union(*self.bases)
        return tuple(m for m in self.markers if m not in live)


def window_from_bases(markers, bases):
    """Window of the positroid with the given bases, via its necklace."""
    marks = tuple(sorted(markers))
    n = len(marks)
    pos = {m: t for t, m in enumerate(marks, start=1)}
    sets = {frozenset(pos[m] for m in B) for B in bases}
    if not sets:
        raise ValueError("positroid needs at least one basis")

    def lexmin(r):
        return min(sets, key=lambda S: sorted((p - r) % n for p in S))

    neck = [lexmin(r) for r in range(1, n + 1)]
    window = []
    for r in range(1, n + 1):
        I, J = neck[r - 1], neck[r % n]
        if r not in I:
            window.append(r)
            continue
        diff = J - (I - {r})
        if len(diff) != 1:
            raise ValueError("necklace step is not a single exchange")
        j = next(iter(diff))
        window.append(j if j > r else j + n)
    return tuple(window)


# -- builders ---------------------------------------------------------------


def trivial_cell(markers):
    """The zero-dimensional k=0 cell: every marker an isolated lollipop."""
    G = PlabicGraph(markers, {}, {}, {})
    G._bases_cache = [frozenset()]
    return G


def delete_edge(G, name):
    edges = dict(G.edges)
    del edges[name]
    colors = dict(G.colors)
    rotations = {v: tuple(x for x in r if x != name)
                 for v, r in G.rotations.items()}

    def drop(names):
        for nm in names:
            u, v = edges.pop(nm)
            for x in (u, v):
                if x in rotations:
                    rotations[x] = tuple(e for e in rotations[x] if e != nm)

    # prune dead branches: an internal leaf forces its edge into every
    # matching, covering its internal neighbour, whose remaining edges are
    # then forbidden; the pair drops out without changing the matroid
    changed = True
    while changed:
        changed = False
        for v in list(colors):
            if v not in colors:
                continue
            deg = len(rotations.get(v, ()))
            if deg == 0:
                del colors[v], rotations[v]
                changed = True
            elif deg == 1:
                e = rotations[v][0]
                a, b = edges[e]
                u = b if a == v else a
                if u in colors:
                    dead = [e] + [x for x in rotations[u] if x != e]
                    drop(dead)
                    for x in (v, u):
                        del colors[x], rotations[x]
                    changed = True
    return PlabicGraph(G.markers, colors, edges, rotations)


def graph_pre(G, positions):
    """Insert extra markers as isolated (black lollipop) boundary vertices."""
    H = PlabicGraph(tuple(sorted(set(G.markers) | set(positions))),
                    G.colors, G.edges, G.rotations)
    H._bases_cache = G._bases_cache
    return H


def _relabel(G, mapping, reverse_rotations=False):
    markers = tuple(sorted(mapping[m] for m in G.markers))
    edges = {}
    for name, (u, v) in G.edges.items():
        edges[name] = (mapping.get(u, u), mapping.get(v, v))
    rotations = {}
    for v, r in G.rotations.items():
        rr = tuple(reversed(r)) if reverse_rotations else tuple(r)
        rotations[mapping.get(v, v)] = rr
    H = PlabicGraph(markers, G.colors, edges, rotations)
    if G._bases_cache is not None:
        H._bases_cache = sorted({frozenset(mapping[m] for m in B)
                                 for B in G._bases_cache},
                                key=lambda B: tuple(sorted(B)))
    return H


def graph_cyc(G):
    """Relabel every marker to the next one clockwise."""
    N = G.markers
    nxt = {N[i]: N[(i + 1) % len(N)] for i in range(len(N))}
    return _relabel(G, nxt)


def graph_refl(G):
    """Mirror the disk: markers reverse, all rotations flip orientation."""
    N = G.markers
    mir = {N[i]: N[len(N) - 1 - i] for i in range(len(N))}
    return _relabel(G, mir, reverse_rotations=True)


def product_bases(bases_L, bases_R, butterfly, forbid_x=(), loops=()):
    """Bases of the butterfly product: disjoint unions B_L + {x} + B_R.

    The k generalized chords of the product carry five-marker supports, so
    the product matroid is the transversal system of those supports on top
    of the factors; x ranges over the butterfly markers.  forbid_x removes
    markers from the selector; loops removes them from the factors as well.
    """
    a, b, c, d, nn = butterfly
    X = (a, b, c, d, nn)
    banned = set(forbid_x) | set(loops)
    dead = set(loops)
    out = set()
    for BL in bases_L:
        if dead & BL:
            continue
        for BR in bases_R:
            if dead & BR or BL & BR:
                continue
            U = BL | BR
            for x in X:
                if x in banned or x in U:
                    continue
                out.add(frozenset(U | {x}))
    return sorted(out, key=lambda B: tuple(sorted(B)))


def graph_from_window(window, markers=None):
    """Canonical reduced graph of a window, relabeled onto given markers."""
    G = cell_from_decorated_permutation(window)
    if markers is None:
        return G
    marks = tuple(sorted(markers))
    if len(marks) != len(window):
        raise ValueError("marker count disagrees with window length")
    mapping = {t: m for t, m in enumerate(marks, start=1)}
    return _relabel(G, mapping)


def _rename_edges(G, mapping):
    edges = {mapping.get(nm, nm): ends for nm, ends in G.edges.items()}
    rotations = {v: tuple(mapping.get(nm, nm) for nm in r)
                 for v, r in G.rotations.items()}
    H = PlabicGraph(G.markers, G.colors, edges, rotations)
    H._bases_cache = G._bases_cache
    return H


def bcfw_product(GL, GR, butterfly, tag=""):
    """Butterfly product of two cells; returns (graph, canonical edge names).

    GL lives on {n, 1..a, b}, GR on {b..d} + {n}; the result lives on their
    union and its bases are all disjoint unions B_L + {x} + B_R with x one of
    the five butterfly markers.  The graph is rebuilt in canonical reduced
    form from that positroid, and twelve canonical edge names x1..x12 are
    assigned on it.  The designated five are placed by their deletion: x1,
    x6, x8, x12 are the legs of d, a, b, n (deletion turns the marker into a
    loop) and x10 is an interior edge whose deletion only removes c from the
    selector; each sole-kills one butterfly twistor on interior points.  x11
    is the leg of c and the rest are fillers in a fixed order.
    """
    a, b, c, d, nn = butterfly
    NL, NR = set(GL.markers), set(GR.markers)
    if len({a, b, c, d, nn}) != 5:
        raise ValueError("butterfly markers must be distinct")
    if NL & NR != {b, nn}:
        raise ValueError("factors must share exactly the markers b and n")
    if a not in NL or not {c, d} <= NR:
        raise ValueError("butterfly markers sit outside the factors")
    bases_L, bases_R = GL.bases(), GR.bases()
    bases = product_bases(bases_L, bases_R, butterfly)
    markers = tuple(sorted(NL | NR))
    window = window_from_bases(markers, bases)
    G = graph_from_window(window, markers)
    G._bases_cache = bases
    names = _butterfly_names(G, butterfly, bases_L, bases_R, bases)
    mapping, legs = {}, {}
    for key, old in names.items():
        if old in mapping:
            # degenerate product: two designations share one physical edge
            legs[key] = mapping[old]
        else:
            mapping[old] = legs[key] = f"{key}{tag}"
    G = _rename_edges(G, mapping)
    G._bases_cache = bases
    return G, legs


def _butterfly_names(G, butterfly, bases_L, bases_R, bases):
    """Map canonical keys x1..x12 to edge names of the rebuilt product."""
    a, b, c, d, nn = butterfly
    names = {}
    for key, m in (("x1", d), ("x6", a), ("x8", b), ("x11", c), ("x12", nn)):
        rot = G.rotations.get(m, ())
        if not rot:
            raise ValueError(f"product marker {m} lost its leg")
        names[key] = rot[0]
    # the c-selector edge: deleting it keeps every factor basis and only
    # strikes x=c from the selector, a cell one dimension down
    target = product_bases(bases_L, bases_R, butterfly, forbid_x=(c,))
    tw = window_from_bases(G.markers, target)
    taken = set(names.values())
    pick = None
    for name in sorted(G.edges):
        if name in taken:
            continue
        H = delete_edge(G, name)
        try:
            w = H.window()
        except ValueError:
            continue
        if w == tw and H.is_reduced():
            pick = name
            break
    if pick is None:
        # a trivial right factor pinches the selector facet onto the c loop
        pick = names["x11"]
    names["x10"] = pick
    taken.add(pick)
    fillers = [nm for nm in sorted(G.edges) if nm not in taken]
    for key, nm in zip(("x2", "x3", "x4", "x5", "x7", "x9"), fillers):
        names[key] = nm
    if len(set(names.values())) < len(names) - (1 if pick == names["x11"] else 0):
        raise AssertionError("butterfly edge naming collided")
    return names


def recipe_cell(recipe):
    """Build the graph of a recipe; returns (graph, top-step leg names)."""
    top_legs = {}

    def build(node):
        if node is None:
            return None
        gl = build(node.left)
        gr = build(node.right)
        if gl is None:
            gl = trivial_cell(node.NL)
        if gr is None:
            gr = trivial_cell(node.NR)
        G, legs = bcfw_product(gl, gr, node.step.butterfly,
                               tag=f"@{node.index}")
        top_legs.clear()
        top_legs.update(legs)
        if node.step.pre:
            G = graph_pre(G, node.step.pre)
        for _ in range(node.step.cyc % len(node.markers)):
            G = graph_cyc(G)
        if node.step.refl % 2:
            G = graph_refl(G)
        return G

    G = build(recipe.root)
    return G, dict(top_legs)


def cell_from_chords(D):
    from .chords import recipe_from_chord_diagram
    return recipe_cell(recipe_from_chord_diagram(D))


# -- graphs from decorated permutations --------------------------------------


def _peel_bridges(window):
    """Peel bridges down to lollipops; returns (base window, peel list).

    A peel at cyclically adjacent non-lollipop positions (i, j) swaps the
    two images; a swap that lands an image on its own position may decorate
    it either way, so both variants are offered and the k-preserving,
    dimension-decrementing branch is followed, with backtracking.
    """
    n = len(window)

    def residue(v):
        return (v - 1) % n + 1

    def go(w, acc):
        if all(w[t - 1] in (t, t + n) for t in range(1, n + 1)):
            return tuple(w), acc
        cur = dim_from_window(tuple(w))
        k0 = window_k(tuple(w))
        spots = [t for t in range(1, n + 1) if w[t - 1] not in (t, t + n)]
        cands = [(spots[x], spots[x + 1]) for x in range(len(spots) - 1)]
        if len(spots) > 1:
            cands.append((spots[-1], spots[0]))
        for i, j in cands:
            ri, rj = residue(w[j - 1]), residue(w[i - 1])
            wis = [i, i + n] if ri == i else [ri if ri > i else ri + n]
            wjs = [j, j + n] if rj == j else [rj if rj > j else rj + n]
            for wi in wis:
                for wj in wjs:
                    w2 = list(w)
                    w2[i - 1], w2[j - 1] = wi, wj
                    try:
                        if window_k(tuple(w2)) != k0:
                            continue
                    except ValueError:
                        continue
                    if dim_from_window(tuple(w2)) != cur - 1:
                        continue
                    out = go(w2, acc + [(i, j)])
                    if out is not None:
                        return out
        return None

    out = go(list(window), [])
    if out is None:
        raise ValueError("no bridge decomposition found; window invalid?")
    return out


def _contract_unicolor(colors, edges, rotations):
    while True:
        bad = next((nm for nm, (u, v) in edges.items()
                    if colors.get(u) is not None
                    and colors.get(u) == colors.get(v)), None)
        if bad is None:
            return
        u, v = edges[bad]
        if u == v:
            raise AssertionError("contraction produced a self loop")
        ru, rv = list(rotations[u]), list(rotations[v])
        i, j = ru.index(bad), rv.index(bad)
        merged = ru[:i] + rv[j + 1:] + rv[:j] + ru[i + 1:]
        rotations[u] = tuple(merged)
        del rotations[v]
        del edges[bad]
        del colors[v]
        for nm, (x, y) in list(edges.items()):
            if x == v or y == v:
                edges[nm] = (u if x == v else x, u if y == v else y)


def cell_from_decorated_permutation(window):
    """Reduced plabic graph whose trip permutation is the given window."""
    n = len(window)
    for i, w in enumerate(window, start=1):
        if not i <= w <= i + n:
            raise ValueError(f"window entry {w} escapes [{i}, {i + n}]")
    window_k(window)
    base, peels = _peel_bridges(window)
    colors, edges, rotations = {}, {}, {}
    markers = tuple(range(1, n + 1))
    for t in range(1, n + 1):
        if base[t - 1] == t + n:
            colors[f"lp{t}"] = "w"
            edges[f"lpe{t}"] = (t, f"lp{t}")
            rotations[t] = (f"lpe{t}",)
            rotations[f"lp{t}"] = (f"lpe{t}",)
        else:
            rotations[t] = ()

    for s, (i, j) in enumerate(reversed(peels), start=1):
        wv, bv = f"bw{s}", f"bb{s}"
        colors[wv], colors[bv] = "w", "b"
        br = f"be{s}"
        edges[br] = (wv, bv)
        for v, m in ((wv, i), (bv, j)):
            leg = f"bl{v}"
            old = rotations[m][0] if rotations[m] else None
            if old is not None:
                ou, ov = edges[old]
                h = ov if ou == m else ou
                # a dangling lollipop of the opposite color would force its
                # edge into every matching and wreck the matroid; drop it
                if (colors.get(h) is not None and colors[h] != colors[v]
                        and len(rotations[h]) == 1):
                    del edges[old], rotations[h], colors[h]
                    old = None
            edges[leg] = (m, v)
            if old is not None:
                ou, ov = edges[old]
                edges[old] = (v if ou == m else ou, v if ov == m else ov)
            rotations[m] = (leg,)
            if v == wv:
                rotations[v] = (leg, br) + ((old,) if old else ())
            else:
                rotations[v] = (leg,) + ((old,) if old else ()) + (br,)

    _contract_unicolor(colors, edges, rotations)

    # boundary must attach to whites: pad black-boundary legs with a white
    for m in markers:
        rot = rotations.get(m, ())
        if rot and colors.get(
                edges[rot[0]][0] if edges[rot[0]][1] == m
                else edges[rot[0]][1]) == "b":
            name = rot[0]
            u, v = edges[name]
            other = u if v == m else v
            pad = f"pad{m}"
            colors[pad] = "w"
            edges[name] = (pad, other)
            pe = f"pade{m}"
            edges[pe] = (m, pad)
            rotations[m] = (pe,)
            rotations[pad] = (pe, name)

    G = PlabicGraph(markers, colors, edges, rotations)
    G.assert_valid()
    got = G.window()
    if got != tuple(window):
        raise AssertionError(f"trip permutation self-check failed: "
                             f"{got} != {tuple(window)}")
    # trips alone do not see the matroid; k and reducedness pin it down
    if G.k() != window_k(window):
        raise AssertionError(f"bridge stack has k={G.k()}, "
                             f"window wants {window_k(window)}")
    if not G.is_reduced():
        raise AssertionError("bridge stack is not reduced")
    return G
