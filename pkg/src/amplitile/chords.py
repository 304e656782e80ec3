"""Chord diagrams on a marker circle, recipes, and generalized chords.

Chords are quadruples (a, b, c, d) with b and d the markers following a and c;
they start in (a, b), end in (c, d), and never occupy the last marker. Diagrams
are kept in canonical label order: sort by end, ties by start descending, which
makes each D_j the rightmost top chord of {D_1, ..., D_j}.
"""

import json
from dataclasses import dataclass, field
from math import comb

__all__ = [
    "ChordDiagram", "Step", "RecipeNode", "Recipe",
    "narayana", "enumerate_chord_diagrams", "recipe_from_chord_diagram",
    "chords_to_json", "chords_from_json", "recipe_to_json", "recipe_from_json",
]


def narayana(n, k):
    """Number of chord diagrams with k chords on n markers."""
    if k < 0 or n < 4:
        return 1 if k == 0 and n >= 0 else 0
    return comb(n - 4, k) * comb(n - 3, k) // (k + 1)


class ChordDiagram:
    """A set of k noncrossing chords with distinct starts on markers 1..n."""

    def __init__(self, n, chords, markers=None):
        self.n = int(n)
        self.markers = tuple(sorted(markers)) if markers else tuple(range(1, n + 1))
        if len(self.markers) < 4 and chords:
            raise ValueError("not enough markers for a chord")
        pos = {m: i for i, m in enumerate(self.markers)}
        self.chords = tuple(sorted((tuple(ch) for ch in chords),
                                   key=lambda ch: (pos[ch[2]], -pos[ch[0]])))
        self._pos = pos
        self._validate()

    @property
    def k(self):
        return len(self.chords)

    def _validate(self):
        pos, last = self._pos, self.markers[-1]
        starts = set()
        for a, b, c, d in self.chords:
            for x in (a, b, c, d):
                if x not in pos:
                    raise ValueError(f"marker {x} not in diagram")
            if self.markers[pos[a] + 1] != b or self.markers[pos[c] + 1] != d:
                raise ValueError(f"chord {(a, b, c, d)}: b, d must follow a, c")
            if not (pos[a] < pos[b] < pos[c] < pos[d]) or d == last:
                raise ValueError(f"chord {(a, b, c, d)} out of range")
            if a in starts:
                raise ValueError(f"two chords start at {a}")
            starts.add(a)
        for i in range(len(self.chords)):
            for j in range(len(self.chords)):
                ai, ci = self.chords[i][0], self.chords[i][2]
                aj, cj = self.chords[j][0], self.chords[j][2]
                if pos[ai] < pos[aj] < pos[ci] < pos[cj]:
                    raise ValueError(
                        f"chords {self.chords[i]} and {self.chords[j]} cross")

    # nesting ------------------------------------------------------------
    # spans are the position intervals [b, c]; parent = minimal container

    def _span(self, i):
        _, b, c, _ = self.chords[i - 1]
        return self._pos[b], self._pos[c]

    def parent(self, i):
        """Label of the minimal chord containing D_i, or None."""
        bi, ci = self._span(i)
        best, width = None, None
        for j in range(1, self.k + 1):
            if j == i:
                continue
            bj, cj = self._span(j)
            if bj <= bi and ci <= cj:
                if width is None or cj - bj < width:
                    best, width = j, cj - bj
        return best

    def children(self, i):
        return [j for j in range(1, self.k + 1) if self.parent(j) == i]

    def is_sticky_child(self, i):
        """D_i starts right where its parent starts, a_i == b_parent."""
        p = self.parent(i)
        return p is not None and self.chords[i - 1][0] == self.chords[p - 1][1]

    def is_same_end_child(self, i):
        p = self.parent(i)
        return p is not None and self.chords[i - 1][2:] == self.chords[p - 1][2:]

    def has_sticky_child(self, i):
        return any(self.is_sticky_child(j) for j in self.children(i))

    def has_same_end_child(self, i):
        return any(self.is_same_end_child(j) for j in self.children(i))

    def same_end_children(self, i):
        return [j for j in self.children(i) if self.is_same_end_child(j)]

    def sticky_children(self, i):
        return [j for j in self.children(i) if self.is_sticky_child(j)]

    def chords_ending_at_start_of(self, i):
        """Labels j with (c_j, d_j) == (a_i, b_i)."""
        ai, bi = self.chords[i - 1][0], self.chords[i - 1][1]
        return [j for j in range(1, self.k + 1)
                if self.chords[j - 1][2] == ai and self.chords[j - 1][3] == bi]

    def head_to_tail_sibling(self, i):
        """The chord ending at D_i's start with the same parent, or None."""
        cands = [j for j in self.chords_ending_at_start_of(i)
                 if self.parent(j) == self.parent(i)]
        if len(cands) > 1:
            raise AssertionError("several head-to-tail siblings")
        return cands[0] if cands else None

    def chord_starting_at_end_of(self, i):
        """The chord with (a_j, b_j) == (c_i, d_i), or None (starts are unique)."""
        ci, di = self.chords[i - 1][2], self.chords[i - 1][3]
        for j in range(1, self.k + 1):
            if self.chords[j - 1][0] == ci and self.chords[j - 1][1] == di:
                return j
        return None

    def __eq__(self, other):
        return (isinstance(other, ChordDiagram) and self.n == other.n
                and self.markers == other.markers and self.chords == other.chords)

    def __hash__(self):
        return hash((self.n, self.markers, self.chords))

    def __repr__(self):
        return f"ChordDiagram(n={self.n}, chords={list(self.chords)})"


def enumerate_chord_diagrams(n, k):
    """Yield every diagram in CD_{n,k} on markers 1..n, in canonical order."""
    cands = [(a, c) for a in range(1, n - 2) for c in range(a + 2, n - 1)]
    cands.sort(key=lambda ac: (ac[1], -ac[0]))
    out = []

    def grow(idx, chosen, starts):
        if len(chosen) == k:
            out.append(ChordDiagram(
                n, [(a, a + 1, c, c + 1) for a, c in chosen]))
            return
        need = k - len(chosen)
        for t in range(idx, len(cands) - need + 1):
            a, c = cands[t]
            if a in starts:
                continue
            if any(a2 < a < c2 < c for a2, c2 in chosen):
                continue
            chosen.append((a, c))
            starts.add(a)
            grow(t + 1, chosen, starts)
            chosen.pop()
            starts.discard(a)

    grow(0, [], set())
    return out


# recipes ----------------------------------------------------------------


@dataclass(frozen=True)
class Step:
    """One BCFW product step: butterfly, then pre-insertion, cyc, refl."""
    butterfly: tuple
    pre: tuple = ()
    cyc: int = 0
    refl: int = 0


@dataclass
class RecipeNode:
    step: Step
    left: "RecipeNode | None" = None
    right: "RecipeNode | None" = None
    # assigned by Recipe
    markers: tuple = field(default=(), compare=False)
    NL: tuple = field(default=(), compare=False)
    NR: tuple = field(default=(), compare=False)
    index: int = field(default=0, compare=False)


def _cyc_map(N, r):
    m = len(N)
    r %= m
    return {N[i]: N[(i + r) % m] for i in range(m)}


def _refl_map(N):
    m = len(N)
    return {N[i]: N[m - 1 - i] for i in range(m)}


class Recipe:
    """A recipe tree with marker sets assigned top down from the root."""

    def __init__(self, root, markers=None):
        self.root = root
        if markers is None:
            top = max(max(root.step.butterfly),
                      max(root.step.pre, default=0))
            markers = range(1, top + 1)
        self.markers = tuple(sorted(markers))
        self.n = self.markers[-1]
        self.nodes = []
        self._assign(root, self.markers)
        for i, node in enumerate(self.nodes, start=1):
            node.index = i
        self._left_idx = {}
        self._right_idx = {}
        self._collect_subtrees(root)

    @property
    def k(self):
        return len(self.nodes)

    def _assign(self, node, N):
        N = tuple(sorted(N))
        step = node.step
        nprod = tuple(x for x in N if x not in set(step.pre))
        a, b, c, d, nn = step.butterfly
        pset = set(nprod)
        if not {a, b, c, d, nn} <= pset:
            raise ValueError(f"butterfly {step.butterfly} not in markers {nprod}")
        idx = {m: i for i, m in enumerate(nprod)}
        if idx[b] != idx[a] + 1 or idx[d] != idx[c] + 1 or nn != nprod[-1] \
                or idx[nn] != idx[d] + 1 or not idx[a] < idx[b] < idx[c]:
            raise ValueError(f"butterfly {step.butterfly} malformed on {nprod}")
        NL = tuple(x for x in nprod if x <= b) + (nn,)
        NR = tuple(x for x in nprod if b <= x <= d) + (nn,)
        node.markers, node.NL, node.NR = N, NL, NR
        if node.left is not None:
            self._assign(node.left, NL)
        if node.right is not None:
            self._assign(node.right, NR)
        self.nodes.append(node)

    def _collect_subtrees(self, node):
        def indices(sub):
            if sub is None:
                return frozenset()
            return (indices(sub.left) | indices(sub.right)
                    | frozenset([sub.index]))

        self._left_idx[node.index] = indices(node.left)
        self._right_idx[node.index] = indices(node.right)
        if node.left is not None:
            self._collect_subtrees(node.left)
        if node.right is not None:
            self._collect_subtrees(node.right)

    def left_indices(self, i):
        return self._left_idx[i]

    def right_indices(self, i):
        return self._right_idx[i]

    def node(self, i):
        return self.nodes[i - 1]

    def step_transport(self, node):
        """Marker map of the node's cyc^r then refl^s on its marker set."""
        tau = _cyc_map(node.markers, node.step.cyc)
        if node.step.refl % 2:
            mirror = _refl_map(node.markers)
            tau = {x: mirror[y] for x, y in tau.items()}
        return tau

    def generalized_chords(self):
        """Final 5-tuples (a~, b~, c~, d~, n~) per step, keyed by label."""
        gen = {}

        def go(node):
            if node.left is not None:
                go(node.left)
            if node.right is not None:
                go(node.right)
            gen[node.index] = node.step.butterfly
            tau = self.step_transport(node)
            for i in (self._left_idx[node.index]
                      | self._right_idx[node.index] | {node.index}):
                gen[i] = tuple(tau[x] for x in gen[i])

        go(self.root)
        return gen

    def condensability(self):
        """{(i, letter): bool} for letters a, b, c, d, n (Def of condensable)."""
        gen = self.generalized_chords()
        out = {}
        for i in range(1, self.k + 1):
            at, bt, ct, dt, nt = gen[i]
            right = [set(gen[j]) for j in self._right_idx[i]]
            left = [set(gen[j]) for j in self._left_idx[i]]
            out[(i, "a")] = all(not {bt, nt} <= g for g in right)
            out[(i, "b")] = all(not {at, bt} <= g for g in left)
            out[(i, "c")] = True
            out[(i, "d")] = all(not {ct, dt} <= g for g in right)
            out[(i, "n")] = all(not {dt, nt} <= g for g in right)
        return out

    def steps(self):
        """Steps in post order; step i builds chord i."""
        return [node.step for node in self.nodes]


def recipe_from_chord_diagram(D):
    """Recipe whose step i produces chord D_i of the diagram."""

    def build(chs, markers):
        if not chs:
            return None
        pos = {m: i for i, m in enumerate(markers)}
        chs = sorted(chs, key=lambda ch: (pos[ch[2]], -pos[ch[0]]))
        a, b, c, d = chs[-1]
        nn = markers[-1]
        pre = tuple(x for x in markers if d < x < nn)
        left = [ch for ch in chs[:-1] if ch[2] <= b]
        right = [ch for ch in chs[:-1] if ch[1] >= b and ch[2] <= d]
        if len(left) + len(right) != len(chs) - 1:
            raise ValueError("chords do not split at the top chord")
        NL = tuple(x for x in markers if x <= b) + (nn,)
        NR = tuple(x for x in markers if b <= x <= d) + (nn,)
        return RecipeNode(Step((a, b, c, d, nn), pre),
                          build(left, NL), build(right, NR))

    root = build(list(D.chords), list(D.markers))
    if root is None:
        raise ValueError("empty diagram has no recipe")
    rec = Recipe(root, D.markers)
    got = [node.step.butterfly[:4] for node in rec.nodes]
    if got != [ch for ch in D.chords]:
        raise AssertionError("steps do not match chord labels")
    return rec


# serialization ------------------------------------------------------------


def chords_to_json(D):
    return json.dumps({"n": D.n, "markers": list(D.markers),
                       "chords": [list(ch) for ch in D.chords]}, indent=2)


def chords_from_json(text):
    obj = json.loads(text)
    return ChordDiagram(obj["n"], [tuple(ch) for ch in obj["chords"]],
                        obj.get("markers"))


def _node_to_obj(node):
    if node is None:
        return None
    return {
        "left": _node_to_obj(node.left),
        "right": _node_to_obj(node.right),
        "final": {
            "butterfly": list(node.step.butterfly),
            "pre": list(node.step.pre),
            "cyc": node.step.cyc,
            "refl": node.step.refl,
        },
    }


def _node_from_obj(obj):
    if obj is None:
        return None
    f = obj["final"]
    return RecipeNode(
        Step(tuple(f["butterfly"]), tuple(f.get("pre", ())),
             int(f.get("cyc", 0)), int(f.get("refl", 0))),
        _node_from_obj(obj.get("left")), _node_from_obj(obj.get("right")))


def recipe_to_json(rec):
    return json.dumps({"n": rec.n, "tree": _node_to_obj(rec.root)}, indent=2)


def recipe_from_json(text):
    obj = json.loads(text)
    root = _node_from_obj(obj["tree"])
    n = obj.get("n")
    return Recipe(root, range(1, n + 1) if n else None)
