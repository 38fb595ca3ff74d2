#!/usr/bin/env python3
"""Regenerate data/fixtures/*.json.

Each fixture is a 1-plane drawing: the abstract edge list, the crossing
pairs (crossing i becomes planarization vertex n+i) and the clockwise
neighbour order at every planarization vertex. Drawings come from a seeded
randomized search (planar subgraph, then route each leftover edge across
one uncrossed edge) filtered on the Table 1 flags, or are built directly.
The C++ classifier is what the tests trust; the flags here only steer the
search.

usage: tools/gen_fixtures.py [outdir]
"""
import itertools
import json
import random
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parent.parent


def lcf(n, jumps):
    edges, seen = [], set()
    for i in range(n):
        for t in ((i + 1) % n, (i + jumps[i % len(jumps)]) % n):
            k = (min(i, t), max(i, t))
            if k not in seen:
                seen.add(k)
                edges.append(k)
    return edges


def gp(n, k):
    outer = [(i, (i + 1) % n) for i in range(n)]
    spokes = [(i, n + i) for i in range(n)]
    inner = [(n + i, n + (i + k) % n) for i in range(n)]
    return [(min(a, b), max(a, b)) for a, b in outer + spokes + inner]


class Drawing:
    def __init__(self, n, edges, pairs, rot):
        self.n, self.edges, self.pairs, self.rot = n, edges, pairs, rot
        self.crossed = {}
        for i, (e, f) in enumerate(pairs):
            self.crossed[e] = self.crossed[f] = n + i

    def succ(self, x, y):
        r = self.rot[x]
        return r[(r.index(y) + 1) % len(r)]

    def walks(self, i):
        # boundary of each cell at the dummy, dummy left out
        x = self.n + i
        out = []
        for y in self.rot[x]:
            vs, es = [y], []
            a, b = x, y
            while True:
                c = self.succ(b, a)
                if c == x:
                    break
                vs.append(c)
                es.append(self.abstract(b, c))
                a, b = b, c
            out.append((vs, es))
        return out

    def abstract(self, a, b):
        for eid, (u, v) in enumerate(self.edges):
            if eid in self.crossed:
                d = self.crossed[eid]
                if {a, b} in ({u, d}, {d, v}):
                    return eid
            elif {a, b} == {u, v}:
                return eid
        raise KeyError((a, b))

    def poppy(self, i):
        vs_all, es_all = [], []
        for vs, es in self.walks(i):
            if any(v >= self.n for v in vs):
                return False
            vs_all += vs[:-1]
            es_all += es
        return len(set(vs_all)) == len(vs_all) and len(set(es_all)) == len(es_all)

    def ends(self, i):
        e, f = self.pairs[i]
        return set(self.edges[e]) | set(self.edges[f])

    def flags(self):
        k = len(self.pairs)
        es = set(map(frozenset, self.edges))
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges[e] for e in range(len(self.edges)) if e not in self.crossed)
        return dict(
            locmax=all(all(frozenset(p) in es for p in itertools.combinations(self.ends(i), 2))
                       for i in range(k)),
            poppy=all(self.poppy(i) for i in range(k)),
            conn=nx.is_connected(g),
            crossings=k,
        )

    def balanced(self):
        # two clockwise and two counter-clockwise skirt walks per crossing,
        # with every shared edge oriented consistently
        walks = []
        for i in range(len(self.pairs)):
            for vs, es in self.walks(i):
                walks.append([(es[j], vs[j], vs[j + 1]) for j in range(len(es))])
        occ = defaultdict(list)
        for w, steps in enumerate(walks):
            for e, a, b in steps:
                occ[e].append((w, int(a == self.edges[e][0])))
        parent = list(range(len(walks)))
        par = [0] * len(walks)

        def find(a):
            if parent[a] == a:
                return a, 0
            r, p = find(parent[a])
            parent[a] = r
            par[a] ^= p
            return r, par[a]

        for lst in occ.values():
            for (w1, t1), (w2, t2) in zip(lst, lst[1:]):
                (r1, p1), (r2, p2) = find(w1), find(w2)
                if r1 == r2:
                    if p1 ^ p2 != t1 ^ t2:
                        return False
                else:
                    parent[r1] = r2
                    par[r1] = p1 ^ p2 ^ t1 ^ t2
        roots = sorted({find(w)[0] for w in range(len(walks))})
        for bits in itertools.product((0, 1), repeat=len(roots)):
            a = dict(zip(roots, bits))
            if all(sum(a[find(w)[0]] ^ find(w)[1] for w in range(4 * i, 4 * i + 4)) == 2
                   for i in range(len(self.pairs))):
                return True
        return False

    def skeleton_components(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges[e] for e in range(len(self.edges)) if e not in self.crossed)
        return {v: c for c, comp in enumerate(nx.connected_components(g)) for v in comp}


def planarize(n, edges, pairs, omit=()):
    """Drawing with the given crossings, or None. Each crossing is modelled
    by a dummy ringed by four helper nodes, which pins the alternation."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    crossed = set()
    for e, f in pairs:
        if e in crossed or f in crossed or set(edges[e]) & set(edges[f]):
            return None
        crossed |= {e, f}
    for eid, (u, v) in enumerate(edges):
        if eid not in crossed and eid not in omit:
            g.add_edge(u, v)
    helper = {}
    for i, (e, f) in enumerate(pairs):
        d = n + i
        hs = [("h", i, j) for j in range(4)]
        ends = [edges[e][0], edges[f][0], edges[e][1], edges[f][1]]
        for h, z in zip(hs, ends):
            g.add_edge(z, h)
            g.add_edge(h, d)
            helper[h] = (z, d)
        for j in range(4):
            g.add_edge(hs[j], hs[(j + 1) % 4])
    ok, emb = nx.check_planarity(g)
    if not ok:
        return None
    if omit:
        return True
    rot = {}
    for x in list(range(n)) + [n + i for i in range(len(pairs))]:
        nbs = []
        for y in emb.neighbors_cw_order(x):
            if isinstance(y, tuple):
                z, d = helper[y]
                nbs.append(d if x == z else z)
            else:
                nbs.append(y)
        rot[x] = nbs
    return Drawing(n, edges, pairs, rot)


def search(n, edges, want, seed, tries=400, skips=(0.0,), maxcross=None, extra=None):
    rnd = random.Random(seed)
    for skip in skips:
        for _ in range(tries):
            order = list(range(len(edges)))
            rnd.shuffle(order)
            g = nx.Graph()
            g.add_nodes_from(range(n))
            planar, rest = [], []
            for e in order:
                g.add_edge(*edges[e])
                if rnd.random() >= skip and nx.check_planarity(g)[0]:
                    planar.append(e)
                else:
                    g.remove_edge(*edges[e])
                    rest.append(e)
            pairs, used, ok = [], set(), True
            for e in rest:
                cands = [f for f in planar if f not in used and not set(edges[e]) & set(edges[f])]
                rnd.shuffle(cands)
                placed = False
                for f in cands:
                    done = {x for p in pairs for x in p} | {e}
                    if planarize(n, edges, pairs + [(e, f)], omit=set(rest) - done) is not None:
                        pairs.append((e, f))
                        used |= {e, f}
                        placed = True
                        break
                if not placed:
                    ok = False
                    break
            if not ok or (maxcross and len(pairs) > maxcross):
                continue
            d = planarize(n, edges, pairs)
            fl = d.flags()
            if all(fl[k] == v for k, v in want.items()) and (extra is None or extra(d)):
                return d
    raise SystemExit(f"no drawing found for {want}")


def packs(d, k):
    # Nash-Williams over all partitions of the skeleton components
    comp = d.skeleton_components()
    nq = len(set(comp.values()))
    q = []
    for e, f in d.pairs:
        ce = frozenset(comp[v] for v in d.edges[e])
        cf = frozenset(comp[v] for v in d.edges[f])
        if len(ce) == 2 and ce == cf:
            q += [tuple(ce)] * 2
    if nq < 2 or nq > 8:
        return False

    def partitions(s):
        if not s:
            yield []
            return
        for p in partitions(s[1:]):
            for i in range(len(p)):
                yield p[:i] + [[s[0]] + p[i]] + p[i + 1:]
            yield [[s[0]]] + p

    for p in partitions(list(range(nq))):
        blk = {v: i for i, b in enumerate(p) for v in b}
        if sum(1 for a, b in q if blk[a] != blk[b]) < k * (len(p) - 1):
            return False
    return True


def subdivided_tutte():
    """Tutte 8-cage drawing with four doubly crossed edges; one vertex goes
    between the two crossings of each such edge."""
    src = json.loads((ROOT / "data/sources/tutte8cage_drawing.json").read_text())
    n0 = 30
    base = lcf(n0, [-13, -9, 7, -7, 9, 13])
    paths = {int(k): v for k, v in src["path"].items()}
    rot = {int(k): list(v) for k, v in src["rot"].items()}
    edges, seq = [], []
    nxt = n0
    for eid, (u, v) in enumerate(base):
        p = list(paths[eid])
        if p[0] != u:
            p.reverse()
        assert p[0] == u and p[-1] == v
        if len(p) == 4:
            s = nxt
            nxt += 1
            a, b = p[1], p[2]
            rot[a][rot[a].index(b)] = s
            rot[b][rot[b].index(a)] = s
            rot[s] = [a, b]
            p = [u, a, s, b, v]
        assert len(p) <= 5
        seq.append(p)
    n = nxt
    owner = {}
    for p in seq:
        idx = [i for i, x in enumerate(p) if x < n]
        for a, b in zip(idx, idx[1:]):
            eid = len(edges)
            edges.append((p[a], p[b]))
            for x in p[a + 1:b]:
                owner.setdefault(x, []).append(eid)
    dummies = sorted(owner)
    pairs = [tuple(owner[x]) for x in dummies]
    assert all(len(pr) == 2 for pr in pairs)
    ren = {x: n + i for i, x in enumerate(dummies)}
    rn = lambda x: ren.get(x, x)
    out = {rn(x): [rn(y) for y in ys] for x, ys in rot.items()}
    return Drawing(n, edges, pairs, out)


MCGEE_PAIRS = [(17, 22), (9, 28), (2, 32), (0, 18), (4, 10), (25, 29), (14, 24), (12, 30)]
NAURU_PAIRS = [(7, 14), (9, 34), (21, 26), (4, 11), (3, 30), (16, 31), (2, 12), (20, 29)]
# skeleton has two components joined by six crossings (3 trees pack)
DESARGUES_PAIRS = [(29, 9), (0, 2), (5, 3), (7, 24), (11, 15), (26, 27)]


def fnv1a64(text):
    h = 0xCBF29CE484222325
    for b in text.encode():
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def dump(obj):
    # same bytes as nlohmann::json::dump() on the parsed object
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def fixture(name, figure, d, note=""):
    body = {
        "name": name,
        "figure": figure,
        "graph": {"vertices": d.n, "edges": [list(e) for e in d.edges]},
        "crossings": [list(p) for p in d.pairs],
        "rotation": {str(x): d.rot[x] for x in sorted(d.rot)},
    }
    if note:
        body["note"] = note
    body["checksum"] = fnv1a64(dump(body))
    return body


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "data/fixtures"
    out.mkdir(parents=True, exist_ok=True)
    k = lambda n: [(i, j) for i in range(n) for j in range(i + 1, n)]
    kab = lambda a, b: [(i, a + j) for i in range(a) for j in range(b)]
    q4 = sorted({(min(v, v ^ 1 << b), max(v, v ^ 1 << b)) for v in range(16) for b in range(4)})
    cube = sorted({(min(v, v ^ 1 << b), max(v, v ^ 1 << b)) for v in range(8) for b in range(3)})
    faces = [[v for v in range(8) if (v >> b & 1) == s] for b in range(3) for s in (0, 1)]
    diag = []
    for f in faces:
        a = f[0]
        opp = next(v for v in f if bin(v ^ a).count("1") == 2 and v != a)
        rest = [v for v in f if v not in (a, opp)]
        diag.append(((a, opp), tuple(rest)))
    cd_edges = cube + [e for pr in diag for e in pr]
    cd_pairs = [(len(cube) + 2 * i, len(cube) + 2 * i + 1) for i in range(6)]
    # vertices of K_{3,4}: figure label L is vertex L-1; side A = labels 2,4,6
    k34 = [(a - 1, b - 1) for a in (2, 4, 6) for b in (1, 3, 5, 7)]

    jobs = [
        ("K6", "fig:K6", lambda: search(6, k(6), dict(poppy=True, locmax=True, conn=True), 1,
                                        maxcross=3)),
        ("K_{3,4}", "fig:goodOrientation(a)",
         lambda: search(7, k34, dict(poppy=True, locmax=False, conn=True), 1,
                        extra=lambda d: d.balanced())),
        ("K_{4,4}", "fig:K44", lambda: search(8, kab(4, 4), dict(poppy=False, locmax=False,
                                                                 conn=False), 1)),
        ("Hypercube", "fig:q_4", lambda: search(16, q4, dict(poppy=False, locmax=False), 1)),
        ("Petersen", "fig:goodOrientation(b)",
         lambda: search(10, gp(5, 2), dict(poppy=True, locmax=False), 1,
                        extra=lambda d: not d.balanced())),
        ("Heawood", "fig:no3basis1", lambda: search(14, lcf(14, [5, -5]),
                                                    dict(poppy=True, locmax=False, conn=True), 1)),
        # pairs recorded from an earlier edge-insertion local search
        ("McGee", "fig:McGee", lambda: planarize(24, lcf(24, [12, 7, -7]), MCGEE_PAIRS)),
        ("Nauru", "fig:Nauru", lambda: planarize(24, lcf(24, [5, -9, 7, -7, 9, -5]), NAURU_PAIRS)),
        ("Franklin", "fig:Franklin", lambda: search(12, lcf(12, [5, -5]),
                                                    dict(poppy=False, locmax=False, conn=False),
                                                    1)),
        ("Desargues", "fig:Desargues", lambda: planarize(20, gp(10, 3), DESARGUES_PAIRS)),
        ("SubdividedTutte8Cage", "fig:no3basis2", subdivided_tutte),
        ("CubeDiagonals", "optimal", lambda: planarize(8, cd_edges, cd_pairs)),
        ("K4Crossing", "crossing", lambda: planarize(4, k(4), [(1, 4)])),
    ]
    only = set(sys.argv[2:])
    for name, fig, make in jobs:
        slug = "".join(c for c in name if c.isalnum())
        if only and slug not in only:
            continue
        d = make()
        (out / f"{slug}.json").write_text(json.dumps(fixture(name, fig, d), indent=1) + "\n")
        print(f"{slug}: n={d.n} m={len(d.edges)} {d.flags()}", flush=True)


if __name__ == "__main__":
    main()
