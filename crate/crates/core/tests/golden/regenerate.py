"""Brute-force oracle for the figure fixtures in this directory.

Builds each semigroup table and graph directly from the definitions, with
no code shared with the Rust crate, and writes one JSON file per graph in
the crate's export schema. Run from this directory: python3 regenerate.py
"""
import itertools
import json


def monogenic(m, r):
    n = m + r - 1

    def red(s):
        while s > n:
            s -= r
        return s

    return [[red(i + j) - 1 for j in range(1, n + 1)] for i in range(1, n + 1)]


def zmult(n):
    return [[(x * y) % n for y in range(n)] for x in range(n)]


def signs():
    vals = [-1, 0, 1]
    return [[vals.index(a * b) for b in vals] for a in vals]


def brandt(n):
    elems = [None] + [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def mul(p, q):
        if p is None or q is None or p[1] != q[0]:
            return None
        return (p[0], q[1])

    return [[elems.index(mul(p, q)) for q in elems] for p in elems]


def powers(t, x):
    out, p = [], x
    while p not in out:
        out.append(p)
        p = t[p][x]
    return set(out)


def closure(t, gens):
    s = set(gens)
    while True:
        new = {t[a][b] for a in s for b in s} - s
        if not new:
            return s
        s |= new


def graph(t, kind):
    n = len(t)
    edges = []
    for x, y in itertools.combinations(range(n), 2):
        if kind == "power":
            adj = x in powers(t, y) or y in powers(t, x)
        elif kind == "cyclic":
            c = closure(t, [x, y])
            adj = any(powers(t, z) == c for z in c)
        elif kind == "enhanced":
            adj = any(x in powers(t, z) and y in powers(t, z) for z in range(n))
        else:
            adj = t[x][y] == t[y][x]
        if adj:
            edges.append([x, y])
    return {"order": n, "kind": kind, "edges": edges}


FIXTURES = {
    "figure1": ("M(3,2)", monogenic(3, 2), ["enhanced", "cyclic"]),
    "figure2": ("M(2,6)", monogenic(2, 6), ["cyclic", "power"]),
    "figure3": ("Zmult(4)", zmult(4), ["commuting", "cyclic"]),
    "figure4": ("Signs", signs(), ["commuting", "enhanced"]),
    "figure5": ("B(2)", brandt(2), ["commuting", "power"]),
}

for fig, (construct, table, kinds) in FIXTURES.items():
    for kind in kinds:
        with open(f"{fig}_{kind}.json", "w") as f:
            json.dump(graph(table, kind), f, separators=(",", ":"))
            f.write("\n")
        print(fig, construct, kind, graph(table, kind)["edges"])
