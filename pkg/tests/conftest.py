"""Shared helpers: named small graphs and the seeded instance families."""

import random

from hypothesis import settings

import cactuskit as ck

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

TRIANGLE_EDGES = ((0, 1), (1, 2), (2, 0))
K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
BOWTIE_EDGES = ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2))


def triangle():
    return ck.build_graph(3, TRIANGLE_EDGES)


def k4():
    return ck.build_graph(4, K4_EDGES)


def bowtie():
    return ck.build_graph(5, BOWTIE_EDGES)


def cycle_chord6():
    return ck.gen_instance("cycle-chord", 6)


def complete_graph(n):
    return ck.build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n):
    return ck.build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return outer + inner + spokes


def random_connected(rng, n_lo=4, n_hi=8, m_cap=20):
    """Random connected graph: uniform tree plus a capped batch of extras."""
    n = rng.randint(n_lo, n_hi)
    max_extra = n * (n - 1) // 2 - (n - 1)
    extra = rng.randint(0, min(max_extra, m_cap - (n - 1)))
    return ck.gen_instance("random", n, extra_edges=extra, seed=rng.randrange(1 << 30))


def shared_edc_family():
    """The 200-instance agreement family; the fault-detection scan reuses it.

    Every fourth instance is cactus-plus so that optima with large cycle
    blocks occur; a wrong answer confined to big blocks cannot hide behind
    the small-subset base case.
    """
    for trial in range(200):
        rng = random.Random(9000 + trial)
        n = rng.randint(4, 8)
        max_extra = n * (n - 1) // 2 - (n - 1)
        kind = "cactus-plus" if trial % 4 == 3 else "random"
        cap = min(max_extra, 20 - (n - 1)) if kind == "random" else 2
        extra = rng.randint(0, cap)
        g = ck.gen_instance(kind, n, extra_edges=extra, seed=5000 + trial)
        if g.m > 20:
            continue
        yield trial, g


def make_edge_minimal(trial):
    """Confirmed edge-minimal non-cactus with n <= 9, or (None, None).

    Strategy: take the dense block of a random non-cactus, then keep
    deleting single edges while the result stays connected and non-cactus;
    the fixpoint is checked for minimality before being accepted.
    """
    for attempt in range(60):
        rng = random.Random(trial * 997 + attempt)
        n = rng.randint(4, 9)
        max_extra = n * (n - 1) // 2 - (n - 1)
        extra = rng.randint(2, max(2, min(max_extra, 10)))
        try:
            g = ck.gen_instance("random", n, extra_edges=extra, seed=trial * 131 + attempt)
        except ck.InfeasibleParams:
            continue
        if ck.is_cactus(g).cactus:
            continue
        dec = ck.biconnected_blocks(g)
        core = next((b for b, k in zip(dec.blocks, dec.kinds) if k == ck.OTHER), None)
        if core is None:
            continue
        verts = sorted({v for e in core for v in g.edges[e]})
        g = ck.induced_subgraph(g, verts).graph
        changed = True
        while changed:
            changed = False
            for eid in range(g.m):
                h = ck.build_graph(g.n, [e for i, e in enumerate(g.edges) if i != eid])
                if ck.is_connected(h) and not ck.is_cactus(h).cactus:
                    g = h
                    changed = True
                    break
        rep = ck.check_minimal(g)
        if rep.is_noncactus and rep.is_edge_minimal:
            return g, rep
    return None, None


def kept_subgraph_is_spanning_cactus(g, kept_ids):
    """Re-verify an answer without trusting the solver's own checks."""
    h = ck.build_graph(g.n, [g.edges[e] for e in sorted(set(kept_ids))])
    return ck.is_connected(h) and ck.is_cactus(h).cactus
