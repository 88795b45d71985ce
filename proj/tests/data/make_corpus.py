"""Regenerates the reference graph6 data with networkx.

graphs_upto7.g6   every graph on 1..7 vertices up to isomorphism (graph atlas)
graph6_corpus.txt 100 random graphs: graph6, vertex count, edge list
"""
import random
from pathlib import Path

import networkx as nx

here = Path(__file__).parent


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


with open(here / "graphs_upto7.g6", "w") as f:
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1:
            f.write(g6(g) + "\n")

rng = random.Random(4711)
with open(here / "graph6_corpus.txt", "w") as f:
    for i in range(100):
        n = [1, 2, 5, 7, 8, 12, 20, 33, 62][i % 9] if i % 3 else rng.randint(1, 62)
        g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
        edges = " ".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in g.edges()))
        f.write(f"{g6(g)}\t{n}\t{edges}\n")
