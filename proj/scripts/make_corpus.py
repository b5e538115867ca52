#!/usr/bin/env python3
"""Write connected-graph corpora (one graph6 record per line) from the networkx atlas.

The atlas holds every graph on at most 7 vertices up to isomorphism, so the
output is exhaustive and duplicate-free for n <= 7.
"""
import argparse
import pathlib

import networkx as nx


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=pathlib.Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    by_n = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        by_n.setdefault(n, []).append(g)
    for n, graphs in sorted(by_n.items()):
        path = args.outdir / f"connected_n{n}.g6"
        with path.open("w") as fh:
            for g in graphs:
                g = nx.convert_node_labels_to_integers(g)
                fh.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
        print(path, len(graphs))


if __name__ == "__main__":
    main()
