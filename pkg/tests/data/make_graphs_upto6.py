"""Regenerate graphs_upto6.g6: every non-isomorphic simple graph on 1..6
vertices, one graph6 line each, sorted by (order, graph6 string).

Enumeration is delegated to the networkx Graph Atlas (graphs up to 7
vertices); run ``python make_graphs_upto6.py`` from this directory. The
test suite independently re-verifies the stream for orders <= 5 by
brute-force canonicalisation, and checks the order-6 census count.
"""

import networkx as nx


def main() -> None:
    lines = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if not 1 <= n <= 6:
            continue
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        lines.append((n, nx.to_graph6_bytes(h, header=False).decode().strip()))
    lines.sort()
    with open("graphs_upto6.g6", "w") as fh:
        for _, s in lines:
            fh.write(s + "\n")
    print(f"wrote {len(lines)} graphs")


if __name__ == "__main__":
    main()
