"""Derivation loops between hyperedges and their grid displacement.

Hyperedge ``e`` can feed ``f`` through a node ``o`` that is outgoing in ``e``
and incoming in ``f``.  Gluing ``f`` onto that copy of ``o`` shifts ``f``'s
canonical layout by ``pos_e(o) - pos_f(o)`` relative to ``e``'s.  A loop is a
closed walk of such feeds; it is strong when the shifts add up to zero, so
that the last hyperedge would be glued exactly on top of the first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from ..automaton import SAHypergraphAutomaton


@dataclass(frozen=True)
class StrongLoopReport:
    """A loop ``cycle[0] -> ... -> cycle[-1] == cycle[0]`` with one witness node per step."""

    cycle: tuple
    displacement: tuple
    witnesses: tuple

    @property
    def strong(self) -> bool:
        return self.displacement == (0, 0)

    def to_json(self) -> dict:
        return {"cycle": list(self.cycle), "displacement": list(self.displacement), "strong": self.strong}


def feed_arcs(A: SAHypergraphAutomaton) -> dict:
    """``(e, f) -> [(o, shift), ...]`` for every node ``o`` outgoing in ``e`` and incoming in ``f``."""
    arcs = {}
    for e in A.hyperedges:
        pe = A.edge_embedding(e)
        if pe is None:
            continue
        for f in A.hyperedges:
            pf = A.edge_embedding(f)
            if pf is None:
                continue
            for o in sorted(e.outgoing & f.incoming, key=str):
                shift = (pe[o][0] - pf[o][0], pe[o][1] - pf[o][1])
                arcs.setdefault((e.id, f.id), []).append((o, shift))
    return arcs


def find_loops(A: SAHypergraphAutomaton) -> list:
    """Every simple cycle of the feed graph, once per distinct displacement.

    Cycles are rotated to start at the hyperedge listed first in ``A``.
    """
    arcs = feed_arcs(A)
    order = {e.id: k for k, e in enumerate(A.hyperedges)}
    graph = nx.DiGraph()
    graph.add_nodes_from(order)
    graph.add_edges_from(arcs)
    reports = {}
    for cycle in nx.simple_cycles(graph):
        start = min(range(len(cycle)), key=lambda k: order[cycle[k]])
        cycle = cycle[start:] + cycle[:start]
        closed = tuple(cycle) + (cycle[0],)
        steps = [arcs[a, b] for a, b in zip(closed, closed[1:])]
        for choice in itertools.product(*steps):
            dr = sum(shift[0] for _, shift in choice)
            dc = sum(shift[1] for _, shift in choice)
            key = (closed, (dr, dc))
            if key not in reports:
                reports[key] = StrongLoopReport(closed, (dr, dc), tuple(o for o, _ in choice))
    return sorted(reports.values(), key=lambda r: (len(r.cycle), [order[e] for e in r.cycle], r.displacement))


def find_strong_loops(A: SAHypergraphAutomaton) -> list:
    return [r for r in find_loops(A) if r.strong]


def loop_footprints(A: SAHypergraphAutomaton, report: StrongLoopReport) -> list:
    """Cells covered by each hyperedge of the loop when glued one after another.

    The first hyperedge sits at its canonical layout; each next one is placed
    so that the witness node lands where the previous hyperedge put it.
    """
    placed = []
    offset = (0, 0)
    for k, ident in enumerate(report.cycle):
        emb = A.edge_embedding(ident)
        if k:
            prev = A.edge_embedding(report.cycle[k - 1])
            o = report.witnesses[k - 1]
            here = (prev[o][0] + offset[0], prev[o][1] + offset[1])
            offset = (here[0] - emb[o][0], here[1] - emb[o][1])
        placed.append(frozenset((x, (r + offset[0], c + offset[1])) for x, (r, c) in emb.items()))
    return placed
