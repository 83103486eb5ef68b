"""Catalog of irreducible finite Coxeter types and Coxeter-graph identification.

Node numbering follows Bourbaki, shifted to start at 0.  Reducible data are
written as products, e.g. ``"A1xA1"`` or ``"B3xA2"``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Mapping

_LABEL_RE = re.compile(r"^(?:([A-H])(\d+)|I2\((\d+)\))$")

_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}


class UnknownTypeError(ValueError):
    """Raised for labels outside the supported catalog."""


@dataclass(frozen=True)
class CoxeterDatum:
    label: str
    rank: int
    coxeter_matrix: tuple[tuple[int, ...], ...]
    components: tuple[str, ...]

    def edges(self) -> dict[tuple[int, int], int]:
        """Edges ``(i, j) -> m`` with i < j and m >= 3."""
        n = self.rank
        return {
            (i, j): self.coxeter_matrix[i][j]
            for i in range(n)
            for j in range(i + 1, n)
            if self.coxeter_matrix[i][j] > 2
        }

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1


def parse_irreducible(label: str) -> tuple[str, int]:
    """Split ``"B3"`` into ``("B", 3)``; ``"I2(5)"`` becomes ``("I", 5)``."""
    m = _LABEL_RE.match(label.strip())
    if not m:
        raise UnknownTypeError(f"unknown Coxeter type {label!r}")
    if m.group(3) is not None:
        mm = int(m.group(3))
        if mm != 5:
            raise UnknownTypeError(f"unsupported dihedral type {label!r} (only I2(5))")
        return "I", 5
    family, n = m.group(1), int(m.group(2))
    ok = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 3,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
        "H": n in (3, 4),
    }.get(family, False)
    if not ok:
        raise UnknownTypeError(f"unknown Coxeter type {label!r}")
    return family, n


def irreducible_edges(family: str, n: int) -> tuple[int, dict[tuple[int, int], int]]:
    """(rank, edges) of an irreducible catalog type."""
    if family == "I":
        return 2, {(0, 1): n}
    edges: dict[tuple[int, int], int] = {}
    if family == "A":
        edges = {(i, i + 1): 3 for i in range(n - 1)}
    elif family in "BC":
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 2, n - 1)] = 4
    elif family == "D":
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = 3
    elif family == "E":
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
    elif family == "F":
        edges = {(0, 1): 3, (1, 2): 4, (2, 3): 3}
    elif family == "G":
        edges = {(0, 1): 6}
    elif family == "H":
        edges = {(0, 1): 5}
        edges.update({(i, i + 1): 3 for i in range(1, n - 1)})
    return n, edges


def split_label(label: str) -> list[str]:
    parts = [p.strip() for p in label.split("x")]
    if not parts or any(not p for p in parts):
        raise UnknownTypeError(f"unknown Coxeter type {label!r}")
    return parts


def datum(label: str) -> CoxeterDatum:
    """Build the Coxeter datum for a (possibly reducible) label."""
    parts = split_label(label)
    blocks = []
    for p in parts:
        fam, n = parse_irreducible(p)
        blocks.append(irreducible_edges(fam, n))
    rank = sum(r for r, _ in blocks)
    mat = [[2] * rank for _ in range(rank)]
    for i in range(rank):
        mat[i][i] = 1
    off = 0
    for r, edges in blocks:
        for (i, j), m in edges.items():
            mat[off + i][off + j] = mat[off + j][off + i] = m
        off += r
    return CoxeterDatum(
        label="x".join(parts),
        rank=rank,
        coxeter_matrix=tuple(tuple(row) for row in mat),
        components=tuple(parts),
    )


def component_blocks(d: CoxeterDatum) -> list[tuple[str, range]]:
    """Irreducible components with their node index ranges."""
    out = []
    off = 0
    for p in d.components:
        fam, n = parse_irreducible(p)
        r = 2 if fam == "I" else n
        out.append((p, range(off, off + r)))
        off += r
    return out


def group_order(label: str) -> int:
    """Order of the Coxeter group of a (possibly reducible) type."""
    total = 1
    for p in split_label(label):
        fam, n = parse_irreducible(p)
        if fam == "A":
            total *= factorial(n + 1)
        elif fam in "BC":
            total *= 2 ** n * factorial(n)
        elif fam == "D":
            total *= 2 ** (n - 1) * factorial(n)
        elif fam == "E":
            total *= _E_ORDERS[n]
        elif fam == "F":
            total *= 1152
        elif fam == "G":
            total *= 12
        elif fam == "H":
            total *= 120 if n == 3 else 14400
        elif fam == "I":
            total *= 2 * n
    return total


# -- graph identification ---------------------------------------------------

Graph = Mapping[int, Mapping[int, int]]


def make_graph(nodes: Iterable[int], edges: Mapping[tuple[int, int], int]) -> dict[int, dict[int, int]]:
    g: dict[int, dict[int, int]] = {v: {} for v in nodes}
    for (i, j), m in edges.items():
        g[i][j] = m
        g[j][i] = m
    return g


def connected_components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(g):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph, nodes: Iterable[int] | None = None) -> bool:
    nodes = list(g if nodes is None else nodes)
    if not nodes:
        return False
    keep = set(nodes)
    sub = {v: {w: m for w, m in g[v].items() if w in keep} for v in keep}
    return len(connected_components(sub)) == 1


def _signature(g: Graph, v: int) -> tuple:
    return tuple(sorted(g[v].values()))


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Label-preserving isomorphism g -> h by degree pre-filter and backtracking."""
    if len(g) != len(h):
        return None
    sig_g = sorted(_signature(g, v) for v in g)
    sig_h = sorted(_signature(h, v) for v in h)
    if sig_g != sig_h:
        return None
    # visit g in BFS order so each new node has an already-mapped neighbour
    order: list[int] = []
    for comp in connected_components(g):
        seen = {comp[0]}
        queue = [comp[0]]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, t: int) -> bool:
        if _signature(g, v) != _signature(h, t):
            return False
        for w, x in mapping.items():
            if g[v].get(w, 2) != h[t].get(x, 2):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for t in sorted(h):
            if t in used or not consistent(v, t):
                continue
            mapping[v] = t
            used.add(t)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(t)
        return False

    return dict(mapping) if extend(0) else None


def _candidate_labels(n: int, max_rank: int = 16) -> list[str]:
    labels = []
    if n <= max_rank:
        labels.append(f"A{n}")
        if n >= 2:
            labels.append(f"B{n}")
        if n >= 4:
            labels.append(f"D{n}")
    if n in (6, 7, 8):
        labels.append(f"E{n}")
    if n == 4:
        labels.append("F4")
    if n == 2:
        labels.extend(["G2", "I2(5)"])
    if n in (3, 4):
        labels.append(f"H{n}")
    return labels


def identify_connected(g: Graph) -> tuple[str, dict[int, int]]:
    """Catalog label and node map for a connected Coxeter graph.

    B_n and C_n share a Coxeter graph; the label returned is ``B_n``.
    """
    nodes = sorted(g)
    relabel = {v: i for i, v in enumerate(nodes)}
    local = {relabel[v]: {relabel[w]: m for w, m in g[v].items()} for v in nodes}
    for lab in _candidate_labels(len(nodes)):
        fam, n = parse_irreducible(lab)
        r, edges = irreducible_edges(fam, n)
        iso = find_isomorphism(local, make_graph(range(r), edges))
        if iso is not None:
            return lab, {nodes[i]: t for i, t in iso.items()}
    raise UnknownTypeError(f"Coxeter graph on {len(nodes)} nodes is not in the catalog")


_FAMILY_ORDER = "ABCDEFGHI"


def label_sort_key(label: str) -> tuple:
    fam, n = parse_irreducible(label)
    return (_FAMILY_ORDER.index(fam), n)


def identify(g: Graph) -> tuple[str, list[tuple[str, dict[int, int]]]]:
    """Identify a possibly disconnected Coxeter graph.

    Returns the product label (components sorted by family and rank) and the
    per-component ``(label, node map)`` pairs in the same order.
    """
    parts = []
    for comp in connected_components(g):
        sub = {v: dict(g[v]) for v in comp}
        parts.append(identify_connected(sub))
    parts.sort(key=lambda p: (label_sort_key(p[0]), min(p[1])))
    return "x".join(p[0] for p in parts), parts
