"""McKay graphs of the finite Spin(3) subgroups and their ADE matching.

Tensoring irreducibles with the fundamental 2D spinor representation gives
a graph on the irreducibles that matches an affine ADE diagram; the node
dimensions are the affine marks.  The binary tetrahedral and octahedral
tables need cube roots of unity and sqrt(2), which leave the golden field,
so those tables (and the cyclic/dicyclic families) are kept as complex
floats and the resulting multiplicities are validated to be integers.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import cover, reptheory, roots
from .errors import IdentityViolation, NoMatch, NonIntegralMultiplicity, UnknownName
from .roots import _label_match
from .scalars import GoldenNumber


@dataclass(frozen=True)
class ComplexTable:
    group: str
    class_sizes: tuple
    class_orders: tuple
    irreps: tuple  # (name, dim)
    values: tuple  # complex rows per irrep
    fundamental: tuple  # chi2 values per class (trace of the 2D spinor rep)


@dataclass(frozen=True)
class McKayGraph:
    group: str
    nodes: tuple  # (irrep name, dimension)
    adjacency: tuple  # integer matrix

    def dimensions(self) -> tuple:
        return tuple(d for _, d in self.nodes)


@dataclass(frozen=True)
class DiagramLegs:
    legs: tuple  # sorted ascending, central node included


_W = cmath.exp(2j * math.pi / 3)
_WB = _W.conjugate()
_S2 = math.sqrt(2.0)


def _binary_class_data(label: str):
    """Classes of 2T/2O/2I from the explicit spinor groups, as
    (sizes, orders, scalar parts) sorted canonically."""
    source = {"2T": "A3", "2O": "B3", "2I": "H3"}[label]
    simples, backend = roots.catalog(source)
    rs = roots.close(simples, backend, name=source)
    spin = cover.spin_group(cover.generate_pin(rs.roots))
    classes = cover.conjugacy_classes(spin)
    data = []
    for rep, size, order in classes.classes:
        sp = spin.backend.to_float(rep.scalar_part())
        data.append((size, order, sp))
    data.sort(key=lambda t: (t[1], -t[2]))
    return data


@lru_cache(maxsize=None)
def complex_table(label: str) -> ComplexTable:
    if label == "2T":
        sizes = (1, 1, 6, 4, 4, 4, 4)
        orders = (1, 2, 4, 3, 3, 6, 6)
        irreps = (("1", 1), ("1'", 1), ("1''", 1), ("2", 2), ("2'", 2), ("2''", 2), ("3", 3))
        values = (
            (1, 1, 1, 1, 1, 1, 1),
            (1, 1, 1, _W, _WB, _W, _WB),
            (1, 1, 1, _WB, _W, _WB, _W),
            (2, -2, 0, -1, -1, 1, 1),
            (2, -2, 0, -_W, -_WB, _W, _WB),
            (2, -2, 0, -_WB, -_W, _WB, _W),
            (3, 3, -1, 0, 0, 0, 0),
        )
        fundamental = values[3]
    elif label == "2O":
        sizes = (1, 1, 6, 12, 8, 8, 6, 6)
        orders = (1, 2, 4, 4, 6, 3, 8, 8)
        irreps = (
            ("1", 1),
            ("1'", 1),
            ("2", 2),
            ("2'", 2),
            ("2''", 2),
            ("3", 3),
            ("3'", 3),
            ("4", 4),
        )
        values = (
            (1, 1, 1, 1, 1, 1, 1, 1),
            (1, 1, 1, -1, 1, 1, -1, -1),
            (2, -2, 0, 0, 1, -1, _S2, -_S2),
            (2, -2, 0, 0, 1, -1, -_S2, _S2),
            (2, 2, 2, 0, -1, -1, 0, 0),
            (3, 3, -1, 1, 0, 0, -1, -1),
            (3, 3, -1, -1, 0, 0, 1, 1),
            (4, -4, 0, 0, -1, 1, 0, 0),
        )
        fundamental = values[2]
    else:
        m = re.match(r"^C(\d+)$", label)
        if m:
            return _cyclic_table(int(m.group(1)))
        m = re.match(r"^Dic(\d+)$", label)
        if m:
            return _dicyclic_table(int(m.group(1)))
        raise UnknownName(f"no McKay table for {label!r}")
    table = ComplexTable(label, sizes, orders, irreps, values, fundamental)
    _validate_complex(table)
    _validate_against_spinors(table)
    return table


def _cyclic_table(m: int) -> ComplexTable:
    if m < 2:
        raise UnknownName("cyclic groups need order >= 2")
    sizes = (1,) * m
    orders = tuple(m // math.gcd(m, k) for k in range(m))
    irreps = tuple((f"x{j}", 1) for j in range(m))
    values = tuple(
        tuple(cmath.exp(2j * math.pi * j * k / m) for k in range(m)) for j in range(m)
    )
    fundamental = tuple(2 * math.cos(2 * math.pi * k / m) for k in range(m))
    table = ComplexTable(f"C{m}", sizes, orders, irreps, values, fundamental)
    _validate_complex(table)
    return table


def _dicyclic_table(n: int) -> ComplexTable:
    if n < 2:
        raise UnknownName("dicyclic groups need n >= 2")
    # classes: 1, -1, {a^k, a^-k} for k=1..n-1, the b class and the ab class
    sizes = (1, 1) + (2,) * (n - 1) + (n, n)
    orders = (
        (1, 2)
        + tuple(2 * n // math.gcd(2 * n, k) for k in range(1, n))
        + (4, 4)
    )
    beta = 1.0 if n % 2 == 0 else 1j
    irreps = [("p1", 1), ("p2", 1), ("p3", 1), ("p4", 1)]
    values = [
        (1, 1) + (1,) * (n - 1) + (1, 1),
        (1, 1) + (1,) * (n - 1) + (-1, -1),
        (1, (-1.0) ** n) + tuple((-1.0) ** k for k in range(1, n)) + (beta, -beta),
        (1, (-1.0) ** n) + tuple((-1.0) ** k for k in range(1, n)) + (-beta, beta),
    ]
    for j in range(1, n):
        irreps.append((f"r{j}", 2))
        values.append(
            (2, 2 * (-1.0) ** j)
            + tuple(2 * math.cos(math.pi * j * k / n) for k in range(1, n))
            + (0, 0)
        )
    fundamental = values[4]  # r1 is the restriction of the spinor rep
    table = ComplexTable(
        f"Dic{n}", sizes, tuple(orders), tuple(irreps), tuple(values), fundamental
    )
    _validate_complex(table)
    return table


def _validate_complex(table: ComplexTable) -> None:
    order = sum(table.class_sizes)
    if sum(d * d for _, d in table.irreps) != order:
        raise NonIntegralMultiplicity(f"{table.group}: dimension sum rule broken")
    k = len(table.irreps)
    for i in range(k):
        for j in range(k):
            total = sum(
                s * x * y.conjugate()
                for s, x, y in zip(table.class_sizes, table.values[i], table.values[j])
            )
            expect = order if i == j else 0
            if abs(total - expect) > 1e-8 * order:
                raise NonIntegralMultiplicity(
                    f"{table.group}: orthogonality fails for rows {i},{j}"
                )


def _validate_against_spinors(table: ComplexTable) -> None:
    """chi2 must equal twice the scalar part on explicit group elements."""
    data = _binary_class_data(table.group)

    def sort_key(size, order, value):
        return (order, round(value, 6), size)

    want = sorted(
        (
            (s, o, f.real if isinstance(f, complex) else float(f))
            for s, o, f in zip(table.class_sizes, table.class_orders, table.fundamental)
        ),
        key=lambda t: sort_key(*t),
    )
    have = sorted(((s, o, 2 * sp) for s, o, sp in data), key=lambda t: sort_key(*t))
    for (s1, o1, f1), (s2, o2, f2) in zip(want, have):
        if s1 != s2 or o1 != o2 or abs(f1 - f2) > 1e-9:
            raise NonIntegralMultiplicity(
                f"{table.group}: stored chi2 disagrees with explicit spinors"
            )


BINARY_LABELS = ("2T", "2O", "2I")


def mckay_graph(label: str) -> McKayGraph:
    """a_ij = <chi2 * chi_i, chi_j>, exact integers."""
    if label == "2I":
        table = reptheory.character_table("2I")
        chi2 = [table.values[1][c] for c in range(len(table.classes))]
        sizes = [c.size for c in table.classes]
        order = table.group_order()
        k = len(table.irreps)
        adj = []
        for i in range(k):
            row = []
            for j in range(k):
                total = GoldenNumber(0)
                for c in range(len(table.classes)):
                    total = total + GoldenNumber(sizes[c]) * chi2[c] * table.values[i][c] * table.values[j][c]
                q = total / GoldenNumber(order)
                if q.b != 0 or q.a.denominator != 1:
                    raise NonIntegralMultiplicity(f"2I tensor multiplicity {q}")
                row.append(int(q.a))
            adj.append(tuple(row))
        return McKayGraph("2I", tuple(table.irreps), tuple(adj))
    table = complex_table(label)
    order = sum(table.class_sizes)
    k = len(table.irreps)
    adj = []
    for i in range(k):
        row = []
        for j in range(k):
            total = sum(
                s * f * x * y.conjugate()
                for s, f, x, y in zip(
                    table.class_sizes, table.fundamental, table.values[i], table.values[j]
                )
            )
            val = total / order
            if abs(val.imag if isinstance(val, complex) else 0.0) > 1e-8:
                raise NonIntegralMultiplicity(f"complex multiplicity {val}")
            rv = val.real if isinstance(val, complex) else float(val)
            iv = round(rv)
            if abs(rv - iv) > 1e-6:
                raise NonIntegralMultiplicity(f"non-integral multiplicity {val}")
            row.append(int(iv))
        adj.append(tuple(row))
    return McKayGraph(table.group, tuple(table.irreps), tuple(adj))


# -- affine ADE reference diagrams ---------------------------------------------------


def _graph_from_edges(n: int, edges) -> tuple:
    adj = [[0] * n for _ in range(n)]
    for a, b, *w in edges:
        weight = w[0] if w else 1
        adj[a][b] = adj[b][a] = weight
    return tuple(tuple(row) for row in adj)


def _star(legs: Sequence[int]) -> tuple:
    """Tree with a central node 0 and paths of the given lengths hanging off."""
    edges = []
    nxt = 1
    for leg in legs:
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return _graph_from_edges(nxt, edges)


def affine_diagram(kind: str, n: Optional[int] = None) -> tuple:
    if kind == "A":
        if n == 1:
            return _graph_from_edges(2, [(0, 1, 2)])
        return _graph_from_edges(
            n + 1, [(i, (i + 1) % (n + 1)) for i in range(n + 1)]
        )
    if kind == "D":
        # n + 1 nodes: central path with two forks at each end
        if n < 4:
            raise UnknownName("affine D needs rank >= 4")
        if n == 4:
            return _star([1, 1, 1, 1])
        path = n - 3
        edges = []
        nodes = list(range(path))
        edges += [(i, i + 1) for i in range(path - 1)]
        nxt = path
        for end in (0, path - 1):
            for _ in range(2):
                edges.append((end, nxt))
                nxt += 1
        return _graph_from_edges(nxt, edges)
    if kind == "E6":
        return _star([2, 2, 2])
    if kind == "E7":
        return _star([3, 3, 1])
    if kind == "E8":
        return _star([5, 2, 1])
    raise UnknownName(f"unknown affine diagram {kind!r}")


def ordinary_diagram(kind: str, n: Optional[int] = None) -> tuple:
    if kind == "A":
        return _graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "D":
        if n == 3:
            return _star([1, 1])
        return _star([n - 3, 1, 1]) if n > 3 else None
    if kind == "E6":
        return _star([2, 2, 1])
    if kind == "E7":
        return _star([3, 2, 1])
    if kind == "E8":
        return _star([4, 2, 1])
    raise UnknownName(f"unknown diagram {kind!r}")


def match_affine(graph: McKayGraph) -> str:
    """Affine ADE label whose diagram is isomorphic to the McKay graph."""
    n = len(graph.nodes)
    candidates = []
    if n >= 2:
        candidates.append((f"affine A{n - 1}", affine_diagram("A", n - 1)))
    if n >= 5:
        candidates.append((f"affine D{n - 1}", affine_diagram("D", n - 1)))
    for kind, size in (("E6", 7), ("E7", 8), ("E8", 9)):
        if n == size:
            candidates.append((f"affine {kind}", affine_diagram(kind)))
    for label, ref in candidates:
        if _label_match(graph.adjacency, ref):
            return label
    raise NoMatch(f"McKay graph of {graph.group} matches no affine ADE diagram")


def marks_kernel_check(graph: McKayGraph) -> bool:
    """(2 Id - A) applied to the dimension vector must vanish."""
    dims = graph.dimensions()
    n = len(dims)
    for i in range(n):
        total = 2 * dims[i] - sum(graph.adjacency[i][j] * dims[j] for j in range(n))
        if total != 0:
            return False
    return True


def ordinary_cartan_after_trivial_removal(graph: McKayGraph) -> tuple:
    """Cartan matrix 2 Id - A with the trivial-irrep node deleted."""
    trivial = None
    for i, (name, dim) in enumerate(graph.nodes):
        if dim == 1:
            trivial = i
            break
    keep = [i for i in range(len(graph.nodes)) if i != trivial]
    return tuple(
        tuple(
            (2 if i == j else 0) - graph.adjacency[i][j] for j in keep
        )
        for i in keep
    )


# -- the three-way identities ----------------------------------------------------------


_PAIRED_3D = {"2T": "A3", "2O": "B3", "2I": "H3"}
_ADE_COXETER = {"affine E6": 12, "affine E7": 18, "affine E8": 30}


def coxeter_number_identity(label: str):
    """(sum of irrep dimensions, Coxeter number of the matched ADE type,
    root count of the paired 3D system); raises unless all three agree."""
    graph = mckay_graph(label)
    dims_sum = sum(graph.dimensions())
    ade = match_affine(graph)
    if ade in _ADE_COXETER:
        h = _ADE_COXETER[ade]
    elif ade.startswith("affine A"):
        h = int(ade.split("A")[1]) + 1
    elif ade.startswith("affine D"):
        h = 2 * int(ade.split("D")[1]) - 2
    else:
        raise NoMatch(ade)
    if label in _PAIRED_3D:
        simples, backend = roots.catalog(_PAIRED_3D[label])
        count = len(roots.close(simples, backend))
    elif label.startswith("C") and label[1:].isdigit():
        count = int(label[1:])  # I2(n) has 2n roots; paired with C_2n
    elif label.startswith("Dic"):
        count = 2 * int(label[3:]) + 2  # A1 x I2(n)
    else:
        raise UnknownName(label)
    if not dims_sum == h == count:
        raise IdentityViolation(f"{label}: ({dims_sum}, {h}, {count}) differ")
    return dims_sum, h, count


_LEG_ADE = {
    "A3": "E6",
    "B3": "E7",
    "H3": "E8",
}


def diagram_legs(adj: tuple) -> DiagramLegs:
    """Leg lengths (central node included) of a path or star diagram."""
    n = len(adj)
    deg = [sum(1 for j in range(n) if adj[i][j]) for i in range(n)]
    branch = [i for i in range(n) if deg[i] >= 3]
    if not branch:
        return DiagramLegs(legs=(n,))
    c = branch[0]
    legs = []
    for j in range(n):
        if not adj[c][j]:
            continue
        length = 1
        prev, cur = c, j
        while True:
            nxts = [k for k in range(n) if adj[cur][k] and k != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            length += 1
        legs.append(length + 1)  # include the central node
    return DiagramLegs(legs=tuple(sorted(legs)))


def rotation_orders(label3d: str) -> tuple:
    """Orders of the pairwise rotations s_i s_j of a 3D (or 2D) system,
    read off the Coxeter diagram labels."""
    simples, backend = roots.catalog(label3d)
    k = len(simples)
    if k == 2:
        return (roots.diagram_edges(simples)[0][2],)
    cm = roots.cartan_matrix(simples)
    orders = []
    for i in range(k):
        for j in range(i + 1, k):
            orders.append(roots.coxeter_edge_label(cm[i][j], cm[j][i]))
    return tuple(sorted(orders))


def leg_triple_correspondence(label3d: str):
    """(rotation orders of the 3D system, matched ADE label, diagram legs)."""
    m = re.match(r"^I2\((\d+)\)$", label3d)
    if m:
        n = int(m.group(1))
        target = ("A", n)
    else:
        m = re.match(r"^A1[x×]I2\((\d+)\)$", label3d)
        if m:
            n = int(m.group(1))
            target = ("D", n + 2)
        elif label3d in _LEG_ADE:
            target = (_LEG_ADE[label3d], None)
        else:
            raise UnknownName(f"no leg correspondence for {label3d!r}")
    orders = rotation_orders(label3d)
    diagram = ordinary_diagram(*target)
    legs = diagram_legs(diagram)
    if orders != legs.legs:
        raise NoMatch(f"{label3d}: orders {orders} vs legs {legs.legs}")
    ade_name = target[0] if target[1] is None else f"{target[0]}{target[1]}"
    return orders, ade_name, legs


def mckay_dot(graph: McKayGraph) -> str:
    safe = graph.group.replace("'", "p")
    lines = [f"graph mckay_{safe} {{"]
    for i, (name, dim) in enumerate(graph.nodes):
        lines.append(f'  n{i} [label="{name} ({dim})"];')
    n = len(graph.nodes)
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(graph.adjacency[i][j]):
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
