"""Icosahedral solids as explicit group orbits, with exact golden coordinates.

Vertex sets are orbits of the icosahedral rotation group (order 60); seeds on
a 5-, 3- or 2-fold axis give the characteristic orbit sizes 12, 20 and 30,
generic seeds give 60.  Faces come from the convex hull, merged into planar
polygons, so duals and OFF export work uniformly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull

from . import cover, roots
from .errors import NoFaces, UnknownName
from .scalars import EXACT, FLOAT, GoldenNumber

_G = GoldenNumber
_H = Fraction(1, 2)


@dataclass(frozen=True)
class Solid:
    name: str
    vertices: tuple  # coordinate tuples (GoldenNumber or float)
    edges: tuple  # sorted index pairs
    faces: tuple  # index cycles
    site: str  # orbit composition, e.g. "5fold" or "12+20+60+60"
    backend: object = EXACT

    @property
    def vertex_count(self):
        return len(self.vertices)

    def float_vertices(self) -> np.ndarray:
        return np.array([[float(c) for c in v] for v in self.vertices])

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)


@lru_cache(maxsize=1)
def rotation_group():
    """The 60 rotation matrices of the icosahedral group, exact golden."""
    simples, backend = roots.catalog("H3")
    full = cover.reflection_group(simples, backend)
    return tuple(cover.rotation_subgroup(full, backend))


@lru_cache(maxsize=1)
def full_group():
    simples, backend = roots.catalog("H3")
    return tuple(cover.reflection_group(simples, backend))


def orbit(seed: Sequence, full: bool = False) -> tuple:
    """Rotation-group orbit of a 3D point with exact dedup, sorted."""
    seed = tuple(_G.coerce(c) for c in seed)
    group = full_group() if full else rotation_group()
    seen = {}
    for m in group:
        v = cover.matrix_apply(m, seed)
        seen[tuple((c.a, c.b) for c in v)] = v
    return tuple(sorted(seen.values(), key=roots._sort_key))


def site_type(seed: Sequence) -> str:
    size = len(orbit(seed))
    return {12: "5fold", 20: "3fold", 30: "2fold", 60: "generic"}.get(size, f"orbit{size}")


ICOSAHEDRON_SEED = (_G(0), _G(1), _G(0, 1))
DODECAHEDRON_SEED = (_G(1), _G(1), _G(1))
ICOSIDODECAHEDRON_SEED = (_G(1), _G(0), _G(0))
# generic seeds inside a golden-rhombus tile: a 5-fold corner plus a 3-fold
# corner, and the golden section of that segment (multiplicities in the
# displacement decomposition depend only on the orbit site types)
MS2_GENERIC_SEEDS = (
    (_G(1), _G(2), _G(1, 1)),
    (_G(1), _G(1, 1), _G(0, 2)),
)


def _edges_by_min_distance(verts: list, backend) -> tuple:
    n = len(verts)
    d2 = {}
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            diff = roots.vsub(verts[i], verts[j])
            val = roots.vdot(diff, diff)
            d2[(i, j)] = val
            if best is None or float(val) < float(best) - 1e-9:
                best = val
    edges = []
    for (i, j), val in d2.items():
        if backend.is_exact:
            if val == best:
                edges.append((i, j))
        elif abs(float(val) - float(best)) <= 1e-6:
            edges.append((i, j))
    return tuple(sorted(edges))


def _hull_faces(verts: list) -> tuple:
    """Planar faces of a convex solid, as vertex cycles, deterministic."""
    pts = np.array([[float(c) for c in v] for v in verts])
    hull = ConvexHull(pts)
    groups: dict = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(int(i) for i in simplex)
    faces = []
    for key, idx in groups.items():
        normal = np.array(key[:3])
        members = sorted(idx)
        center = pts[members].mean(axis=0)
        ref = pts[members[0]] - center
        ref = ref - (ref @ normal) * normal
        ref = ref / np.linalg.norm(ref)
        ref2 = np.cross(normal, ref)
        ordered = sorted(
            members,
            key=lambda i: math.atan2((pts[i] - center) @ ref2, (pts[i] - center) @ ref),
        )
        k = ordered.index(min(ordered))
        cyc = ordered[k:] + ordered[:k]
        if len(cyc) > 2 and cyc[1] > cyc[-1]:
            cyc = [cyc[0]] + cyc[1:][::-1]
        faces.append(tuple(cyc))
    return tuple(sorted(faces))


def _solid_from_orbits(name: str, seeds, site: str) -> Solid:
    verts = []
    for seed in seeds:
        verts.extend(orbit(seed))
    verts = sorted(verts, key=roots._sort_key)
    edges = _edges_by_min_distance(verts, EXACT)
    faces = _hull_faces(verts)
    return Solid(name=name, vertices=tuple(verts), edges=edges, faces=faces, site=site)


CATALOG_SOLIDS = (
    "icosahedron",
    "dodecahedron",
    "icosidodecahedron",
    "rhombic_triacontahedron",
    "truncated_icosahedron",
    "C80_cage",
    "MS2_tiling_vertices",
)


@lru_cache(maxsize=None)
def catalog_solid(name: str) -> Solid:
    if name == "icosahedron":
        return _solid_from_orbits(name, [ICOSAHEDRON_SEED], "5fold")
    if name == "dodecahedron":
        return _solid_from_orbits(name, [DODECAHEDRON_SEED], "3fold")
    if name == "icosidodecahedron":
        return _solid_from_orbits(name, [ICOSIDODECAHEDRON_SEED], "2fold")
    if name == "rhombic_triacontahedron":
        return _rhombic_triacontahedron()
    if name == "truncated_icosahedron":
        return _truncated_icosahedron()
    if name == "C80_cage":
        return _c80_cage()
    if name == "MS2_tiling_vertices":
        verts = []
        for seed in (ICOSAHEDRON_SEED, DODECAHEDRON_SEED) + MS2_GENERIC_SEEDS:
            verts.extend(orbit(seed))
        verts = sorted(verts, key=roots._sort_key)
        return Solid(
            name=name,
            vertices=tuple(verts),
            edges=(),
            faces=(),
            site="12+20+60+60",
        )
    raise UnknownName(f"no catalog solid named {name!r}")


def _truncated_icosahedron() -> Solid:
    """C60: points (2A+B)/3 over ordered adjacent icosahedron vertex pairs."""
    ic = catalog_solid("icosahedron")
    third = _G(Fraction(1, 3))
    two_thirds = _G(Fraction(2, 3))
    verts = set()
    for i, j in ic.edges:
        a, b = ic.vertices[i], ic.vertices[j]
        verts.add(roots.vadd(roots.vscale(a, two_thirds), roots.vscale(b, third)))
        verts.add(roots.vadd(roots.vscale(b, two_thirds), roots.vscale(a, third)))
    verts = sorted(verts, key=roots._sort_key)
    edges = _edges_by_min_distance(verts, EXACT)
    faces = _hull_faces(verts)
    return Solid(
        name="truncated_icosahedron",
        vertices=tuple(verts),
        edges=edges,
        faces=faces,
        site="generic",
    )


def _rhombic_triacontahedron() -> Solid:
    """Polar dual of the icosidodecahedron: poles c/(c|c) of face centroids."""
    idd = catalog_solid("icosidodecahedron")
    verts = []
    for face in idd.faces:
        total = None
        for i in face:
            total = idd.vertices[i] if total is None else roots.vadd(total, idd.vertices[i])
        centroid = roots.vscale(total, _G(Fraction(1, len(face))))
        norm = roots.vdot(centroid, centroid)
        verts.append(roots.vscale(centroid, norm.inverse()))
    verts = sorted(verts, key=roots._sort_key)
    edges = _edges_by_min_distance(verts, EXACT)
    faces = _hull_faces(verts)
    return Solid(
        name="rhombic_triacontahedron",
        vertices=tuple(verts),
        edges=edges,
        faces=faces,
        site="5fold+3fold",
    )


def _c80_cage() -> Solid:
    """First shell of the dodecahedral carbon onion (float coordinates)."""
    from . import affine

    shells = affine.fullerene_onion("C80", 0)
    shell = shells[0]
    verts = tuple(tuple(float(c) for c in v) for v in shell.atoms)
    return Solid(
        name="C80_cage",
        vertices=verts,
        edges=tuple(shell.bonds),
        faces=_hull_faces(list(verts)),
        site="3fold+generic",
        backend=FLOAT,
    )


def caspar_klug(h: int, k: int):
    """(T, subunits, pentamers, hexamers) for a triangulation index (h, k)."""
    if h < 0 or k < 0 or (h, k) == (0, 0):
        raise ValueError("need nonnegative h, k, not both zero")
    t = h * h + h * k + k * k
    return t, 60 * t, 12, 10 * (t - 1)


def dual(solid: Solid) -> Solid:
    """Combinatorial dual: face centroids become vertices."""
    if not solid.faces:
        raise NoFaces(f"{solid.name} carries no face data")
    exact = solid.backend.is_exact
    verts = []
    for face in solid.faces:
        total = None
        for i in face:
            total = solid.vertices[i] if total is None else roots.vadd(total, solid.vertices[i])
        if exact:
            verts.append(roots.vscale(total, _G(Fraction(1, len(face)))))
        else:
            verts.append(tuple(c / len(face) for c in total))
    # dual faces: the faces around each original vertex, in cyclic order
    incident = {i: [] for i in range(len(solid.vertices))}
    for fi, face in enumerate(solid.faces):
        for i in face:
            incident[i].append(fi)
    pts = np.array([[float(c) for c in v] for v in verts])
    dual_faces = []
    for i, fis in incident.items():
        center = np.array([float(c) for c in solid.vertices[i]])
        normal = center / np.linalg.norm(center)
        ref = pts[fis[0]] - center
        ref = ref - (ref @ normal) * normal
        ref = ref / np.linalg.norm(ref)
        ref2 = np.cross(normal, ref)
        ordered = sorted(
            fis,
            key=lambda f: math.atan2((pts[f] - center) @ ref2, (pts[f] - center) @ ref),
        )
        k = ordered.index(min(ordered))
        cyc = ordered[k:] + ordered[:k]
        if len(cyc) > 2 and cyc[1] > cyc[-1]:
            cyc = [cyc[0]] + cyc[1:][::-1]
        dual_faces.append(tuple(cyc))
    edges = set()
    for face in dual_faces:
        for a, b in zip(face, face[1:] + face[:1]):
            edges.add((min(a, b), max(a, b)))
    return Solid(
        name=f"dual({solid.name})",
        vertices=tuple(verts),
        edges=tuple(sorted(edges)),
        faces=tuple(sorted(dual_faces)),
        site="dual",
        backend=solid.backend,
    )


def off_export(solid: Solid) -> str:
    """ASCII OFF mesh text."""
    lines = ["OFF", f"{len(solid.vertices)} {len(solid.faces)} {len(solid.edges)}"]
    for v in solid.vertices:
        lines.append(" ".join(f"{float(c):.12g}" for c in v))
    for face in solid.faces:
        lines.append(f"{len(face)} " + " ".join(str(i) for i in face))
    return "\n".join(lines) + "\n"


def orbit_metadata(solid: Solid) -> dict:
    return {
        "name": solid.name,
        "vertices": len(solid.vertices),
        "edges": len(solid.edges),
        "faces": len(solid.faces),
        "site": solid.site,
        "euler": solid.euler_characteristic() if solid.faces else None,
    }
