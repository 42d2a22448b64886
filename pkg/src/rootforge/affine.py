"""Affine extensions of the icosahedral group.

Three instruments live here:

* affine hyperplane reflections and the translation they generate together
  with the ordinary reflection;
* orbit-translate-orbit point arrays under the icosahedral rotation group,
  with degeneracy bookkeeping;
* diagram foldings that push crystallographic affine roots down to the
  golden (non-crystallographic) systems;
* carbon onions: iterated 5-fold-axis translations of a fullerene cage that
  reproduce the nested cage families.

The onion search is fully deterministic.  Candidate translation lengths are
the finitely many values at which a translated copy of the shell gains
point coincidences with its own rotated images; for each candidate the
orbit splits into rotation-group classes, and a new shell is a union of
classes in a thin radial band outside the current shell in which every atom
acquires exactly three bond-length neighbours.  Validity means trivalency,
bond-length spread within 5 percent, connectivity, and a pentagon/hexagon
face structure with exactly 12 pentagons.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import cdist

from . import cover, roots
from .errors import FoldingNotFound, NoValidShell, UnknownName, ZeroVector
from .roots import Vector, vadd, vdot, vscale, vsub
from .scalars import GoldenNumber, TAU

_G = GoldenNumber


# -- affine reflections --------------------------------------------------------


def affine_reflection(alpha_h: Vector, lam: Vector) -> Vector:
    """Reflection in the affine hyperplane: lam + alpha_H - 2(lam|a)/(a|a) a."""
    den = vdot(alpha_h, alpha_h)
    zero = den.is_zero() if isinstance(den, GoldenNumber) else abs(den) < 1e-15
    if zero:
        raise ZeroVector("affine reflection needs a nonzero root")
    return vadd(roots.reflect_vector(alpha_h, lam), alpha_h)


def translation_of(alpha_h: Vector, lam: Vector) -> Vector:
    """s_a^aff(s_a(lam)) - lam; equals alpha_H identically."""
    return vsub(affine_reflection(alpha_h, roots.reflect_vector(alpha_h, lam)), lam)


# -- orbit-translate-orbit point arrays ------------------------------------------


@dataclass(frozen=True)
class PointArray:
    points: tuple
    group: str
    seed_size: int
    translation: tuple
    degenerate: bool

    def __len__(self):
        return len(self.points)


@lru_cache(maxsize=1)
def _icosahedral_rotations_exact():
    simples, backend = roots.catalog("H3")
    return tuple(cover.rotation_subgroup(cover.reflection_group(simples, backend), backend))


def extend(seed_orbit: Sequence[Vector], translation: Vector, group: str = "H3") -> PointArray:
    """G . (seed + t) union seed under the rotation subgroup of the named group."""
    if group != "H3":
        raise UnknownName("point arrays are implemented for the icosahedral group")
    rotations = _icosahedral_rotations_exact()
    seed = [tuple(_G.coerce(c) for c in p) for p in seed_orbit]
    t = tuple(_G.coerce(c) for c in translation)
    seen = {}
    for p in seed:
        key = tuple((c.a, c.b) for c in p)
        seen[key] = p
    translated = [vadd(p, t) for p in seed]
    count = 0
    for m in rotations:
        for p in translated:
            v = cover.matrix_apply(m, p)
            key = tuple((c.a, c.b) for c in v)
            if key not in seen:
                seen[key] = v
                count += 1
    maximal = len(rotations) * len(seed)
    pts = tuple(sorted(seen.values(), key=roots._sort_key))
    return PointArray(
        points=pts,
        group=group,
        seed_size=len(seed),
        translation=t,
        degenerate=count < maximal,
    )


# -- projected affine roots via diagram folding -----------------------------------


_FOLDINGS = {
    "A4": ("H2", 2),
    "D6": ("H3", 3),
    "E8": ("H4", 4),
}


def _golden_cartan(target: str):
    """Cartan matrix of H2/H3/H4 over Z[tau] for unit simple roots: the first
    bond carries -tau, the remaining path bonds carry -1."""
    rank = {"H2": 2, "H3": 3, "H4": 4}[target]
    c = [[_G(2) if i == j else _G(0) for j in range(rank)] for i in range(rank)]
    mt = -TAU
    mo = _G(-1)
    c[0][1] = c[1][0] = mt
    for i in range(1, rank - 1):
        c[i][i + 1] = c[i + 1][i] = mo
    return c


@dataclass(frozen=True)
class AffineFolding:
    source: str
    target: str
    pairing: tuple  # source node -> (target node, golden multiplier)
    affine_coefficients: tuple  # GoldenNumber per target simple root
    translation: Optional[tuple]  # vector over the target catalog coordinates


def project_affine_root(source: str) -> AffineFolding:
    """Fold a crystallographic diagram 2-to-1 onto its golden shadow and push
    the affine-root coefficients through by linearity."""
    if source not in _FOLDINGS:
        raise UnknownName(f"no folding from {source!r}")
    target, rank = _FOLDINGS[source]
    simples, backend = roots.catalog(source)
    src_rs = roots.close(simples, backend, name=source)
    src_cartan = roots.cartan_matrix(simples)
    n = len(simples)
    tgt_cartan = _golden_cartan(target)

    def entry(i, j) -> Fraction:
        val = src_cartan[i][j]
        if isinstance(val, GoldenNumber):
            return val.a
        return Fraction(int(round(val)))

    # search pairings (a_i, a_i') -> (a_u, tau a_u) so that the source Cartan
    # equals the rational part of c_i c_j C_target[u][v]
    found = None
    for pairing in _pairings(list(range(n))):
        for assign in itertools.permutations(range(rank)):
            for flags in itertools.product((0, 1), repeat=rank):
                mapping = {}
                for (i, j), u in zip(pairing, assign):
                    a, b = (i, j) if flags[u] == 0 else (j, i)
                    mapping[a] = (u, _G(1))
                    mapping[b] = (u, TAU)
                ok = True
                for i in range(n):
                    ui, ci = mapping[i]
                    for j in range(n):
                        uj, cj = mapping[j]
                        if (ci * cj * tgt_cartan[ui][uj]).a != entry(i, j):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    found = mapping
                    break
            if found:
                break
        if found:
            break
    if not found:
        raise FoldingNotFound(f"no 2-to-1 folding {source} -> {target}")
    marks = roots.highest_root_coefficients(src_rs)
    coeffs = [_G(0) for _ in range(rank)]
    for i in range(n):
        u, c = found[i]
        coeffs[u] = coeffs[u] + c * marks[i]
    translation = None
    if target in ("H3", "H4"):
        tgt_simples, _ = roots.catalog(target)
        vec = None
        for u in range(rank):
            term = vscale(tgt_simples[u], coeffs[u])
            vec = term if vec is None else vadd(vec, term)
        translation = vec
    return AffineFolding(
        source=source,
        target=target,
        pairing=tuple(sorted((i, found[i][0], found[i][1]) for i in range(n))),
        affine_coefficients=tuple(coeffs),
        translation=translation,
    )


def _pairings(nodes):
    if not nodes:
        yield ()
        return
    first = nodes[0]
    for k in range(1, len(nodes)):
        rest = nodes[1:k] + nodes[k + 1:]
        for sub in _pairings(rest):
            yield ((first, nodes[k]),) + sub


def axis_class(vec: Sequence) -> Optional[str]:
    """2fold/3fold/5fold if the 3D vector is parallel to a symmetry axis."""
    v = np.array([float(c) for c in vec])
    nv = np.linalg.norm(v)
    if nv < 1e-12:
        return None
    v = v / nv
    from . import polyhedra

    for name, seed in (
        ("5fold", polyhedra.ICOSAHEDRON_SEED),
        ("3fold", polyhedra.DODECAHEDRON_SEED),
        ("2fold", polyhedra.ICOSIDODECAHEDRON_SEED),
    ):
        for p in polyhedra.orbit(seed):
            w = np.array([float(c) for c in p])
            w = w / np.linalg.norm(w)
            if np.linalg.norm(np.cross(v, w)) < 1e-9:
                return name
    return None


# -- fullerene onions ----------------------------------------------------------------


@dataclass(frozen=True)
class FullereneShell:
    atoms: tuple  # of 3D float tuples
    bonds: tuple  # index pairs
    t_number: int
    translation: Optional[float]  # 5-fold translation that produced the shell
    bond_length: float
    bond_spread: float

    @property
    def atom_count(self):
        return len(self.atoms)


BOND_SPREAD_TOL = 0.05
BOND_BAND = 0.05  # carbon keeps its bond length from shell to shell
RADIAL_WINDOW_BONDS = 3.0
FACE_SIZE_LIMIT = 12


def _rotations_float():
    return np.array(
        [
            [[float(c) for c in row] for row in m]
            for m in _icosahedral_rotations_exact()
        ]
    )


def _dedup_points(points: np.ndarray, tol: float = 1e-5) -> np.ndarray:
    tree = cKDTree(points)
    parent = list(range(len(points)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree.query_pairs(r=tol):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(i) for i in range(len(points))})
    return points[reps]


def _orbit_classes(points: np.ndarray, rot: np.ndarray):
    allp = _dedup_points((rot @ points.T).transpose(0, 2, 1).reshape(-1, 3))
    tree = cKDTree(allp)
    assigned = np.full(len(allp), -1)
    cid = 0
    for i in range(len(allp)):
        if assigned[i] >= 0:
            continue
        idx = tree.query(rot @ allp[i], k=1)[1]
        assigned[np.unique(idx)] = cid
        cid += 1
    return [allp[assigned == c] for c in range(cid)]


def coincidence_translations(shell: np.ndarray, axis: np.ndarray, rot: np.ndarray, tol: float = 1e-7):
    """Positive lengths t at which g(p + t a) = q + t a for some rotation g
    and shell points p, q; this is the onion search grid."""
    out = set()
    ga_all = rot @ axis
    for gi in range(len(rot)):
        d = ga_all[gi] - axis
        nd2 = d @ d
        if nd2 < 1e-12:
            continue
        gp = shell @ rot[gi].T
        for qi in range(len(shell)):
            rhs = shell[qi] - gp
            ts = rhs @ d / nd2
            resid = rhs - np.outer(ts, d)
            ok = (np.linalg.norm(resid, axis=1) < tol) & (ts > 1e-6)
            for t in ts[ok]:
                out.add(round(float(t), 6))
    merged = []
    for t in sorted(out):
        if not merged or t - merged[-1] > 1e-5:
            merged.append(t)
    return merged


def _face_sizes(band: np.ndarray, mask: np.ndarray):
    """Face-size census from the angular rotation system; None if it jams."""
    n = len(band)
    nbrs = [np.where(mask[i])[0] for i in range(n)]
    order = {}
    for i in range(n):
        normal = band[i] / np.linalg.norm(band[i])
        ref = None
        for v in (np.array([1.0, 0, 0]), np.array([0, 1.0, 0])):
            p = v - (v @ normal) * normal
            if np.linalg.norm(p) > 1e-6:
                ref = p / np.linalg.norm(p)
                break
        ref2 = np.cross(normal, ref)
        angs = []
        for j in nbrs[i]:
            dv = band[j] - band[i]
            p = dv - (dv @ normal) * normal
            angs.append((math.atan2(p @ ref2, p @ ref), j))
        angs.sort()
        order[i] = [j for _, j in angs]
    visited = set()
    sizes = []
    for i in range(n):
        for j in nbrs[i]:
            if (i, j) in visited:
                continue
            face = []
            a, b = i, j
            while (a, b) not in visited:
                visited.add((a, b))
                face.append(a)
                ob = order[b]
                a, b = b, ob[(ob.index(a) + 1) % len(ob)]
                if len(face) > FACE_SIZE_LIMIT:
                    return None
            sizes.append(len(face))
    return sizes


def validate_shell(atoms: np.ndarray, dmax: float = BOND_SPREAD_TOL):
    """(bonds, bond length, spread) for a valid cage, else None."""
    if len(atoms) < 20:
        return None
    dm = cdist(atoms, atoms)
    np.fill_diagonal(dm, np.inf)
    m = dm.min()
    if m < 1e-3:
        return None
    mask = dm < 1.2 * m
    if not np.all(mask.sum(axis=1) == 3):
        return None
    lengths = dm[mask]
    spread = (lengths.max() - lengths.min()) / lengths.mean()
    if spread > dmax:
        return None
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.where(mask[i])[0]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != len(atoms):
        return None
    sizes = _face_sizes(atoms, mask)
    if sizes is None or set(sizes) - {5, 6} or sizes.count(5) != 12:
        return None
    bonds = tuple(
        (i, int(j)) for i in range(len(atoms)) for j in np.where(mask[i])[0] if i < j
    )
    return bonds, float(lengths.mean()), float(spread)


def _next_shells_at(shell: np.ndarray, t: float, axis: np.ndarray, rot: np.ndarray, bond: float):
    """Valid shells among unions of orbit classes outside the current shell.

    Per-class neighbour counts at bond range are constant on each class (the
    group acts transitively), so a shell is a subset of pairwise-compatible
    classes whose degree rows sum to exactly 3; the subsets are enumerated
    by a depth-first search after iterative degree pruning.
    """
    rmax = np.linalg.norm(shell, axis=1).max()
    classes = [
        c
        for c in _orbit_classes(shell + t * axis, rot)
        if np.linalg.norm(c, axis=1).min() >= rmax - 1e-6
    ]
    if not classes:
        return []
    classes.sort(key=lambda c: float(np.linalg.norm(c, axis=1).mean()))
    lo, hi = (1 - BOND_BAND) * bond, (1 + BOND_BAND) * bond
    classes = [
        c
        for c in classes
        if len(c) == 1
        or (lambda dm: (np.fill_diagonal(dm, np.inf), dm.min() >= lo)[1])(cdist(c, c))
    ]
    m = len(classes)
    if m == 0:
        return []
    rmeans = [float(np.linalg.norm(c, axis=1).mean()) for c in classes]
    deg = np.zeros((m, m), dtype=int)
    conflict = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i, m):
            dm = cdist(classes[i], classes[j])
            if i == j:
                np.fill_diagonal(dm, np.inf)
            if dm.min() < lo:
                conflict[i][j] = conflict[j][i] = True
                continue
            counts_i = ((dm > lo) & (dm < hi)).sum(axis=1)
            counts_j = ((dm > lo) & (dm < hi)).sum(axis=0)
            if counts_i.min() != counts_i.max() or counts_j.min() != counts_j.max():
                conflict[i][j] = conflict[j][i] = True
                continue
            deg[i][j] = int(counts_i[0])
            deg[j][i] = int(counts_j[0])
    # iterative pruning: a shell class reaches degree 3 using its compatible
    # partners only, and never exceeds 3 on its own diagonal
    alive = [deg[i][i] <= 3 for i in range(m)]
    changed = True
    while changed:
        changed = False
        for i in range(m):
            if not alive[i]:
                continue
            reach = deg[i][i] + sum(
                deg[i][j]
                for j in range(m)
                if j != i and alive[j] and not conflict[i][j]
                and abs(rmeans[i] - rmeans[j]) <= RADIAL_WINDOW_BONDS * bond
            )
            if reach < 3:
                alive[i] = False
                changed = True
    order = [i for i in range(m) if alive[i]]
    if not order:
        return []
    shells = []
    seen_sets = set()
    budget = [2_000_000]
    window = RADIAL_WINDOW_BONDS * bond

    def completable(chosen, degsum, pos):
        # every unsaturated chosen class needs a remaining compatible partner
        for u in chosen:
            if degsum[u] == 3:
                continue
            for oi in range(pos, len(order)):
                v = order[oi]
                if rmeans[v] - rmeans[u] > window:
                    return False
                if deg[u][v] > 0 and not any(conflict[v][w] for w in chosen):
                    break
            else:
                return False
        return True

    def dfs(pos, chosen, degsum):
        if budget[0] <= 0:
            return
        budget[0] -= 1
        if chosen and all(degsum[u] == 3 for u in chosen):
            key = tuple(sorted(chosen))
            if key not in seen_sets:
                seen_sets.add(key)
                atoms = np.vstack([classes[k] for k in sorted(chosen)])
                if len(atoms) > len(shell) and len(atoms) % 20 == 0:
                    res = validate_shell(atoms)
                    if res is not None:
                        shells.append((atoms, res))
        if chosen and not completable(chosen, degsum, pos):
            return
        anchor = min((rmeans[u] for u in chosen), default=None)
        for oi in range(pos, len(order)):
            nxt = order[oi]
            if anchor is not None and rmeans[nxt] - anchor > window:
                break
            if any(conflict[nxt][u] for u in chosen):
                continue
            if any(degsum[u] + deg[u][nxt] > 3 for u in chosen) or deg[nxt][nxt] > 3:
                continue
            own = deg[nxt][nxt] + sum(deg[nxt][u] for u in chosen)
            if own > 3:
                continue
            new_degsum = dict(degsum)
            for u in chosen:
                new_degsum[u] += deg[u][nxt]
            new_degsum[nxt] = own
            dfs(oi + 1, chosen | {nxt}, new_degsum)

    dfs(0, frozenset(), {})
    return shells


FULLERENE_STARTS = ("C60", "C80")


def _start_shell(name: str):
    from . import polyhedra

    rot = _rotations_float()
    if name == "C60":
        solid = polyhedra.catalog_solid("truncated_icosahedron")
        atoms = solid.float_vertices()
        t_number = 3
    elif name == "C80":
        dod = polyhedra.catalog_solid("dodecahedron")
        atoms = dod.float_vertices()
        t_number = 1  # the dodecahedral cage seeds the (h, 0) series
    else:
        raise UnknownName(f"unknown onion start {name!r}")
    return atoms, t_number, rot


def fullerene_onion(start: str, shells: int) -> list:
    """Nested cages from iterated unique 5-fold translations.

    `start` C60 grows the vertex-to-vertex series 60, 240, 540, ...; C80
    grows the edge-on series 80, 180, 320, ... (its seed cage, the
    dodecahedron, is the T=1 member and is not reported).
    """
    atoms, _, rot = _start_shell(start)
    axis = np.array([0.0, 1.0, float(TAU)])
    axis /= np.linalg.norm(axis)
    out = []
    skip_first = start == "C80"
    steps = shells + (1 if skip_first else 0)
    current = atoms
    res = validate_shell(current)
    if res is None:
        raise NoValidShell("start cage fails its own validity test")
    if not skip_first:
        bonds, blen, spread = res
        out.append(
            FullereneShell(
                atoms=tuple(map(tuple, current)),
                bonds=bonds,
                t_number=len(current) // 20,
                translation=None,
                bond_length=blen,
                bond_spread=spread,
            )
        )
    for _ in range(steps):
        bonds, blen, _ = validate_shell(current)
        winners = {}
        for t in coincidence_translations(current, axis, rot):
            found = _next_shells_at(current, t, axis, rot, blen)
            if found:
                best = min(found, key=lambda fr: len(fr[0]))
                winners.setdefault(t, best)
        if not winners:
            raise NoValidShell(f"no valid shell above {len(current)} atoms")
        smallest = min(len(b[0]) for b in winners.values())
        final = {t: b for t, b in winners.items() if len(b[0]) == smallest}
        if len(final) != 1:
            raise NoValidShell(
                f"translation not unique: {sorted(final)} all give {smallest} atoms"
            )
        (t, (atoms_next, (bonds2, blen2, spread2))), = final.items()
        current = atoms_next
        out.append(
            FullereneShell(
                atoms=tuple(map(tuple, current)),
                bonds=bonds2,
                t_number=len(current) // 20,
                translation=float(t),
                bond_length=blen2,
                bond_spread=spread2,
            )
        )
    return out


def surviving_translations(shell_atoms: np.ndarray, bond: float):
    """All (t, shell size) winners for one search step; used by tests."""
    rot = _rotations_float()
    axis = np.array([0.0, 1.0, float(TAU)])
    axis /= np.linalg.norm(axis)
    winners = []
    for t in coincidence_translations(shell_atoms, axis, rot):
        found = _next_shells_at(shell_atoms, t, axis, rot, bond)
        if found:
            winners.append((t, min(len(f[0]) for f in found)))
    return winners
