"""Isomorph-free exhaustive enumeration of almost-simple 3-polyhedra.

Generation works on the dual side: triangulations of the sphere are grown
from the tetrahedron by vertex splitting (every triangulation with more
vertices contracts to a smaller one, so level-by-level splitting with
canonical-code deduplication is exhaustive), and a polyhedron with c cusps
corresponds to a triangulation with c edges removed, one per quadrilateral
face (every quadrilateral admits a diagonal, so edge deletion reaches every
near-triangulation).  Dualising a surviving map yields the polyhedron, with
quadrilateral faces turning into ideal vertices of degree four.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import maps
from .andreev import adjacency, check_right_angled
from .core import (Polyhedron3, dual, canonical_code, contract_edge, validate,
                   RIGHT_ANGLED_PROFILE)
from .data import load_fixture

FILTER_ALL = "all-almost-simple"
FILTER_RIGHT_ANGLED = "right-angled-accepted"

DEFAULT_CAP = 13


@dataclass(frozen=True)
class EnumSpec:
    max_faces: int
    num_cusps: int
    filter: str = FILTER_ALL

    def __post_init__(self):
        if self.num_cusps not in (0, 1, 2):
            raise ValueError("cusp count must be 0, 1 or 2")
        if self.filter not in (FILTER_ALL, FILTER_RIGHT_ANGLED):
            raise ValueError(f"unknown filter {self.filter!r}")
        if self.max_faces < 4:
            raise ValueError("a polyhedron needs at least 4 faces")


@dataclass(frozen=True)
class EnumeratedType:
    code: bytes
    faces: int
    polyhedron: Polyhedron3
    shared_cusp_faces: int | None = None

    @property
    def two_cusp_class(self) -> int | None:
        """Number of 2-faces containing both cusps (0, 1 or 2); the value 2
        signals an edge running from cusp to cusp."""
        return self.shared_cusp_faces


@dataclass
class EnumReport:
    spec: EnumSpec
    counts_by_faces: dict[int, int] = field(default_factory=dict)
    nonpolyhedral_by_faces: dict[int, int] = field(default_factory=dict)
    types: list[EnumeratedType] = field(default_factory=list)

    @property
    def codes(self) -> list[bytes]:
        return [t.code for t in self.types]

    def count(self, faces: int | None = None) -> int:
        if faces is None:
            return len(self.types)
        return self.counts_by_faces.get(faces, 0)

    def lines(self) -> list[str]:
        out = []
        for n in sorted(self.counts_by_faces):
            out.append(f"faces={n}: {self.counts_by_faces[n]} type(s)")
        skipped = sum(self.nonpolyhedral_by_faces.values())
        if skipped:
            out.append(f"non-polyhedral complexes (not 3-connected): {skipped}")
        out.append(f"total: {len(self.types)}")
        return out


# ---------------------------------------------------------------------------
# triangulation cache
# ---------------------------------------------------------------------------

_TRIANGULATIONS: dict[int, tuple[maps.Rotation, ...]] = {}


def triangulations(n: int) -> tuple[maps.Rotation, ...]:
    """All sphere triangulations with n vertices, canonical and sorted.

    Grown level by level from the tetrahedron by vertex splitting; every
    stored rotation system is the canonical representative of its class.
    """
    if n < 4:
        raise ValueError("triangulations start at 4 vertices")
    if n not in _TRIANGULATIONS:
        if n == 4:
            code, canon, _ = maps.canonical_form(maps.TETRAHEDRON)
            _TRIANGULATIONS[4] = (canon,)
        else:
            found: dict[bytes, maps.Rotation] = {}
            for rot in triangulations(n - 1):
                for v in range(len(rot)):
                    d = len(rot[v])
                    for i in range(d):
                        for j in range(i + 1, d):
                            cand = maps.split_vertex(rot, v, i, j)
                            code, canon, _ = maps.canonical_form(cand)
                            if code not in found:
                                found[code] = canon
            _TRIANGULATIONS[n] = tuple(rot for _, rot in sorted(found.items()))
    return _TRIANGULATIONS[n]


# ---------------------------------------------------------------------------
# candidate generation on the dual side
# ---------------------------------------------------------------------------

def _face_ids_per_edge(rot: maps.Rotation) -> dict[tuple[int, int], tuple[int, int]]:
    """Map each undirected edge to the ids of its two incident faces."""
    owners: dict[tuple[int, int], list[int]] = {}
    for fi, face in enumerate(maps.faces_of_rotation(rot)):
        k = len(face)
        for t in range(k):
            u, v = face[t], face[(t + 1) % k]
            e = (u, v) if u < v else (v, u)
            owners.setdefault(e, []).append(fi)
    return {e: tuple(fs) for e, fs in owners.items()}


def _right_angled_prefilter(rot: maps.Rotation, quad_vertices: dict[int, int]) -> bool:
    """Dual-side necessity check: a face of the polyhedron needs edge count
    plus cusp count at least five, i.e. every dual vertex needs degree plus
    incident quadrilateral count at least five."""
    for v, nbrs in enumerate(rot):
        if len(nbrs) + quad_vertices.get(v, 0) < 5:
            return False
    return True


def _candidates(rot: maps.Rotation, num_cusps: int, prefilter: bool):
    """Near-triangulations obtained from one triangulation by deleting
    ``num_cusps`` pairwise non-cofacial edges, as (code, canon_rot) pairs."""
    out = []
    if num_cusps == 0:
        if prefilter and not _right_angled_prefilter(rot, {}):
            return out
        code, canon, _ = maps.canonical_form(rot)
        out.append((code, canon))
        return out
    deg = [len(nbrs) for nbrs in rot]
    edges = maps.edge_set(rot)
    faces = maps.faces_of_rotation(rot)
    face_of = _face_ids_per_edge(rot)
    if num_cusps == 1:
        picks = ([e] for e in edges)
    else:
        picks = ([e1, e2] for e1, e2 in combinations(edges, 2)
                 if not set(face_of[e1]) & set(face_of[e2]))
    for pick in picks:
        drop: dict[int, int] = {}
        ok = True
        for (u, v) in pick:
            drop[u] = drop.get(u, 0) + 1
            drop[v] = drop.get(v, 0) + 1
            if deg[u] - drop[u] < 3 or deg[v] - drop[v] < 3:
                ok = False
                break
        if not ok:
            continue
        # quad corners: the deleted edge's endpoints plus the two apexes of
        # the merged triangles
        quad_at: dict[int, int] = {}
        for (u, v) in pick:
            quad_at[u] = quad_at.get(u, 0) + 1
            quad_at[v] = quad_at.get(v, 0) + 1
            for fi in face_of[(u, v)]:
                apex = next(x for x in faces[fi] if x not in (u, v))
                quad_at[apex] = quad_at.get(apex, 0) + 1
        cand = rot
        for (u, v) in pick:
            cand = maps.delete_edge(cand, u, v)
        if prefilter and not _right_angled_prefilter(cand, quad_at):
            continue
        code, canon, _ = maps.canonical_form(cand)
        out.append((code, canon))
    return out


def _collect_chunk(args):
    rot_chunk, num_cusps, prefilter = args
    found: dict[bytes, maps.Rotation] = {}
    for rot in rot_chunk:
        for code, canon in _candidates(rot, num_cusps, prefilter):
            if code not in found:
                found[code] = canon
    return found


def _dualize(rot: maps.Rotation) -> Polyhedron3:
    """Polyhedron whose dual map is ``rot``; quadrilateral faces of the map
    become ideal vertices."""
    faces = maps.faces_of_rotation(rot)
    quads = frozenset(i for i, f in enumerate(faces) if len(f) == 4)
    dual_side = Polyhedron3(vertex_count=len(rot), ideal_vertices=frozenset(),
                            faces=tuple(faces), ideal_faces=quads)
    return dual(dual_side)


def enumerate_types(spec: EnumSpec, workers: int = 1,
                    hard_cap: int = DEFAULT_CAP) -> EnumReport:
    """Enumerate every combinatorial type with at most ``spec.max_faces``
    faces, exactly ``spec.num_cusps`` degree-4 ideal vertices, all finite
    vertices of degree 3, and a 3-connected incidence structure.

    Output is deterministic (types sorted by canonical code) and
    independent of the worker count.  Complexes passing all local checks
    but failing 3-connectivity are tallied separately, never emitted.
    """
    if spec.max_faces > hard_cap:
        raise ValueError(f"face budget {spec.max_faces} above cap {hard_cap}")
    prefilter = spec.filter == FILTER_RIGHT_ANGLED
    report = EnumReport(spec=spec)
    for n in range(4, spec.max_faces + 1):
        tris = triangulations(n)
        found: dict[bytes, maps.Rotation] = {}
        if workers > 1 and len(tris) >= workers * 4:
            size = (len(tris) + workers - 1) // workers
            chunks = [(tris[i:i + size], spec.num_cusps, prefilter)
                      for i in range(0, len(tris), size)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_collect_chunk, chunks):
                    for code, canon in part.items():
                        found.setdefault(code, canon)
        else:
            found = _collect_chunk((tris, spec.num_cusps, prefilter))
        for code in sorted(found):
            rot = found[code]
            if not maps.is_three_connected(rot):
                report.nonpolyhedral_by_faces[n] = report.nonpolyhedral_by_faces.get(n, 0) + 1
                continue
            p = _dualize(rot)
            rep = validate(p, RIGHT_ANGLED_PROFILE)
            if not rep.clean:
                raise AssertionError(f"enumerated type fails validation: {rep.lines()}")
            if len(p.ideal_vertices) != spec.num_cusps:
                raise AssertionError("cusp count mismatch after dualisation")
            if prefilter and check_right_angled(p).verdict != "pass":
                continue
            shared = None
            if spec.num_cusps == 2:
                c1, c2 = sorted(p.ideal_vertices)
                shared = sum(1 for f in p.faces if c1 in f and c2 in f)
            report.types.append(EnumeratedType(
                code=canonical_code(p), faces=n, polyhedron=p,
                shared_cusp_faces=shared))
            report.counts_by_faces[n] = report.counts_by_faces.get(n, 0) + 1
    report.types.sort(key=lambda t: (t.faces, t.code))
    return report


# ---------------------------------------------------------------------------
# named verifications
# ---------------------------------------------------------------------------

@dataclass
class OneCuspMinimumReport:
    counts_by_faces: dict[int, int]
    face_sizes: list[int]
    cusp_cycle_sizes: tuple[int, ...]
    quads_adjacent: bool
    matches_contracted_dodecahedron: bool

    @property
    def ok(self) -> bool:
        return (all(c == 0 for n, c in self.counts_by_faces.items() if n < 12)
                and self.counts_by_faces.get(12, 0) == 1
                and self.face_sizes == [4, 4] + [5] * 10
                and self.cusp_cycle_sizes in ((4, 5, 4, 5), (5, 4, 5, 4))
                and not self.quads_adjacent
                and self.matches_contracted_dodecahedron)

    def lines(self) -> list[str]:
        low = sum(c for n, c in self.counts_by_faces.items() if n <= 11)
        out = [f"0 types @ <=11; {self.counts_by_faces.get(12, 0)} type @ 12"
               if low == 0 else f"{low} types @ <=11 (unexpected)"]
        out.append(f"face sizes: {self.face_sizes}")
        out.append(f"cusp-incident face sizes around the cusp: {self.cusp_cycle_sizes}")
        out.append(f"the two quadrilaterals are {'' if self.quads_adjacent else 'not '}adjacent")
        out.append("canonical code matches the contracted dodecahedron: "
                   + ("yes" if self.matches_contracted_dodecahedron else "NO"))
        return out


def verify_lemma31(workers: int = 1) -> OneCuspMinimumReport:
    """Exhaustively confirm that a one-cusp type needs 12 faces, that the
    12-face type is unique with face sizes {4,4,5^10}, that the sizes
    alternate 4,5,4,5 around the cusp with the quadrilaterals non-adjacent
    (the parallel pair), and that it equals the contracted dodecahedron."""
    report = enumerate_types(EnumSpec(12, 1, FILTER_RIGHT_ANGLED), workers=workers)
    counts = dict(report.counts_by_faces)
    face_sizes = []
    cusp_cycle = ()
    quads_adjacent = True
    matches = False
    if counts.get(12, 0) == 1:
        p = report.types[-1].polyhedron
        face_sizes = p.face_sizes()
        cusp = next(iter(p.ideal_vertices))
        rot = p.rotation()
        around = []
        for u in rot[cusp]:
            fi = next(i for i, f in enumerate(p.faces)
                      if _has_dart(f, u, cusp))
            around.append(len(p.faces[fi]))
        cusp_cycle = tuple(around)
        quad_ids = [i for i, f in enumerate(p.faces) if len(f) == 4]
        quads_adjacent = tuple(quad_ids) in adjacency(p)
        dode = load_fixture("dodecahedron")
        contracted = contract_edge(dode, dode.edges[0])
        matches = canonical_code(contracted) == report.types[-1].code
    return OneCuspMinimumReport(
        counts_by_faces=counts, face_sizes=face_sizes,
        cusp_cycle_sizes=cusp_cycle, quads_adjacent=quads_adjacent,
        matches_contracted_dodecahedron=matches)


def _has_dart(face, u, v) -> bool:
    k = len(face)
    return any(face[i] == u and face[(i + 1) % k] == v for i in range(k))


@dataclass
class TwoCuspMinimaReport:
    budget: int
    floors: dict[int, int]
    violations: list[tuple[int, int]]
    counts: dict[tuple[int, int], int]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = []
        for t in sorted(self.floors):
            seen = sorted(n for (cls, n) in self.counts if cls == t)
            first = seen[0] if seen else None
            out.append(f"class t={t}: floor {self.floors[t]}, first accepted type at "
                       f"{first if first is not None else f'none <= {self.budget}'}")
        for t, n in self.violations:
            out.append(f"VIOLATION: class t={t} type with {n} faces")
        return out


TWO_CUSP_FLOORS = {0: 8, 1: 9, 2: 10}


def two_cusp_minima(budget: int = 10, workers: int = 1) -> TwoCuspMinimaReport:
    """Check the two-cusp face-count floors by exhaustion: classified by the
    number t of 2-faces containing both cusps, accepted types need at least
    8 (t=0), 9 (t=1) and 10 (t=2) faces."""
    report = enumerate_types(EnumSpec(budget, 2, FILTER_RIGHT_ANGLED), workers=workers)
    counts: dict[tuple[int, int], int] = {}
    violations = []
    for t in report.types:
        cls = t.shared_cusp_faces
        if cls not in TWO_CUSP_FLOORS:
            raise AssertionError(f"unexpected shared-face count {cls}")
        counts[(cls, t.faces)] = counts.get((cls, t.faces), 0) + 1
        if t.faces < TWO_CUSP_FLOORS[cls]:
            violations.append((cls, t.faces))
    return TwoCuspMinimaReport(budget=budget, floors=dict(TWO_CUSP_FLOORS),
                               violations=violations, counts=counts)
