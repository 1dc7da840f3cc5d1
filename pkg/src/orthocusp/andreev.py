"""Acute-angled and right-angled realizability checks for 3-polyhedra.

Angles are exact rationals q with 0 < q <= 1/2, read as a dihedral angle of
q*pi.  Every condition is an equality or strict inequality between sums of
rationals, so no floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import Edge, Polyhedron3, Poly3Error, require_valid, _norm_edge

HALF = Fraction(1, 2)

#: Condition keys, in report order.  'a'..'e' are the acute-angled vertex,
#: cusp and circuit conditions; the remaining keys are the structural
#: right-angled requirements.
CONDITION_KEYS = ("a", "b", "c", "d", "e",
                  "face_size", "single_shared_edge", "vertex_degree", "cusp_degree")


class AngleError(Poly3Error):
    """Missing or out-of-range dihedral angle."""


@dataclass
class ConditionReport:
    """Per-condition witness lists; the check passes when all are empty.

    ``excluded_family`` marks the two combinatorial types (tetrahedron,
    triangular prism) that the realizability criterion does not cover; for
    them ``verdict`` is ``"outside-scope"`` instead of pass/fail.
    """

    entries: dict[str, list] = field(default_factory=dict)
    excluded_family: bool = False

    def witnesses(self, key: str) -> list:
        return self.entries.get(key, [])

    @property
    def passed(self) -> bool:
        return not self.excluded_family and all(not v for v in self.entries.values())

    @property
    def verdict(self) -> str:
        if self.excluded_family:
            return "outside-scope"
        return "pass" if self.passed else "fail"

    def lines(self) -> list[str]:
        out = [f"verdict: {self.verdict}"]
        for key in CONDITION_KEYS:
            if key not in self.entries:
                continue
            wits = self.entries[key]
            status = "ok" if not wits else f"{len(wits)} witness(es)"
            out.append(f"condition {key}: {status}")
            for w in wits:
                out.append(f"  {w}")
        return out


@dataclass(frozen=True)
class PrismaticCircuit:
    """3 or 4 faces, cyclically adjacent, opposite pairs non-adjacent, with
    no vertex and no cusp common to all members."""

    faces: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.faces)


def adjacency(p: Polyhedron3) -> dict[tuple[int, int], list[Edge]]:
    """Symmetric face-pair table: shared edges of every adjacent pair.

    Entries under both (i, j) and (j, i); a multiplicity above one signals
    two faces sharing several edges.
    """
    require_valid(p)
    edge_owner: dict[Edge, list[int]] = {}
    for fi, face in enumerate(p.faces):
        k = len(face)
        for t in range(k):
            e = _norm_edge(face[t], face[(t + 1) % k])
            owners = edge_owner.setdefault(e, [])
            if fi not in owners:
                owners.append(fi)
    table: dict[tuple[int, int], list[Edge]] = {}
    for e, owners in edge_owner.items():
        if len(owners) == 2:
            a, b = owners
            table.setdefault((a, b), []).append(e)
            table.setdefault((b, a), []).append(e)
    for key in table:
        table[key].sort()
    return table


def prismatic_circuits(p: Polyhedron3, length: int) -> list[PrismaticCircuit]:
    """All prismatic circuits of the given length (3 or 4), one per
    rotation/reflection class.

    Length 3: pairwise adjacent triples.  Length 4: 4-tuples whose adjacency
    pattern is an induced 4-cycle (consecutive adjacent, diagonals not).
    Tuples whose members all contain one vertex, or all contain one cusp,
    are excluded; in particular the four faces around a cusp never qualify.
    """
    if length not in (3, 4):
        raise ValueError("circuit length must be 3 or 4")
    table = adjacency(p)
    nf = len(p.faces)
    adj = [[False] * nf for _ in range(nf)]
    for (a, b) in table:
        adj[a][b] = True
    vsets = [set(face) for face in p.faces]
    out = []
    if length == 3:
        for a, b, c in combinations(range(nf), 3):
            if adj[a][b] and adj[a][c] and adj[b][c]:
                common = vsets[a] & vsets[b] & vsets[c]
                if not common:
                    out.append(PrismaticCircuit((a, b, c)))
    else:
        for quad in combinations(range(nf), 4):
            pairs = [(x, y) for x, y in combinations(quad, 2) if adj[x][y]]
            if len(pairs) != 4:
                continue
            degree = {x: 0 for x in quad}
            for x, y in pairs:
                degree[x] += 1
                degree[y] += 1
            if any(d != 2 for d in degree.values()):
                continue
            common = vsets[quad[0]] & vsets[quad[1]] & vsets[quad[2]] & vsets[quad[3]]
            if common:
                continue
            a = quad[0]
            nbrs = [x for x in quad if adj[a][x]]
            opposite = next(x for x in quad if x != a and x not in nbrs)
            out.append(PrismaticCircuit((a, nbrs[0], opposite, nbrs[1])))
    return out


def right_angles(p: Polyhedron3) -> dict[Edge, Fraction]:
    """The all-right assignment: every edge gets angle pi/2."""
    return {e: HALF for e in p.edges}


def parse_angles(text: str) -> dict[Edge, Fraction]:
    """Parse an angle file: lines ``angle: u v p q`` meaning edge {u,v} has
    dihedral angle (p/q)*pi."""
    angles: dict[Edge, Fraction] = {}
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("angle:"):
            raise AngleError(f"unexpected line {line!r}", num)
        parts = line.split(":", 1)[1].split()
        if len(parts) != 4:
            raise AngleError("expected 'angle: u v p q'", num)
        try:
            u, v, pn, qd = (int(t) for t in parts)
        except ValueError:
            raise AngleError("angle tokens must be integers", num) from None
        angles[_norm_edge(u, v)] = Fraction(pn, qd)
    return angles


def _is_tetrahedron(p: Polyhedron3) -> bool:
    return p.face_count == 4 and p.face_sizes() == [3, 3, 3, 3]


def _is_triangular_prism(p: Polyhedron3) -> bool:
    return p.face_count == 5 and p.face_sizes() == [3, 3, 4, 4, 4]


def _cusps_of_face(p: Polyhedron3, fi: int) -> set[int]:
    return set(p.faces[fi]) & p.ideal_vertices


def _edges_at_vertex(p: Polyhedron3, v: int) -> list[Edge]:
    return [e for e in p.edges if v in e]


def _faces_at_vertex(p: Polyhedron3, v: int) -> list[int]:
    return [fi for fi, face in enumerate(p.faces) if v in face]


def check_andreev(p: Polyhedron3, angles: dict[Edge, Fraction]) -> ConditionReport:
    """Evaluate the realizability conditions for an acute-angled almost
    simple polyhedron of finite volume with the given dihedral angles.

    Requires finite vertices of degree 3 and cusps of degree 3 or 4.  The
    tetrahedron and triangular prism types receive the outside-scope
    verdict.  Angle q means q*pi; every edge needs one entry in (0, 1/2].
    """
    require_valid(p)
    edges = p.edges
    for e in edges:
        if e not in angles:
            raise AngleError(f"missing angle for edge {e}")
        q = angles[e]
        if not (0 < q <= HALF):
            raise AngleError(f"angle {q} for edge {e} outside (0, 1/2]")
    for v in range(p.vertex_count):
        d = p.vertex_degree(v)
        if v in p.ideal_vertices:
            if d not in (3, 4):
                raise Poly3Error(f"cusp {v} has degree {d}, need 3 or 4")
        elif d != 3:
            raise Poly3Error(f"finite vertex {v} has degree {d}, need 3 (almost simple)")

    report = ConditionReport()
    if _is_tetrahedron(p) or _is_triangular_prism(p):
        report.excluded_family = True
        return report

    report.entries = {k: [] for k in ("a", "b", "c", "d", "e")}
    table = adjacency(p)

    for v in range(p.vertex_count):
        at = _edges_at_vertex(p, v)
        total = sum(angles[e] for e in at)
        if v in p.ideal_vertices:
            if len(at) == 3:
                if total != 1:
                    report.entries["a"].append((v, total))
            else:
                bad = [e for e in at if angles[e] != HALF]
                if bad:
                    report.entries["b"].append((v, bad))
        else:
            if total < 1:
                report.entries["a"].append((v, total))

    def pair_angles(a: int, b: int):
        return [angles[e] for e in table[(a, b)]]

    for circ in prismatic_circuits(p, 3):
        a, b, c = circ.faces
        for qa in pair_angles(a, b):
            for qb in pair_angles(a, c):
                for qc in pair_angles(b, c):
                    if qa + qb + qc >= 1:
                        report.entries["c"].append((circ.faces, qa + qb + qc))

    # (d): F_i adjacent to F_j and F_k; F_j, F_k non-adjacent with a common
    # cusp that F_i does not contain; then one of the two angles is not 1/2.
    nf = len(p.faces)
    for j, k in combinations(range(nf), 2):
        if (j, k) in table:
            continue
        shared_cusps = _cusps_of_face(p, j) & _cusps_of_face(p, k)
        if not shared_cusps:
            continue
        for i in range(nf):
            if i in (j, k) or (i, j) not in table or (i, k) not in table:
                continue
            if shared_cusps <= set(p.faces[i]):
                continue
            if all(q == HALF for q in pair_angles(i, j) + pair_angles(i, k)):
                report.entries["d"].append((i, j, k, sorted(shared_cusps)))

    for circ in prismatic_circuits(p, 4):
        a, b, c, d = circ.faces
        ring = [(a, b), (b, c), (c, d), (d, a)]
        if all(q == HALF for x, y in ring for q in pair_angles(x, y)):
            report.entries["e"].append((circ.faces,))
    return report


def check_right_angled(p: Polyhedron3) -> ConditionReport:
    """Decide whether a combinatorial type satisfies every requirement of a
    right-angled realization.

    Structural requirements reported directly: each face needs edge count
    plus incident cusp count at least five; adjacent faces share exactly one
    edge; finite vertices have degree three and every cusp degree four.
    The remaining conditions coincide with the all-right angle assignment:
    no prismatic 3- or 4-circuit may exist and no non-adjacent face pair may
    share a cusp avoiding a common neighbour face.
    """
    require_valid(p)
    report = ConditionReport()
    if _is_tetrahedron(p) or _is_triangular_prism(p):
        report.excluded_family = True
        return report
    report.entries = {k: [] for k in CONDITION_KEYS}

    for fi, face in enumerate(p.faces):
        cusps = len(set(face) & p.ideal_vertices)
        if len(face) + cusps < 5:
            report.entries["face_size"].append((fi, len(face), cusps))

    table = adjacency(p)
    for (a, b), shared in table.items():
        if a < b and len(shared) > 1:
            report.entries["single_shared_edge"].append((a, b, shared))

    for v in range(p.vertex_count):
        d = p.vertex_degree(v)
        if v in p.ideal_vertices:
            if d != 4:
                report.entries["cusp_degree"].append((v, d))
        elif d != 3:
            report.entries["vertex_degree"].append((v, d))

    for circ in prismatic_circuits(p, 3):
        report.entries["c"].append((circ.faces, Fraction(3, 2)))
    for circ in prismatic_circuits(p, 4):
        report.entries["e"].append((circ.faces,))
    nf = len(p.faces)
    for j, k in combinations(range(nf), 2):
        if (j, k) in table:
            continue
        shared_cusps = _cusps_of_face(p, j) & _cusps_of_face(p, k)
        if not shared_cusps:
            continue
        for i in range(nf):
            if i in (j, k) or (i, j) not in table or (i, k) not in table:
                continue
            if not shared_cusps <= set(p.faces[i]):
                report.entries["d"].append((i, j, k, sorted(shared_cusps)))
    return report
