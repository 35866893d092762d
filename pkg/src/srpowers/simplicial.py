"""Simplicial complexes, their non-faces, and facet-complement primes.

A complex is stored by its facets only.  Vertex sets are plain sorted tuples of
non-negative integers, which keeps them hashable and gives lexicographic
ordering for free.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

VertexSet = tuple[int, ...]


class CapBindingWarning(UserWarning):
    """The non-face search stopped while faces of the cap size still exist."""


def vertex_set(members: Iterable[int]) -> VertexSet:
    out = tuple(sorted(set(int(v) for v in members)))
    if out and out[0] < 0:
        raise ValueError(f"negative vertex index in {out}")
    return out


def _is_subset(small: VertexSet, big: VertexSet) -> bool:
    return set(small).issubset(big)


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices ``0..num_vertices-1`` together with the list of facets."""

    num_vertices: int
    facets: tuple[VertexSet, ...]

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ValueError("a complex needs at least one vertex")
        facets = sorted({vertex_set(f) for f in self.facets})
        for f in facets:
            if f and f[-1] >= self.num_vertices:
                raise ValueError(f"facet {f} uses a vertex >= {self.num_vertices}")
        for a, b in combinations(facets, 2):
            if _is_subset(a, b) or _is_subset(b, a):
                raise ValueError(f"facets {a} and {b} are nested")
        covered = set().union(*facets) if facets else set()
        missing = set(range(self.num_vertices)) - covered
        if missing:
            raise ValueError(f"vertices {sorted(missing)} lie in no facet")
        object.__setattr__(self, "facets", tuple(facets))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def to_text(self) -> str:
        lines = [f"vertices {self.num_vertices}"]
        lines += [" ".join(map(str, f)) for f in self.facets]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        rows = [r for r in rows if r]
        if not rows or not rows[0].startswith("vertices"):
            raise ValueError("complex file must start with 'vertices N'")
        head = rows[0].split()
        if len(head) != 2:
            raise ValueError(f"malformed header {rows[0]!r}")
        facets = [tuple(int(t) for t in r.split()) for r in rows[1:]]
        return cls(int(head[1]), tuple(facets))


def build_bipyramid(n: int) -> SimplicialComplex:
    """Boundary complex of the bipyramid over an n-gon.

    Vertex 0 is the upper apex, 1..n run around the base cycle and n+1 is the
    lower apex.  The facets are the 2n triangles apex + base edge.
    """
    if n < 3:
        raise ValueError(f"bipyramid needs n >= 3, got {n}")
    facets = []
    for i in range(1, n + 1):
        j = i % n + 1
        facets.append((0, i, j))
        facets.append((n + 1, i, j))
    return SimplicialComplex(n + 2, tuple(facets))


def _check_range(complex_: SimplicialComplex, s: Iterable[int]) -> VertexSet:
    s = vertex_set(s)
    if s and s[-1] >= complex_.num_vertices:
        raise ValueError(f"vertex {s[-1]} out of range for {complex_.num_vertices} vertices")
    return s


def is_face(complex_: SimplicialComplex, s: Iterable[int]) -> bool:
    s = _check_range(complex_, s)
    return any(_is_subset(s, f) for f in complex_.facets)


def minimal_nonfaces(complex_: SimplicialComplex, cap: int | None = None) -> list[VertexSet]:
    """Inclusion-minimal non-faces, sorted lexicographically.

    Candidates of size k are built from faces of size k-1, so a candidate is a
    minimal non-face exactly when it is not itself a face.  Every minimal
    non-face has size at most ``dimension + 2``, which is the default cap.
    """
    full_cap = complex_.dimension + 2
    if cap is None:
        cap = full_cap
    faces: set[VertexSet] = {()}
    found: list[VertexSet] = []
    for k in range(1, cap + 1):
        next_faces: set[VertexSet] = set()
        for f in faces:
            start = f[-1] + 1 if f else 0
            for v in range(start, complex_.num_vertices):
                cand = f + (v,)
                if any(cand[:i] + cand[i + 1:] not in faces for i in range(k - 1)):
                    continue
                if is_face(complex_, cand):
                    next_faces.add(cand)
                else:
                    found.append(cand)
        faces = next_faces
        if not faces:
            break
    if faces and cap < full_cap:
        warnings.warn(
            f"non-face search capped at size {cap} while faces of that size remain; "
            "larger minimal non-faces may be missing",
            CapBindingWarning,
            stacklevel=2,
        )
    return sorted(found)


def facet_complement_primes(complex_: SimplicialComplex) -> list[VertexSet]:
    everything = set(range(complex_.num_vertices))
    return sorted({vertex_set(everything - set(f)) for f in complex_.facets})


def enumerate_base_paths(n: int) -> list[VertexSet]:
    """The n paths of n-2 consecutive vertices in the base cycle 1..n.

    Path number i starts at base vertex i and leaves out the edge just before
    it.  Every subtree of the n-cycle with n-2 vertices is one of these.
    """
    if n < 4:
        raise ValueError(f"base paths need n >= 4, got {n}")
    return [vertex_set((i - 1 + t) % n + 1 for t in range(n - 2)) for i in range(1, n + 1)]
