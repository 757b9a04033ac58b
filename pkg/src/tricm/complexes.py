"""Simplicial complexes: independence/clique complexes, f/h-vectors, links.

A complex stores its faces grouped by dimension.  Two degenerate cases are
distinguished: the void complex (no faces at all) and the complex {∅}
(only the empty face, dimension -1).  D(n) denotes the independence
complex of the triangular graph T_n; D(n) is void for n < 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import graphs
from .graphs import Graph, mask_to_set, set_to_mask


@dataclass
class SimplicialComplex:
    vertex_count: int
    faces_by_dim: tuple[tuple[tuple[int, ...], ...], ...]
    has_empty_face: bool = True

    def __post_init__(self):
        self.faces_by_dim = tuple(
            tuple(sorted(tuple(sorted(f)) for f in level))
            for level in self.faces_by_dim
        )
        if self.faces_by_dim and not self.has_empty_face:
            raise ValueError("nonempty complex must contain the empty face")
        for d, level in enumerate(self.faces_by_dim):
            if len(set(level)) != len(level):
                raise ValueError(f"duplicate faces in dimension {d}")
            for f in level:
                if len(f) != d + 1:
                    raise ValueError(f"face {f} stored at wrong dimension {d}")
                if f and not (0 <= f[0] and f[-1] < self.vertex_count):
                    raise ValueError(f"face {f} out of range")

    @property
    def is_void(self) -> bool:
        return not self.has_empty_face

    @property
    def dim(self) -> int:
        """Dimension; -1 for {∅}.  Raises on the void complex."""
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return len(self.faces_by_dim) - 1

    def face_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_dim)

    def all_faces(self) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = [()] if self.has_empty_face else []
        for level in self.faces_by_dim:
            out.extend(level)
        return out

    def face_masks(self) -> set[int]:
        return {set_to_mask(f) for f in self.all_faces()}

    def has_face(self, f) -> bool:
        f = tuple(sorted(f))
        if not f:
            return self.has_empty_face
        d = len(f) - 1
        return d < len(self.faces_by_dim) and f in set(self.faces_by_dim[d])


VOID = SimplicialComplex(0, (), has_empty_face=False)
EMPTY_ONLY = SimplicialComplex(0, (), has_empty_face=True)


def from_faces(vertex_count: int, faces, close: bool = False) -> SimplicialComplex:
    """Build a complex from a face list.  With close=True the subset
    closure is generated; otherwise the input must already be closed."""
    face_set = {tuple(sorted(f)) for f in faces}
    if close:
        stack = list(face_set)
        while stack:
            f = stack.pop()
            for k in range(len(f)):
                sub = f[:k] + f[k + 1 :]
                if sub not in face_set:
                    face_set.add(sub)
                    stack.append(sub)
    if not face_set:
        return SimplicialComplex(vertex_count, (), has_empty_face=False)
    if () not in face_set:
        raise ValueError("nonvoid complex must contain the empty face")
    maxdim = max(len(f) for f in face_set) - 1
    levels = [[] for _ in range(maxdim + 1)]
    for f in face_set:
        if f:
            levels[len(f) - 1].append(f)
    c = SimplicialComplex(vertex_count, tuple(tuple(l) for l in levels))
    _check_closed(c)
    return c


def _check_closed(c: SimplicialComplex):
    seen = {()}
    for level in c.faces_by_dim:
        seen.update(level)
    for level in c.faces_by_dim[1:]:
        for f in level:
            for k in range(len(f)):
                if f[:k] + f[k + 1 :] not in seen:
                    raise ValueError(f"complex not closed: missing subset of {f}")


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are the independent sets of g."""
    faces = graphs.independent_sets(g)
    maxdim = max(len(f) for f in faces) - 1
    if maxdim < 0:
        return SimplicialComplex(g.vertex_count, ())
    levels = [[] for _ in range(maxdim + 1)]
    for f in faces:
        if f:
            levels[len(f) - 1].append(f)
    return SimplicialComplex(g.vertex_count, tuple(tuple(l) for l in levels))


def clique_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are the cliques of g."""
    return independence_complex(graphs.complement(g))


def triangular_complex(n: int) -> SimplicialComplex:
    """D(n), the independence complex of T_n; void for n < 2."""
    if n < 2:
        return VOID
    return independence_complex(graphs.triangular(n))


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_d), exact integers, f_{-1} = 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("f-vector must start with f_{-1} = 1")

    @property
    def dim(self) -> int:
        return len(self.entries) - 2


@dataclass(frozen=True)
class HVector:
    """h-vector (h_0, ..., h_{d+1}); entries may be negative, h_0 = 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("h-vector must start with h_0 = 1")


def f_vector(c: SimplicialComplex) -> FVector:
    if c.is_void:
        raise ValueError("f-vector of the void complex is undefined")
    return FVector((1,) + c.face_counts())


def h_vector(f: FVector) -> HVector:
    """Binomial transform h_k = sum_i (-1)^{k-i} C(d+1-i, k-i) f_{i-1}."""
    d = f.dim
    entries = []
    for k in range(d + 2):
        h = 0
        for i in range(k + 1):
            h += (-1) ** (k - i) * math.comb(d + 1 - i, k - i) * f.entries[i]
        entries.append(h)
    return HVector(tuple(entries))


def triangular_f_closed(n: int) -> FVector:
    """Closed-form f-vector of D(n): f_i = n! / (2^{i+1} (i+1)! (n-2i-2)!)."""
    if n < 2:
        raise ValueError("requires n >= 2")
    entries = [1]
    for i in range(n // 2):
        num = math.factorial(n)
        den = 2 ** (i + 1) * math.factorial(i + 1) * math.factorial(n - 2 * (i + 1))
        assert num % den == 0
        entries.append(num // den)
    return FVector(tuple(entries))


def link(c: SimplicialComplex, f) -> SimplicialComplex:
    """Link of the face f: all H with H ∩ f = ∅ and H ∪ f ∈ c."""
    f = tuple(sorted(f))
    if not c.has_face(f):
        raise ValueError(f"{f} is not a face of the complex")
    fmask = set_to_mask(f)
    masks = c.face_masks()
    faces = []
    for g in c.all_faces():
        gmask = set_to_mask(g)
        if gmask & fmask == 0 and (gmask | fmask) in masks:
            faces.append(g)
    return from_faces(c.vertex_count, faces)


def restrict_relabel(c: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, int]]:
    """Restrict a complex to its occupied vertices, relabeled
    order-preservingly to 0..k-1.  Returns (complex, old->new map)."""
    if c.is_void:
        return c, {}
    verts = sorted({v for f in c.all_faces() for v in f})
    remap = {v: i for i, v in enumerate(verts)}
    faces = [tuple(remap[v] for v in f) for f in c.all_faces()]
    return from_faces(len(verts), faces), remap


def link_triangular_witness(n: int, f) -> dict[int, int]:
    """Explicit vertex bijection from link_{D(n)}(f) onto D(n - 2|f|).

    The face f kills 2|f| symbols; surviving symbols are re-indexed
    order-preservingly and each surviving pair is mapped to its rank in
    the smaller triangular graph.  Under this map the link's face set
    equals the face set of D(n - 2|f|) exactly.
    """
    f = tuple(sorted(f))
    c = triangular_complex(n)
    if not c.has_face(f):
        raise ValueError(f"{f} is not a face of D({n})")
    used = set()
    for v in f:
        used.update(graphs.rank_pair(v, n))
    survivors = [s for s in range(1, n + 1) if s not in used]
    srank = {s: k + 1 for k, s in enumerate(survivors)}
    m = len(survivors)
    mapping = {}
    for a in range(len(survivors)):
        for b in range(a + 1, len(survivors)):
            i, j = survivors[a], survivors[b]
            old = graphs.pair_rank(i, j, n)
            mapping[old] = graphs.pair_rank(srank[i], srank[j], m)
    return mapping


def relabel(c: SimplicialComplex, mapping: dict[int, int], vertex_count: int) -> SimplicialComplex:
    """Apply a vertex relabeling map to every face."""
    faces = [tuple(sorted(mapping[v] for v in f)) for f in c.all_faces()]
    if not faces:
        return VOID
    return from_faces(vertex_count, faces)


def component_count(c: SimplicialComplex) -> int:
    """Connected components of the 1-skeleton (on the complex's vertices)."""
    if c.is_void:
        raise ValueError("void complex")
    if not c.faces_by_dim:
        return 0
    verts = [f[0] for f in c.faces_by_dim[0]]
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if len(c.faces_by_dim) > 1:
        for u, v in c.faces_by_dim[1]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in verts})


def is_connected(c: SimplicialComplex) -> bool:
    if c.is_void:
        raise ValueError("void complex")
    return component_count(c) == 1


def serialize(c: SimplicialComplex) -> str:
    """Text format: header "dim <d> vertices <N>", then one face per line
    as sorted space-separated indices (the empty face is implicit)."""
    if c.is_void:
        return "dim -2 vertices 0\n"
    lines = [f"dim {c.dim} vertices {c.vertex_count}"]
    for level in c.faces_by_dim:
        for f in level:
            lines.append(" ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> SimplicialComplex:
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#")]
    if not lines:
        raise ValueError("empty complex file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "dim" or head[2] != "vertices":
        raise ValueError("bad complex header")
    d, n = int(head[1]), int(head[3])
    if d == -2:
        return VOID
    faces = [tuple(int(t) for t in line.split()) for line in lines[1:]]
    c = from_faces(n, faces + [()])
    if c.dim != d:
        raise ValueError(f"header dim {d} != actual dim {c.dim}")
    return c
