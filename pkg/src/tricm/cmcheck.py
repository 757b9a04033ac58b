"""Cohen-Macaulay decisions: h-vector screening, the Reisner criterion,
and the parity-reduced check specialized to triangular graphs.

Check ordering follows cost: the h-vector screen needs no linear algebra,
1-dimensional complexes reduce to connectivity, and only then is link
homology computed, cheapest links first.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import complexes, graphs, homology
from .complexes import SimplicialComplex
from .homology import FieldSpec

CM = "CM"
NOT_CM = "NOT_CM"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Witness:
    """A reason for a NOT_CM verdict: either a nonvanishing link homology
    group (kind "homology", index i, value dim H~_i) or a negative h-vector
    entry (kind "h-vector", index k, value h_k)."""

    complex_id: str
    kind: str
    index: int
    value: int


@dataclass(frozen=True)
class CmVerdict:
    status: str
    field: FieldSpec
    witnesses: tuple[Witness, ...]
    method: str

    def __post_init__(self):
        if self.status == NOT_CM and not self.witnesses:
            raise ValueError("NOT_CM verdict requires a witness")
        if self.status == CM and self.method not in (
            "connectivity",
            "reisner-full",
            "reisner-parity",
            "fast-path-theorem",
        ):
            raise ValueError(f"CM verdict with method {self.method!r}")


@dataclass(frozen=True)
class KrullDimension:
    value: int


def h_screen(c: SimplicialComplex) -> int | None:
    """Index of the first negative h-vector entry, or None if all are
    nonnegative.  A negative entry rules out CM over every field."""
    if c.is_void:
        raise ValueError("void complex")
    h = complexes.h_vector(complexes.f_vector(c))
    for k, v in enumerate(h.entries):
        if v < 0:
            return k
    return None


def _link_digest(link: SimplicialComplex) -> bytes:
    reduced, _ = complexes.restrict_relabel(link)
    payload = complexes.serialize(reduced).encode()
    return hashlib.sha256(payload).digest()


def _betti_violation(table: homology.BettiTable, dim: int) -> tuple[int, int] | None:
    """First index i < dim with dim H~_i != 0, as (i, value)."""
    for i, b in enumerate(table.dims, start=-1):
        if i >= dim:
            break
        if b != 0:
            return i, b
    return None


def reisner_check(c: SimplicialComplex, field: FieldSpec, name: str = "complex") -> CmVerdict:
    """Full Reisner criterion: CM iff H~_i(lk(F); field) = 0 for every face
    F (including the empty one) and every i < dim lk(F)."""
    if c.is_void:
        raise ValueError("void complex")
    if c.dim <= 0:
        return CmVerdict(CM, field, (), "reisner-full")
    if c.dim == 1:
        # 1-dimensional: links of vertices/edges are vacuous, so CM iff
        # the complex is connected
        if complexes.is_connected(c):
            return CmVerdict(CM, field, (), "connectivity")
        table = homology.reduced_betti_table(c, field)
        i, b = _betti_violation(table, c.dim)
        return CmVerdict(
            NOT_CM, field, (Witness(f"lk({name}, ())", "homology", i, b),), "connectivity"
        )
    seen: set[bytes] = set()
    for f in c.all_faces():
        lk = complexes.link(c, f)
        if lk.dim <= 0:
            continue
        digest = _link_digest(lk)
        if digest in seen:
            continue
        seen.add(digest)
        table = homology.reduced_betti_table(lk, field)
        hit = _betti_violation(table, lk.dim)
        if hit is not None:
            i, b = hit
            wid = f"lk({name}, {f})"
            return CmVerdict(NOT_CM, field, (Witness(wid, "homology", i, b),), "reisner-full")
    return CmVerdict(CM, field, (), "reisner-full")


def reisner_triangular(n: int, field: FieldSpec) -> CmVerdict:
    """Parity-reduced Reisner check for T_n: every link of D(n) is a copy
    of D(l) for some l <= n of the same parity, so only those complexes
    are examined."""
    if n < 2:
        raise ValueError("requires n >= 2")
    start = 2 if n % 2 == 0 else 3
    for l in range(start, n + 1, 2):
        c = complexes.triangular_complex(l)
        if c.is_void or c.dim <= 0:
            continue
        if c.dim == 1:
            if not complexes.is_connected(c):
                table = homology.reduced_betti_table(c, field)
                i, b = _betti_violation(table, c.dim)
                return CmVerdict(
                    NOT_CM, field, (Witness(f"delta({l})", "homology", i, b),), "reisner-parity"
                )
            continue
        table = homology.reduced_betti_table(c, field)
        hit = _betti_violation(table, c.dim)
        if hit is not None:
            i, b = hit
            return CmVerdict(
                NOT_CM, field, (Witness(f"delta({l})", "homology", i, b),), "reisner-parity"
            )
    return CmVerdict(CM, field, (), "reisner-parity")


def _h_screen_witness(n: int) -> Witness:
    h = complexes.h_vector(complexes.triangular_f_closed(n))
    for k, v in enumerate(h.entries):
        if v < 0:
            return Witness(f"delta({n})", "h-vector", k, v)
    raise AssertionError(f"h-vector of D({n}) has no negative entry")


def classify_triangular(n: int, field: FieldSpec, force_full: bool = False) -> CmVerdict:
    """Classification of T_n over the given field.

    Fast paths: n in {2,3,5} are CM; even n >= 4 are not (D(4) is
    disconnected and failure propagates up by parity); odd n >= 11 are not
    (negative h-vector entry of D(11) plus parity monotonicity); n in
    {7,9} require the field-dependent homology check.
    """
    if n < 2:
        raise ValueError("requires n >= 2")
    fast = _classify_fast(n, field)
    if not force_full:
        return fast
    # full route: h-screen first (it refutes D(11) with no linear algebra),
    # then the parity-reduced homology check
    k = h_screen(complexes.triangular_complex(n)) if n >= 4 else None
    if k is not None:
        h = complexes.h_vector(complexes.triangular_f_closed(n))
        full = CmVerdict(
            NOT_CM, field, (Witness(f"delta({n})", "h-vector", k, h.entries[k]),), "h-screen"
        )
    else:
        full = reisner_triangular(n, field)
    if full.status != fast.status:
        raise AssertionError(
            f"full Reisner check disagrees with fast path for n={n}: "
            f"{full.status} vs {fast.status}"
        )
    return full


def _classify_fast(n: int, field: FieldSpec) -> CmVerdict:
    if n in (2, 3, 5):
        return CmVerdict(CM, field, (), "fast-path-theorem")
    if n % 2 == 0:
        # D(4) is 1-dimensional with 3 components; same-parity monotonicity
        return CmVerdict(
            NOT_CM, field, (Witness("delta(4)", "homology", 0, 2),), "fast-path-theorem"
        )
    if n >= 11:
        return CmVerdict(NOT_CM, field, (_h_screen_witness(11),), "fast-path-theorem")
    return reisner_triangular(n, field)


def krull_dimension(g: graphs.Graph) -> KrullDimension:
    """Krull dimension of the edge subring = independence number."""
    return KrullDimension(graphs.independence_number(g))
