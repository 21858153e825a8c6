"""Exact-arithmetic homology engine for schurian algebras.

Modules are representations: a dimension per vertex and a rational matrix per
arrow.  Minimal projective resolutions are computed by iterating projective
cover and kernel; differentials are stored as one scalar per summand pair
(hom spaces between indecomposable projectives are at most one-dimensional),
and vertexwise matrices are materialized only inside kernel computations and
exactness audits.

The ground field is the rationals: all structure constants here are 0 or 1,
so the computed dimensions are characteristic-free, and exact elimination
avoids floating point entirely.

This module is both the production engine and the brute-force oracle that the
combinatorial criteria are validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalError, NotAMorphism
from .linalg import (
    Matrix,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    row_times_mat,
    rref,
    solve_in_rowspace,
    zeros,
)
from .presentation import SchurianAlgebra, opposite_algebra
from .quivers import _bits


class Representation:
    """A finite-dimensional module, vertexwise."""

    __slots__ = ("algebra", "dims", "maps")

    def __init__(self, algebra: SchurianAlgebra, dims, maps=None):
        self.algebra = algebra
        self.dims = list(dims)
        self.maps = dict(maps or {})

    def map(self, u: int, v: int) -> Matrix:
        m = self.maps.get((u, v))
        if m is None:
            return zeros(self.dims[v], self.dims[u])
        return m

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims)

    def dim_at(self, name: str) -> int:
        return self.dims[self.algebra.index[str(name)]]

    def total_dim(self) -> int:
        return sum(self.dims)

    def dims_by_name(self) -> dict[str, int]:
        return {self.algebra.names[i]: d for i, d in enumerate(self.dims) if d}


@dataclass
class RepMorphism:
    """Vertexwise matrices source -> target."""

    source: Representation
    target: Representation
    blocks: dict[int, Matrix]

    def block(self, v: int) -> Matrix:
        b = self.blocks.get(v)
        if b is None:
            return zeros(self.target.dims[v], self.source.dims[v])
        return b

    def check_commutes(self):
        A = self.source.algebra
        for (u, v) in A.quiver.arrows:
            left = mat_mul(self.block(v), self.source.map(u, v))
            right = mat_mul(self.target.map(u, v), self.block(u))
            if left != right:
                raise NotAMorphism(
                    f"blocks do not commute with the arrow {A.names[u]}->{A.names[v]}"
                )


def simple(algebra: SchurianAlgebra, x: str) -> Representation:
    i = algebra.index[str(x)]
    dims = [0] * algebra.n
    dims[i] = 1
    return Representation(algebra, dims)


def projective(algebra: SchurianAlgebra, x: str) -> Representation:
    i = algebra.index[str(x)]
    dims = [algebra.hom_bit(i, z) for z in range(algebra.n)]
    maps = {}
    for (u, v) in algebra.quiver.arrows:
        if dims[u] and dims[v]:
            maps[(u, v)] = [[Fraction(1)]]
    return Representation(algebra, dims, maps)


def injective(algebra: SchurianAlgebra, x: str) -> Representation:
    i = algebra.index[str(x)]
    dims = [algebra.hom_bit(z, i) for z in range(algebra.n)]
    maps = {}
    for (u, v) in algebra.quiver.arrows:
        if dims[u] and dims[v]:
            maps[(u, v)] = [[Fraction(1)]]
    return Representation(algebra, dims, maps)


# -- radical / top / socle ----------------------------------------------------


def _radical_bases(M: Representation) -> list[Matrix]:
    """Per vertex, an RREF row basis of the radical (sum of arrow images)."""
    A = M.algebra
    out = []
    for v in range(A.n):
        rows = []
        for u in _bits(A.quiver.in_mask[v]):
            m = M.maps.get((u, v))
            if m:
                for c in range(M.dims[u]):
                    rows.append([m[r][c] for r in range(M.dims[v])])
        basis, _ = rref(rows) if rows else ([], [])
        out.append(basis)
    return out


def radical(M: Representation) -> Representation:
    """rad M with the induced arrow maps."""
    A = M.algebra
    bases = _radical_bases(M)
    pivots = [[next(i for i, x in enumerate(r) if x) for r in b] for b in bases]
    dims = [len(b) for b in bases]
    maps = {}
    for (u, v) in A.quiver.arrows:
        if dims[u] == 0 or M.dims[v] == 0:
            continue
        m = M.map(u, v)
        cols = []
        for row_vec in bases[u]:
            img = mat_vec(m, row_vec)
            cols.append(solve_in_rowspace(bases[v], pivots[v], img))
        if dims[v]:
            maps[(u, v)] = [[cols[c][r] for c in range(dims[u])] for r in range(dims[v])]
    return Representation(A, dims, maps)


def top(M: Representation) -> dict[str, int]:
    """Multiplicities of the simples in M / rad M."""
    A = M.algebra
    bases = _radical_bases(M)
    return {
        A.names[v]: M.dims[v] - len(bases[v])
        for v in range(A.n)
        if M.dims[v] - len(bases[v]) > 0
    }


def socle(M: Representation) -> dict[str, int]:
    """Multiplicities of the simples in the largest semisimple submodule."""
    A = M.algebra
    out = {}
    for v in range(A.n):
        if M.dims[v] == 0:
            continue
        rows = []
        for w in _bits(A.quiver.out_mask[v]):
            m = M.maps.get((v, w))
            if m:
                rows.extend(m)
        if rows:
            d = M.dims[v] - rank(rows)
        else:
            d = M.dims[v]
        if d:
            out[A.names[v]] = d
    return out


def composition_multiplicity(M: Representation, x: str) -> int:
    return M.dim_at(x)


def loewy_length(M: Representation) -> int:
    if M.is_zero():
        raise ValueError("the zero module has no Loewy length")
    cur, k = M, 0
    while not cur.is_zero():
        cur = radical(cur)
        k += 1
    return k


# -- covers, kernels, resolutions --------------------------------------------


def _complement_vectors(dim: int, rad_basis: Matrix) -> list[list[Fraction]]:
    """Standard basis vectors completing the radical to the whole space."""
    if not rad_basis:
        return [[Fraction(1 if j == c else 0) for j in range(dim)] for c in range(dim)]
    pivots = {next(i for i, x in enumerate(r) if x) for r in rad_basis}
    free = [c for c in range(dim) if c not in pivots]
    return [[Fraction(1 if j == c else 0) for j in range(dim)] for c in free]


def _transport(M: Representation, v0: int, w) -> dict[int, list[Fraction]]:
    """Images of a generator at v0 under the path action, per supported vertex.

    Requires M to satisfy the algebra's relations (true for every module this
    engine builds): any in-arrow from a hom-supported vertex gives the same
    value, so the first one is taken.
    """
    A = M.algebra
    out = {v0: [Fraction(x) for x in w]}
    for z in A._cache.setdefault("topo", A.quiver.topological_order()):
        if z == v0 or not A.hom_bit(v0, z):
            continue
        for u in _bits(A.quiver.in_mask[z]):
            if u in out and A.hom_bit(v0, u):
                out[z] = mat_vec(M.map(u, z), out[u])
                break
    return out


def _projective_sum(algebra: SchurianAlgebra, summands: list[int]):
    """dims and slot layout of a direct sum of indecomposable projectives."""
    slots = [[] for _ in range(algebra.n)]
    for c, a in enumerate(summands):
        for z in _bits(algebra.hom_rows[a]):
            slots[z].append(c)
    dims = [len(s) for s in slots]
    return dims, slots


def _sum_rep(algebra: SchurianAlgebra, summands: list[int]) -> Representation:
    dims, slots = _projective_sum(algebra, summands)
    maps = {}
    for (u, v) in algebra.quiver.arrows:
        if dims[u] == 0 or dims[v] == 0:
            continue
        pos_v = {c: r for r, c in enumerate(slots[v])}
        m = zeros(dims[v], dims[u])
        for cidx, c in enumerate(slots[u]):
            r = pos_v.get(c)
            if r is not None:
                m[r][cidx] = Fraction(1)
        maps[(u, v)] = m
    return Representation(algebra, dims, maps)


def projective_cover(M: Representation):
    """(summand vertex names, covering epimorphism).  The zero module gets
    an empty cover."""
    A = M.algebra
    if M.is_zero():
        return (), RepMorphism(Representation(A, [0] * A.n), M, {})
    bases = _radical_bases(M)
    summands: list[int] = []
    gens: list[tuple[int, list[Fraction]]] = []
    for v in range(A.n):
        for w in _complement_vectors(M.dims[v], bases[v]):
            summands.append(v)
            gens.append((v, w))
    P = _sum_rep(A, summands)
    _, slots = _projective_sum(A, summands)
    transported = [_transport(M, v, w) for v, w in gens]
    blocks = {}
    for z in range(A.n):
        if P.dims[z] == 0:
            continue
        cols = []
        for c in slots[z]:
            vec = transported[c].get(z)
            if vec is None:
                raise InternalError(
                    "generator transport failed; the presentation violates "
                    "interval monotonicity"
                )
            cols.append(vec)
        blocks[z] = [[cols[c][r] for c in range(P.dims[z])] for r in range(M.dims[z])]
    names = tuple(A.names[v] for v in summands)
    return names, RepMorphism(P, M, blocks)


def kernel(f: RepMorphism) -> Representation:
    """Vertexwise nullspaces with the restricted arrow maps."""
    f.check_commutes()
    K, _ = _kernel_with_basis(f)
    return K


def _kernel_with_basis(f: RepMorphism):
    A = f.source.algebra
    bases = []
    for v in range(A.n):
        if f.source.dims[v] == 0:
            bases.append([])
            continue
        bases.append(nullspace(f.block(v), f.source.dims[v]))
    pivots = [[next(i for i, x in enumerate(r) if x) for r in b] for b in bases]
    dims = [len(b) for b in bases]
    maps = {}
    for (u, v) in A.quiver.arrows:
        if dims[u] == 0 or f.source.dims[v] == 0:
            continue
        m = f.source.map(u, v)
        cols = [solve_in_rowspace(bases[v], pivots[v], mat_vec(m, b)) for b in bases[u]]
        if dims[v]:
            maps[(u, v)] = [[cols[c][r] for c in range(dims[u])] for r in range(dims[v])]
    return Representation(A, dims, maps), bases


@dataclass
class ProjResolution:
    """0 -> Q_p -> ... -> Q_1 -> Q_0 -> M -> 0, minimal.

    ``terms[k]`` lists the vertex indices of the indecomposable summands of
    Q_k (ascending, with multiplicity).  ``diffs[k]`` is the scalar matrix of
    Q_{k+1} -> Q_k (rows: summands of Q_k; columns: summands of Q_{k+1}).
    ``syzygy_dims[k]`` records the vertexwise dimensions of ker(Q_k -> ...).
    """

    algebra: SchurianAlgebra
    resolved: str
    terms: tuple[tuple[int, ...], ...]
    diffs: tuple[Matrix, ...]
    syzygy_dims: tuple[tuple[int, ...], ...]
    complete: bool = True

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def term_names(self, k: int) -> tuple[str, ...]:
        if k >= len(self.terms):
            return ()
        return tuple(self.algebra.names[v] for v in self.terms[k])

    def multiplicity(self, k: int, x: str) -> int:
        if k >= len(self.terms):
            return 0
        i = self.algebra.index[str(x)]
        return sum(1 for v in self.terms[k] if v == i)

    def support(self, k: int) -> set[str]:
        return set(self.term_names(k))


def minimal_projective_resolution(
    algebra: SchurianAlgebra, M: Representation, max_len: int | None = None
) -> ProjResolution:
    if M.is_zero():
        raise ValueError("cannot resolve the zero module")
    cap = algebra.n if max_len is None else max_len
    label = _module_label(M)
    simple_vertex = _simple_vertex(M)
    terms = []
    diffs = []
    syz = []
    current = M
    basis_in_prev: list[Matrix] | None = None
    while True:
        names, F = projective_cover(current)
        summands = [algebra.index[x] for x in names]
        if basis_in_prev is not None:
            diffs.append(_scalar_diff(algebra, terms[-1], summands, F, basis_in_prev))
        terms.append(tuple(summands))
        K, bases = _kernel_with_basis(F)
        syz.append(tuple(K.dims))
        if K.is_zero():
            break
        if len(terms) > cap:
            if max_len is not None:
                res = ProjResolution(
                    algebra, label, tuple(terms), tuple(diffs), tuple(syz), complete=False
                )
                return res
            raise InternalError(
                f"resolution of {label} over {algebra.label or 'algebra'} "
                f"exceeded the length cap {cap}"
            )
        current = K
        basis_in_prev = bases
    res = ProjResolution(algebra, label, tuple(terms), tuple(diffs), tuple(syz))
    if simple_vertex is not None:
        _assert_simple_resolution_shape(algebra, simple_vertex, res)
    return res


def _module_label(M: Representation) -> str:
    v = _simple_vertex(M)
    if v is not None:
        return f"S{M.algebra.names[v]}"
    return "M" + "".join(f"({M.algebra.names[i]}:{d})" for i, d in enumerate(M.dims) if d)


def _simple_vertex(M: Representation) -> int | None:
    nz = [i for i, d in enumerate(M.dims) if d]
    if len(nz) == 1 and M.dims[nz[0]] == 1:
        return nz[0]
    return None


def _scalar_diff(algebra, prev_term, new_summands, F, basis_in_prev) -> Matrix:
    """One scalar per (previous summand, new summand): the coordinate of the
    new generator, written in the enclosing sum of projectives, at the slot of
    the previous summand."""
    _, prev_slots = _projective_sum(algebra, list(prev_term))
    mat = zeros(len(prev_term), len(new_summands))
    # column c of F at the summand's vertex, restricted to the generator slot,
    # is the new generator in syzygy coordinates; push it down to coordinates
    # of the previous sum of projectives via basis_in_prev.
    gen_positions = _generator_positions(algebra, new_summands)
    for c, b in enumerate(new_summands):
        block = F.blocks[b]
        w = [block[r][gen_positions[c]] for r in range(len(block))]
        wq = row_times_mat(w, basis_in_prev[b])
        for pos, prev_c in enumerate(prev_slots[b]):
            if wq[pos]:
                mat[prev_c][c] = wq[pos]
    return mat


def _generator_positions(algebra, summands) -> list[int]:
    """Slot index of each summand's generator at its own vertex."""
    _, slots = _projective_sum(algebra, list(summands))
    out = []
    for c, v in enumerate(summands):
        out.append(slots[v].index(c))
    return out


def _assert_simple_resolution_shape(algebra, i: int, res: ProjResolution):
    """Structural facts that hold over any triangular schurian algebra and
    double as engine self-checks: the simple never recurs in the radical of
    the first term nor in later terms; the first syzygy's top is the set of
    arrow targets; every summand vertex is reachable from the resolved one."""
    name = algebra.names[i]
    for k, term in enumerate(res.terms):
        for v in term:
            if k >= 1 and algebra.hom_bit(v, i):
                raise InternalError(
                    f"S{name} occurs as a composition factor of term {k} of its own resolution"
                )
            if not algebra.reach_rows[i] >> v & 1:
                raise InternalError(
                    f"summand P{algebra.names[v]} of term {k} is not reachable from {name}"
                )
    if len(res.terms) > 1:
        targets = sorted(_bits(algebra.quiver.out_mask[i]))
        if list(res.terms[1]) != targets:
            raise InternalError(
                f"first term of the resolution of S{name} is not the arrow-target sum"
            )


# -- dimensions ---------------------------------------------------------------


def resolution_of_simple(algebra: SchurianAlgebra, x: str) -> ProjResolution:
    i = algebra.index[str(x)]
    key = ("res", i)
    cached = algebra._cache.get(key)
    if cached is None:
        cached = minimal_projective_resolution(algebra, simple(algebra, x))
        algebra._cache[key] = cached
    return cached


def pd(algebra: SchurianAlgebra, M: Representation) -> int:
    if M.is_zero():
        raise ValueError("pd of the zero module is undefined")
    sv = _simple_vertex(M)
    if sv is not None:
        return resolution_of_simple(algebra, algebra.names[sv]).length
    return minimal_projective_resolution(algebra, M).length


def pd_of_simple(algebra: SchurianAlgebra, x: str) -> int:
    return resolution_of_simple(algebra, x).length


def idim_of_simple(algebra: SchurianAlgebra, x: str) -> int:
    return pd_of_simple(opposite_algebra(algebra), x)


def idim(algebra: SchurianAlgebra, M: Representation) -> int:
    """Injective dimension, computed over the opposite algebra."""
    if M.is_zero():
        raise ValueError("id of the zero module is undefined")
    sv = _simple_vertex(M)
    if sv is not None:
        return idim_of_simple(algebra, algebra.names[sv])
    return minimal_injective_coresolution(algebra, M).length


def gl_dim(algebra: SchurianAlgebra) -> int:
    if algebra.n == 0:
        return 0
    return max(pd_of_simple(algebra, x) for x in algebra.names)


def ext_dim(algebra: SchurianAlgebra, x: str, y: str, k: int) -> int:
    if k < 0:
        raise ValueError("negative degree")
    return resolution_of_simple(algebra, x).multiplicity(k, y)


def dual_representation(M: Representation) -> Representation:
    """The standard dual over the opposite algebra (dims kept, maps transposed)."""
    op = opposite_algebra(M.algebra)
    maps = {}
    for (u, v), m in M.maps.items():
        if m and m[0]:
            maps[(v, u)] = [[m[r][c] for r in range(len(m))] for c in range(len(m[0]))]
    return Representation(op, M.dims, maps)


def minimal_injective_coresolution(
    algebra: SchurianAlgebra, M: Representation | str, max_len: int | None = None
) -> ProjResolution:
    """The minimal coresolution, computed as the projective resolution of the
    dual module over the opposite algebra; terms read as injective summands."""
    op = opposite_algebra(algebra)
    if isinstance(M, str):
        i = op.index[M]
        key = ("res", i)
        cached = op._cache.get(key)
        if cached is None or max_len is not None:
            cached = minimal_projective_resolution(op, simple(op, M), max_len=max_len)
            if max_len is None:
                op._cache[key] = cached
        return cached
    return minimal_projective_resolution(op, dual_representation(M), max_len=max_len)


# -- audits -------------------------------------------------------------------


def materialize_differential(res: ProjResolution, k: int) -> dict[int, Matrix]:
    """Vertexwise matrices of Q_{k+1} -> Q_k."""
    A = res.algebra
    _, slots_prev = _projective_sum(A, list(res.terms[k]))
    _, slots_next = _projective_sum(A, list(res.terms[k + 1]))
    scal = res.diffs[k]
    out = {}
    for v in range(A.n):
        if not slots_prev[v] or not slots_next[v]:
            continue
        m = zeros(len(slots_prev[v]), len(slots_next[v]))
        for rpos, c_prev in enumerate(slots_prev[v]):
            for cpos, c_next in enumerate(slots_next[v]):
                m[rpos][cpos] = Fraction(scal[c_prev][c_next])
        out[v] = m
    return out


def verify_exactness(res: ProjResolution, module_dims: list[int] | None = None) -> bool:
    """Vertexwise rank-nullity audit across consecutive differentials."""
    A = res.algebra
    if module_dims is None:
        sv = A.index[res.resolved[1:]] if res.resolved.startswith("S") else None
        module_dims = [0] * A.n
        if sv is not None:
            module_dims[sv] = 1
    dims = []
    for term in res.terms:
        d, _ = _projective_sum(A, list(term))
        dims.append(d)
    ranks = []
    for k in range(len(res.diffs)):
        mats = materialize_differential(res, k)
        ranks.append([rank(mats[v]) if v in mats else 0 for v in range(A.n)])
    for v in range(A.n):
        for k in range(len(res.terms)):
            rk_in = ranks[k][v] if k < len(ranks) else 0
            if k == 0:
                image_out = module_dims[v]
            else:
                image_out = ranks[k - 1][v]
            if dims[k][v] != rk_in + image_out:
                return False
    return True


def verify_minimality(res: ProjResolution) -> bool:
    """No differential entry between like-vertex summands (all entries lie in
    the radical)."""
    for k, scal in enumerate(res.diffs):
        prev, nxt = res.terms[k], res.terms[k + 1]
        for r, pv in enumerate(prev):
            for c, nv in enumerate(nxt):
                if pv == nv and scal[r][c] != 0:
                    return False
    return True
