"""Seeded property suites for the theorem-level invariants.

The certification gate is sufficient, not exact: pure incidence algebras
always certify, including ones containing convex crowns (hereditary
subcategories with cyclic underlying graphs), where the strong
simple-connectedness hypothesis demonstrably fails.  The suites therefore
assert each strong-hypothesis statement either holds or fails together with
an explicit crown witness.
"""

import random

from critalg.criteria import (
    _candidates_for_size,
    build_critical_candidate,
    check_critical,
    classify_critical,
    convex_crown_witness,
    critical_template,
    find_all_critical_subcategories,
    find_critical_subcategory_guided,
)
from critalg.homology import (
    ext_dim,
    gl_dim,
    pd_of_simple,
    resolution_of_simple,
)
from critalg.presentation import convex_hull, full_subcategory
from critalg.randgen import RandomModel, random_algebra


def _instances(count, sizes=(4, 5, 6, 7)):
    seed = 0
    out = []
    while len(out) < count:
        A = random_algebra(RandomModel(seed=seed, n=sizes[seed % len(sizes)]))
        seed += 1
        if A.validity.certified:
            out.append(A)
    return out


CORPUS = _instances(300)


def _third_syzygy_pairs(A):
    for i in A.names:
        if pd_of_simple(A, i) != 3:
            continue
        for j in resolution_of_simple(A, i).support(3):
            yield i, j


def test_third_ext_forces_vanishing_hom_unless_crowned():
    # the composition-factor vanishing lemma holds under the strong
    # hypothesis; every observed violation must carry a crown witness
    for A in CORPUS:
        for i, j in _third_syzygy_pairs(A):
            if A.hom(i, j) != 0:
                assert convex_crown_witness(A) is not None, (A.label, i, j)


def test_hull_keeps_pd_three():
    for A in CORPUS:
        for i, j in _third_syzygy_pairs(A):
            C = convex_hull(A, i, j)
            assert pd_of_simple(C, i) == 3, (A.label, i, j)


def test_candidates_are_critical_unless_crowned():
    for A in CORPUS:
        for i, j in _third_syzygy_pairs(A):
            B = build_critical_candidate(A, i, j)
            if not check_critical(B).is_critical:
                assert convex_crown_witness(A) is not None, (A.label, i, j)


def test_guided_subsets_are_exhaustive_subsets():
    for A in CORPUS:
        exhaustive = {r.subset for r in find_all_critical_subcategories(A)}
        for r in find_critical_subcategory_guided(A):
            assert r.subset in exhaustive


def test_catalogue_never_gaps():
    for kind, param in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5),
                        ("B", 1), ("B", 3), ("B", 4), ("Q", 2), ("Q", 3), ("Q", 4)]:
        for opp in (False, True):
            tpl = critical_template(kind, param, opposite=opp)
            got = classify_critical(tpl)
            assert (got.kind, got.param) == (kind, param)


def test_corpus_gaps_are_genuine_relation_variants():
    """Critical subcategories outside the catalogue do arise (the catalogue
    fixes one monomial/commutativity assignment per shape); each gap must be
    a genuinely critical algebra that no size-matched template matches, which
    we confirm by brute-force permutation search, independent of the
    canonical-form machinery."""
    from itertools import permutations

    gaps = []
    for A in CORPUS:
        for r in find_all_critical_subcategories(A):
            if r.template is None:
                gaps.append((A, r.subset))
    checked = 0
    for A, subset in gaps[:6]:
        B = full_subcategory(A, subset)
        assert check_critical(B).is_critical
        for cand in _candidates_for_size(B.n):
            for opp in (False, True):
                T = critical_template(cand.kind, cand.param, opposite=opp)
                assert not _brute_iso(B, T, permutations), (subset, cand)
        checked += 1
    # the corpus is seeded, so the presence of gap examples is reproducible
    assert checked >= 1


def _brute_iso(A, B, permutations):
    if A.n != B.n:
        return False
    for perm in permutations(range(A.n)):
        if all(
            (A.hom_rows[x] >> y & 1) == (B.hom_rows[perm[x]] >> perm[y] & 1)
            for x in range(A.n)
            for y in range(A.n)
        ):
            return True
    return False


def test_irreducibility_matches_chain_definition():
    # the component decision rule against a direct chain search
    from critalg.quivers import contours, is_interlaced, is_irreducible

    rng = random.Random(5)
    for _ in range(40):
        n = rng.randrange(3, 7)
        arrows = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    arrows.append((str(i), str(j)))
        from critalg.quivers import Quiver

        Q = Quiver([str(k) for k in range(n)], arrows)
        for c in contours(Q):
            paths = [
                p
                for p in _all_paths_brute(arrows, c.source, c.target)
                if len(p) > 2
            ]
            chained = _chain_reachable(paths, c.p.vertices, c.q.vertices)
            assert is_irreducible(Q, c) == (not chained)
            if is_irreducible(Q, c):
                assert not is_interlaced(c)


def _all_paths_brute(arrows, src, dst):
    if src == dst:
        return [(src,)]
    out = []
    for s, t in arrows:
        if s == src:
            out.extend((src,) + rest for rest in _all_paths_brute(arrows, t, dst))
    return out


def _chain_reachable(paths, p, q):
    frontier = {p}
    seen = {p}
    while frontier:
        nxt = set()
        for cur in frontier:
            for other in paths:
                other = tuple(other)
                if other in seen:
                    continue
                if set(cur[1:-1]) & set(other[1:-1]):
                    nxt.add(other)
        seen |= nxt
        frontier = nxt
    return q in seen


def test_full_subcategory_ext_restriction_random_hulls():
    for A in CORPUS[:60]:
        for i in A.names:
            for j in A.names:
                if not A.reach_rows[A.index[i]] >> A.index[j] & 1:
                    continue
                C = convex_hull(A, i, j)
                for x in C.names:
                    for y in C.names:
                        for k in range(4):
                            assert ext_dim(C, x, y, k) == ext_dim(A, x, y, k)


def test_max_pd_modules_have_max_pd_factors_random():
    from critalg.homology import pd, projective, radical

    for A in CORPUS[:80]:
        g = gl_dim(A)
        for x in A.names:
            M = radical(projective(A, x))
            if M.is_zero():
                continue
            if pd(A, M) == g:
                assert any(M.dim_at(y) and pd_of_simple(A, y) == g for y in A.names)


def test_some_max_pd_vertex_avoids_the_rest_random():
    for A in CORPUS[:80]:
        g = gl_dim(A)
        heavy = [x for x in A.names if pd_of_simple(A, x) == g]
        ok = False
        for j in heavy:
            res = resolution_of_simple(A, j)
            factors = set()
            for k in range(len(res.terms)):
                for v in res.term_names(k):
                    factors.update(y for y in A.names if A.hom(v, y))
            if not factors & (set(heavy) - {j}):
                ok = True
                break
        assert ok, A.label


def test_hom_support_matches_engine_projectives_random():
    from critalg.homology import projective

    for A in CORPUS[:100]:
        for x in A.names:
            P = projective(A, x)
            for y in A.names:
                assert P.dim_at(y) == A.hom(x, y)


def test_degenerate_algebras_are_total():
    from critalg.presentation import from_poset
    from critalg.quivers import Quiver
    from critalg.report import build_report, render_report

    empty = from_poset(Quiver([], []), [], label="empty")
    single = from_poset(Quiver(["x"], []), [], label="point")
    for A in (empty, single):
        assert gl_dim(A) == 0
        assert find_all_critical_subcategories(A) == []
        render_report(build_report(A), "text")
        render_report(build_report(A), "json")


def test_extended_catalogue_parameters():
    # beyond the acceptance list: larger arms still classify and stay critical
    for kind, param in [("A", 6), ("B", 5), ("Q", 5)]:
        T = critical_template(kind, param)
        assert gl_dim(T) == 3
        got = classify_critical(T)
        assert (got.kind, got.param) == (kind, param)


def test_audited_search_matches_screened_search():
    # the combinatorial pd screen must not change the search results
    for A in CORPUS[:60]:
        fast = [r.subset for r in find_all_critical_subcategories(A)]
        audited = [r.subset for r in find_all_critical_subcategories(A, audit=True)]
        assert fast == audited, A.label


def _idempotent_ideal_quotient(A, victims):
    # a hom class dies iff it factors through a killed vertex; note this is
    # NOT kill_vertices' path-avoidance rule (on the commutative square the
    # 1~>4 class factors through the killed middle although a parallel path
    # avoids it)
    from critalg.presentation import SchurianAlgebra

    kill = {A.index[v] for v in victims}
    keep = [i for i in range(A.n) if i not in kill]
    pos = {v: p for p, v in enumerate(keep)}
    rows = []
    for i in keep:
        r = 1 << pos[i]
        for j in keep:
            if i == j or not A.hom_rows[i] >> j & 1:
                continue
            if not any(
                A.hom_rows[i] >> z & 1 and A.hom_rows[z] >> j & 1 for z in kill
            ):
                r |= 1 << pos[j]
        rows.append(r)
    return SchurianAlgebra([A.names[i] for i in keep], rows, label=f"{A.label}/ideal")


def test_killing_max_pd_vertices_reduces_gldim():
    # dropping the maximal-pd vertices through the idempotent-ideal quotient
    # lowers the global dimension by exactly one (the stepping stone for the
    # spectrum result); crown-witnessed instances are exempt
    for A in CORPUS[:120]:
        g = gl_dim(A)
        if g == 0:
            continue
        heavy = [x for x in A.names if pd_of_simple(A, x) == g]
        if len(heavy) == A.n:
            continue
        B = _idempotent_ideal_quotient(A, heavy)
        if gl_dim(B) != g - 1:
            assert convex_crown_witness(A) is not None, (A.label, g, gl_dim(B))
