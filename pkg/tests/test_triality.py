from itertools import product

import numpy as np
import pytest

from moufang import loops, paige, triality
from moufang.fields import field_make
from moufang.loops import cyclic_loop, find_isomorphism
from moufang.permgrp import Perm, PermGroup
from moufang.triality import (HORIZONTAL, TRANSVERSAL, VERTICAL, LoopNet3,
                              NetAxiomError, NotACollineationError,
                              TrialityWitness, all_bol_reflections,
                              bol_reflection, collineation_from_point_map,
                              coordinate_loop, diagonal_point_map,
                              example_phi, example_vector, example_wreath,
                              net_from_triality, triality_check,
                              triality_group_from_loop)


# ---------------------------------------------------------------------------
# nets from loops


def test_net_z2_counts():
    net = LoopNet3(cyclic_loop(2))
    assert net.n_points == 4
    assert net.n_lines() == 6


def test_net_z3_counts_and_axioms():
    net = LoopNet3(cyclic_loop(3))
    assert net.n_points == 9 and net.n_lines() == 9
    # explicit axiom checks on top of the construction-time ones
    pts = list(range(9))
    for cls in (1, 2, 3):
        lines = [set(map(int, net.points_of_line(cls, c))) for c in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                assert not (lines[i] & lines[j])
        assert set().union(*lines) == set(pts)
    for c1 in range(3):
        for c2 in range(3):
            p = net.intersect(1, c1, 2, c2)
            assert net.line_through(p, 1) == c1
            assert net.line_through(p, 2) == c2


def test_net_cap():
    with pytest.raises(ValueError):
        LoopNet3(cyclic_loop(200))
    LoopNet3(cyclic_loop(200), cap=200)


def test_coordinate_loop_round_trip_is_identity_on_labels():
    Z3 = cyclic_loop(3)
    net = LoopNet3(Z3)
    cl = coordinate_loop(net)
    # carrier points are (x, e); the table must replay the original
    assert (cl.table == Z3.table).all()
    assert cl.labels == ["(%s,0)" % x for x in Z3.labels]


def test_coordinate_loop_s3_any_origin(s3_loop):
    net = LoopNet3(s3_loop)
    for origin in (0, 7, 17, 35):
        cl = coordinate_loop(net, origin=origin)
        assert find_isomorphism(cl, s3_loop) is not None


def test_coordinate_loop_m2_nonorigin(m2):
    net = LoopNet3(m2)
    cl = coordinate_loop(net, origin=127)
    w = find_isomorphism(cl, m2)
    assert w is not None and w.verify()


# ---------------------------------------------------------------------------
# Bol reflections


def test_bol_reflection_z3_transversal_formula():
    Z3 = cyclic_loop(3)
    coll = bol_reflection(Z3, TRANSVERSAL, 0)
    n = 3
    for x in range(3):
        for y in range(3):
            image = coll.point_map(x * n + y)
            assert image == ((-y) % 3) * n + ((-x) % 3)
    p2 = coll.point_map * coll.point_map
    assert p2.is_identity()


def test_bol_reflections_m2_origin_fix_axis(m2):
    net = LoopNet3(m2)
    e = m2.neutral
    for cls in (1, 2, 3):
        coll = bol_reflection(m2, cls, e, net=net)
        axis = net.points_of_line(cls, e)
        assert (coll.point_map.a[axis] == axis).all()
        others = [c for c in (1, 2, 3) if c != cls]
        assert coll.class_action[others[0]] == others[1]
        assert coll.class_action[others[1]] == others[0]


def test_origin_reflections_generate_s3_on_classes(s3_loop):
    net = LoopNet3(s3_loop)
    e = s3_loop.neutral
    s1 = bol_reflection(s3_loop, 1, e, net=net)
    s2 = bol_reflection(s3_loop, 2, e, net=net)
    s3r = bol_reflection(s3_loop, 3, e, net=net)
    assert s1.point_map * s2.point_map * s1.point_map == s3r.point_map
    # class actions of words of length <= 3 realize the full S3
    actions = {(1, 2, 3)}
    for length in (1, 2, 3):
        for bits in product((s1, s2, s3r), repeat=length):
            m = {c: c for c in (1, 2, 3)}
            for b in bits:
                m = {c: b.class_action[m[c]] for c in m}
            actions.add(tuple(m[c] for c in (1, 2, 3)))
    assert len(actions) == 6


def test_bol_reflection_non_moufang_raises(non_moufang_loop):
    with pytest.raises(NotACollineationError):
        bol_reflection(non_moufang_loop, 3, 1)


def test_reflection_conjugation_moves_axis(s3_loop, rng):
    # gamma^-1 sigma_l gamma = sigma_{l gamma}
    net = LoopNet3(s3_loop)
    refl = all_bol_reflections(s3_loop, net=net)
    keys = list(refl)
    for _ in range(60):
        k1 = keys[int(rng.integers(len(keys)))]
        k2 = keys[int(rng.integers(len(keys)))]
        sigma, gamma = refl[k1], refl[k2]
        conj = gamma.point_map.inverse() * sigma.point_map * gamma.point_map
        target_cls = gamma.class_action[k1[0]]
        target_idx = int(gamma.line_maps[k1[0]][k1[1]])
        assert conj == refl[(target_cls, target_idx)].point_map


def test_concurrent_reflections_cube_to_identity(s3_loop, rng):
    net = LoopNet3(s3_loop)
    refl = all_bol_reflections(s3_loop, net=net)
    for _ in range(40):
        p = int(rng.integers(net.n_points))
        lines = [(c, net.line_through(p, c)) for c in (1, 2, 3)]
        for (c1, m1) in lines:
            for (c2, m2) in lines:
                prod = refl[(c1, m1)].point_map * refl[(c2, m2)].point_map
                assert (prod * prod * prod).is_identity()


@pytest.mark.parametrize("loop_name", ["z3", "s3", "m2"])
def test_products_with_origin_reflection_are_translation_pairs(
        loop_name, s3_loop, m2, rng):
    # sigma_m sigma_e within one class acts as a pair of translation
    # maps, one per coordinate
    L = {"z3": cyclic_loop(3), "s3": s3_loop, "m2": m2}[loop_name]
    net = LoopNet3(L)
    T = L.table
    inv = L.two_sided_inverses()
    n = L.n
    e = L.neutral
    X, Y = np.divmod(np.arange(n * n, dtype=np.int64), n)
    for m in rng.choice(n, size=min(n, 8), replace=False):
        m = int(m)
        for cls, xmap, ymap in (
            (VERTICAL,
             lambda x: T[int(inv[m]), T[x, int(inv[m])]],   # L_m^-1 R_m^-1
             lambda y: T[m, y]),                            # L_m
            (HORIZONTAL,
             lambda x: T[x, m],                             # R_m
             lambda y: T[int(inv[m]), T[y, int(inv[m])]]),  # L_m^-1 R_m^-1
            (TRANSVERSAL,
             lambda x: T[m, x],                             # L_m
             lambda y: T[y, m]),                            # R_m
        ):
            sm = bol_reflection(L, cls, m, net=net).point_map
            se = bol_reflection(L, cls, e, net=net).point_map
            prod = (sm * se).a
            want_x = np.array([xmap(int(x)) for x in range(n)])
            want_y = np.array([ymap(int(y)) for y in range(n)])
            want = want_x[X] * n + want_y[Y]
            if cls == TRANSVERSAL:
                # for class 3 the translation pair belongs to sigma_{m^-1} sigma_e
                sm_inv = bol_reflection(L, cls, int(inv[m]), net=net).point_map
                prod = (sm_inv * se).a
            assert (prod == want).all()


def test_autotopism_triples_from_reflection_products(m2, rng):
    T = m2.table
    inv = m2.two_sided_inverses()
    for m in rng.choice(m2.n, size=6, replace=False):
        m = int(m)
        lm = loops.left_translation(m2, m)
        rm = loops.right_translation(m2, m)
        lmi = loops.left_translation(m2, int(inv[m]))
        rmi = loops.right_translation(m2, int(inv[m]))
        lr_inv = lmi * rmi  # L_m^-1 R_m^-1 as a single map
        assert loops.autotopism_check(m2, lr_inv, lm, lmi)
        assert loops.autotopism_check(m2, rm, lr_inv, rmi)
        assert loops.autotopism_check(m2, lm, rm, lm * rm)


# ---------------------------------------------------------------------------
# automorphisms as collineations (both directions)


def test_automorphisms_are_direction_preserving_collineations(s3_loop):
    net = LoopNet3(s3_loop)
    for alpha in loops.automorphisms(s3_loop):
        img = diagonal_point_map(net, alpha)
        coll = collineation_from_point_map(net, img)
        assert coll.is_direction_preserving()


def test_non_automorphism_diagonal_fails(s3_loop):
    net = LoopNet3(s3_loop)
    bad = np.array([1, 0, 2, 3, 4, 5])  # swaps e with a non-central element
    with pytest.raises(NotACollineationError):
        collineation_from_point_map(net, diagonal_point_map(net, bad))


def test_direction_preserving_origin_fixers_are_automorphisms(s3_loop):
    # enumerate M0 of the S3 net; every element fixing the origin and the
    # directions must be the diagonal map of an automorphism
    w = triality_group_from_loop(s3_loop)
    net = w.origin_net
    origin = net.origin()
    n = s3_loop.n
    auts = {a.tobytes(): a for a in
            (np.asarray(m, dtype=np.int64) for m in loops.automorphisms(s3_loop))}
    found = 0
    for g in w.group.elements(limit=20000):
        if g(origin) != origin:
            continue
        # direction preserving holds inside M0 by construction
        alpha = g.a[np.arange(n, dtype=np.int64) * n + s3_loop.neutral] // n
        beta = g.a[s3_loop.neutral * n + np.arange(n, dtype=np.int64)] % n
        assert (alpha == beta).all()
        assert (g.a == diagonal_point_map(net, alpha)).all()
        assert np.asarray(alpha, dtype=np.int64).tobytes() in auts
        found += 1
    assert found >= 1


# ---------------------------------------------------------------------------
# triality of loop nets


def test_triality_group_z3_exhaustive():
    w = triality_group_from_loop(cyclic_loop(3))
    ok, details = triality_check(w.group, w.sigma, w.rho, mode="exhaustive")
    assert ok and details["routes_agree"]


def test_triality_group_s3_exhaustive(s3_loop):
    w = triality_group_from_loop(s3_loop)
    ok, details = triality_check(w.group, w.sigma, w.rho, mode="exhaustive")
    assert ok and details["identity_checked"] == w.group.order()


def test_triality_m0_is_class_action_kernel(s3_loop):
    # cross-check the reduced generating set against the Schreier kernel
    from moufang.permgrp import homomorphism_kernel
    w = triality_group_from_loop(s3_loop)
    M = w.full_group
    net = w.origin_net
    images = []
    for g in M.gens:
        coll = collineation_from_point_map(net, g.a)
        images.append(Perm([coll.class_action[c] - 1 for c in (1, 2, 3)]))
    K = homomorphism_kernel(M, images, verify=True)
    assert K.order() == w.group.order()
    assert K.is_subgroup(w.group) and w.group.is_subgroup(K)


def test_triality_group_rejects_non_moufang(non_moufang_loop):
    with pytest.raises((NotACollineationError, AssertionError)):
        triality_group_from_loop(non_moufang_loop)


def test_triality_check_rejects_broken_relations():
    Z4 = PermGroup(4, [Perm([1, 2, 3, 0])])
    sigma = Perm([0, 3, 2, 1])  # inversion
    rho = Perm.identity(4)
    with pytest.raises(ValueError):
        triality_check(Z4, sigma, rho)


def _relations_but_no_triality():
    """Explicit pair on F2^4 with the S3 relations intact but the triality
    identity broken: rho fixes a 2-dimensional subspace E pointwise (where
    1 + rho + rho^2 = 3 = 1 in characteristic 2) and sigma moves E, so
    [v, sigma](1 + rho + rho^2) != 0 for v in E."""
    vecs = list(product((0, 1), repeat=4))
    index = {v: i for i, v in enumerate(vecs)}

    def lin_perm(images):
        # images of the 4 basis vectors; extend linearly
        out = []
        for v in vecs:
            w = (0, 0, 0, 0)
            for i, bit in enumerate(v):
                if bit:
                    w = tuple((a + b) % 2 for a, b in zip(w, images[i]))
            out.append(index[w])
        return Perm(out)

    e1, e2, e3, e4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    e34 = (0, 0, 1, 1)
    rho = lin_perm([e1, e2, e4, e34])        # identity on E, order 3 on W
    sigma = lin_perm([e2, e1, e3, e34])      # swaps E basis, involution on W
    gens = [Perm([index[tuple((v[i] + b[i]) % 2 for i in range(4))] for v in vecs])
            for b in (e1, e2, e3, e4)]
    G = PermGroup(16, gens)
    return G, sigma, rho


def test_triality_violation_detected_and_net_fails():
    G, sigma, rho = _relations_but_no_triality()
    id16 = Perm.identity(16)
    assert sigma * sigma == id16
    assert rho * rho * rho == id16 and rho != id16
    sr = sigma * rho
    assert sr * sr == id16
    ok, details = triality_check(G, sigma, rho, mode="exhaustive")
    assert not ok and details["routes_agree"]
    w = TrialityWitness(G, sigma, rho, (sigma, sigma * rho, rho * sigma))
    with pytest.raises(NetAxiomError):
        net_from_triality(w)


# ---------------------------------------------------------------------------
# nets from triality groups


def test_net_from_wreath_z3():
    A = PermGroup(3, [Perm([1, 2, 0])])
    w = example_wreath(A)
    net = net_from_triality(w)
    assert net.n_points == len(net.classes[0]) * len(net.classes[1])
    cl = coordinate_loop(net, origin=0)
    assert find_isomorphism(cl, cyclic_loop(3)) is not None


def test_net_round_trip_z3():
    w = triality_group_from_loop(cyclic_loop(3))
    net = net_from_triality(w)
    cl = coordinate_loop(net, origin=0)
    assert find_isomorphism(cl, cyclic_loop(3)) is not None


def test_net_round_trip_s3(s3_loop):
    w = triality_group_from_loop(s3_loop)
    net = net_from_triality(w)
    cl = coordinate_loop(net, origin=0)
    assert find_isomorphism(cl, s3_loop) is not None


# ---------------------------------------------------------------------------
# the worked examples


def test_example_wreath_groups(s3_group):
    for A in (PermGroup(2, [Perm([1, 0])]), s3_group,
              PermGroup(5, [Perm([1, 2, 3, 4, 0])])):
        w = example_wreath(A)
        ok, _ = triality_check(w.group, w.sigma, w.rho)
        assert ok


def test_example_wreath_z5_coordinate_loop():
    A = PermGroup(5, [Perm([1, 2, 3, 4, 0])])
    w = example_wreath(A)
    net = net_from_triality(w)
    cl = coordinate_loop(net, origin=0)
    assert find_isomorphism(cl, cyclic_loop(5)) is not None


def test_example_phi_z3_inversion_fails():
    A3 = PermGroup(3, [Perm([1, 2, 0])])
    with pytest.raises(ValueError):
        example_phi(A3, Perm([0, 2, 1]))


def test_example_phi_z3z3():
    q = 3
    img = np.empty(9, dtype=np.int64)
    for a in range(3):
        for b in range(3):
            img[a * q + b] = (b % 3) * q + ((-a - b) % 3)
    gens = []
    for (da, db) in ((1, 0), (0, 1)):
        t = np.empty(9, dtype=np.int64)
        for a in range(3):
            for b in range(3):
                t[a * q + b] = ((a + da) % 3) * q + ((b + db) % 3)
        gens.append(Perm(t))
    w = example_phi(PermGroup(9, gens), Perm(img))
    ok, _ = triality_check(w.group, w.sigma, w.rho)
    assert ok


def test_example_phi_trivial_group_degenerate():
    A = PermGroup(1, [])
    w = example_phi(A, Perm.identity(1))
    ok, _ = triality_check(w.group, w.sigma, w.rho)
    assert ok


def test_example_vector():
    for q in (5, 2):
        w = example_vector(field_make(q))
        ok, details = triality_check(w.group, w.sigma, w.rho, mode="exhaustive")
        assert ok and details["identity_checked"] == q * q
    with pytest.raises(ValueError):
        example_vector(field_make(3))
    with pytest.raises(ValueError):
        example_vector(field_make(3, 2))
