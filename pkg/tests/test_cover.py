"""Transversals, the tagged addition, and covering affine quandles."""

import dataclasses

import numpy as np
import pytest

from quandles.core import is_isomorphic, validate_quandle
from quandles.cover import (
    build_cover,
    build_oplus,
    dis_as_group,
    is_homim_of_affine,
    optimized_multitransversal,
    simple_multitransversal,
    translation_blocks,
    verify_cover,
)
from quandles.errors import NotHomImage
from quandles.groups import make_cyclic_product
from quandles.perms import displacement_group, identity_perm

from conftest import aff


def proj(n: int):
    return validate_quandle([[b for b in range(n)] for _ in range(n)])


def test_is_homim_verdicts(sum_three_z2, sum_two_z3, sum_z2_z1):
    assert is_homim_of_affine(sum_three_z2)
    assert not is_homim_of_affine(sum_two_z3)
    assert is_homim_of_affine(sum_z2_z1)


def test_is_homim_true_for_affine(affine_corpus):
    for _, _, aq in affine_corpus:
        assert is_homim_of_affine(aq.quandle)


def test_translation_blocks_identity_first(sum_three_z2):
    d, blocks = translation_blocks(sum_three_z2)
    assert d[0] == identity_perm(6)
    assert len(d) == 2
    assert blocks == [[0, 1, 2, 3], [4, 5]]
    # Block alignment: block index of x matches index of L_x L_e^{-1} in d.
    q = sum_three_z2
    e_row_inv = np.argsort(q.array[0])
    for bi, block in enumerate(blocks):
        for x in block:
            assert tuple(q.array[x][e_row_inv]) == d[bi]


def test_simple_multitransversal_sizes(sum_three_z2, sum_z2_z1):
    t = simple_multitransversal(sum_three_z2)
    assert (t.elements, t.kappa, t.m) == ((0, 1, 2, 3, 4, 5, 4, 5), 4, 2)
    t3 = simple_multitransversal(sum_z2_z1)
    assert (t3.elements, t3.kappa, t3.m) == ((0, 1, 2, 2), 2, 2)


def test_optimized_multitransversal_smaller(sum_three_z2, sum_z2_z1):
    t = optimized_multitransversal(sum_three_z2)
    assert (t.elements, t.kappa) == ((0, 2, 4, 5), 2)
    t3 = optimized_multitransversal(sum_z2_z1)
    assert (t3.elements, t3.kappa) == ((0, 2), 1)


def test_multitransversal_meets_every_orbit(sum_three_z2):
    from quandles.perms import orbits

    t = optimized_multitransversal(sum_three_z2)
    hit = set(t.elements)
    for orbit in orbits(sum_three_z2).blocks:
        assert hit & set(orbit)


def test_oplus_of_projection_is_cyclic():
    q = proj(3)
    t = simple_multitransversal(q)
    add = build_oplus(q, t).add
    assert np.array_equal(add, make_cyclic_product((3,)).add)


def _order_multiset(g):
    out = []
    for x in range(g.order):
        y, k = x, 1
        while y != 0:
            y = g.add_el(y, x)
            k += 1
        out.append(k)
    return sorted(out)


def test_cover_group_structure(sum_three_z2):
    simple = build_cover(sum_three_z2, simple_multitransversal(sum_three_z2))
    opt = build_cover(sum_three_z2, optimized_multitransversal(sum_three_z2))
    assert simple.group.order == 16
    assert opt.group.order == 8
    # Optimized cover group is elementary abelian (Z2^3), simple is Z2^2 x Z4.
    assert _order_multiset(opt.group) == [1] + [2] * 7
    assert _order_multiset(simple.group) == [1] + [2] * 7 + [4] * 8


def test_cover_order_is_dis_times_transversal(sum_three_z2, sum_z2_z1):
    for q in (sum_three_z2, sum_z2_z1):
        t = optimized_multitransversal(q)
        r = build_cover(q, t)
        assert r.group.order == displacement_group(q).order * t.size


def test_psi_is_surjective_homomorphism(sum_z2_z1):
    q = sum_z2_z1
    r = build_cover(q, optimized_multitransversal(q))
    ct = r.cover.quandle
    psi = r.psi
    assert set(int(v) for v in psi) == set(q.elements())
    for u in range(ct.n):
        for v in range(ct.n):
            assert psi[ct.op(u, v)] == q.op(int(psi[u]), int(psi[v]))


def test_projection_cover_is_identity():
    q = proj(3)
    r = build_cover(q, simple_multitransversal(q))
    assert r.psi_bijective
    assert list(r.psi) == [0, 1, 2]
    assert is_isomorphic(r.cover.quandle, q) is not None


def test_bijective_cover_of_affine_input():
    # Aff(Z8,5) is covered bijectively from the optimized transversal, so
    # the cover is a re-coordinatized copy of the input.
    q = aff(8, 5).quandle
    r = build_cover(q, optimized_multitransversal(q))
    assert r.group.order == 8
    assert r.psi_bijective
    assert is_isomorphic(r.cover.quandle, q) is not None


def test_negative_verdict_raises(sum_two_z3):
    with pytest.raises(NotHomImage):
        build_cover(sum_two_z3, simple_multitransversal(sum_two_z3))


def test_singleton_quandle_cover():
    q = proj(1)
    r = build_cover(q, simple_multitransversal(q))
    assert r.group.order == 1
    assert r.psi_bijective


def test_verify_cover_catches_tampered_psi(sum_three_z2):
    q = sum_three_z2
    r = build_cover(q, optimized_multitransversal(q))
    bad_psi = np.array(r.psi, dtype=np.int32)
    bad_psi[0], bad_psi[1] = bad_psi[1], bad_psi[0]
    tampered = dataclasses.replace(r, psi=bad_psi)
    report = verify_cover(tampered, q)
    assert not report.ok
    assert report.failures


def test_dis_as_group_matches_displacement_order(sum_three_z2, sum_z2_z1):
    for q in (sum_three_z2, sum_z2_z1):
        assert dis_as_group(q).order == displacement_group(q).order


def test_pair_of_roundtrip(sum_z2_z1):
    q = sum_z2_z1
    r = build_cover(q, optimized_multitransversal(q))
    for u in range(r.group.order):
        di, ti = r.pair_of(u)
        assert u == di * r.transversal.size + ti
