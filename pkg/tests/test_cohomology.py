"""Unit tests for character-level and global cohomology."""
import random

import pytest

from toricsheaf import (
    SheafCohomology,
    cech_cohomology,
    enumeration_box,
    euler_character,
    euler_characteristic,
    h0_character,
    h0_dim,
    h1_surface,
    hirzebruch,
    hn_character,
    hn_dim,
    line_bundle,
    projective_space,
    sigma_piece,
    structure_sheaf,
    twist,
)
from toricsheaf.errors import UnsupportedVarietyError

from conftest import random_sheaf


def p1_bundle(a0: int) -> tuple:
    p1 = projective_space(1)
    return p1, line_bundle(p1, (a0, 0))


def test_sigma_piece_zero_cone(tangent_sheaf):
    zero_cone = tangent_sheaf.variety.cones()[0]
    assert zero_cone.ray_indices == ()
    assert sigma_piece(tangent_sheaf, zero_cone, (7, -5)).is_full


def test_sigma_piece_tangent_maximal_cone(tangent_sheaf):
    v = tangent_sheaf.variety
    cone = next(
        c for c in v.maximal_cones() if c.ray_indices == (1, 3)
    )  # cone(u1, v1)
    assert sigma_piece(tangent_sheaf, cone, (0, 0)).is_full


def test_sigma_piece_line_bundle_rule():
    h = hirzebruch(2)
    coeffs = (1, 0, -2, 0)
    sheaf = line_bundle(h, coeffs)
    for cone in h.cones():
        for m in ((0, 0), (1, -1), (-2, 1), (3, 2)):
            expected = all(
                h.pairing(m, k) >= -coeffs[k] for k in cone.ray_indices
            )
            assert sigma_piece(sheaf, cone, m).is_full == expected


def test_h0_character_examples(tangent_sheaf):
    p2 = projective_space(2)
    o2 = line_bundle(p2, (2, 0, 0))
    assert h0_character(o2, (0, 0)) == 1
    for d1 in range(-6, 7):
        for d2 in range(-6, 7):
            if 3 * d2 - d1 <= -2:
                assert h0_character(tangent_sheaf, (d1, d2)) == 0
    assert h0_character(tangent_sheaf, (0, 0)) == 2  # all pieces full there


def test_h0_character_bounded_by_pieces(rank3_sheaf):
    v = rank3_sheaf.variety
    for m in ((0, 0), (-1, -1), (2, 1), (-3, 2)):
        bound = min(
            f.evaluate(v.pairing(m, k)).dim
            for k, f in enumerate(rank3_sheaf.filtrations)
        )
        assert h0_character(rank3_sheaf, m) <= bound


def test_hn_character_examples():
    p2 = projective_space(2)
    om3 = line_bundle(p2, (-3, 0, 0))
    assert hn_character(om3, (-1, -1)) == 1
    assert hn_character(om3, (0, 0)) == 0   # rho1, rho2 pieces full
    _, om2 = p1_bundle(-2)
    # rho0 = -e1, so both pieces vanish at the character -1, not at +1
    assert hn_character(om2, (-1,)) == 1
    assert hn_character(om2, (1,)) == 0


def test_euler_character_examples():
    _, om2 = p1_bundle(-2)
    assert euler_character(om2, (-1,)) == -1
    p1, o = p1_bundle(0)
    assert euler_character(o, (5,)) == 0
    assert euler_character(o, (0,)) == 1 == h0_character(o, (0,))


def test_enumeration_box_p1():
    _, o = p1_bundle(0)
    box = enumeration_box(o)
    assert box.lower == (-1,) and box.upper == (1,)


def test_enumeration_box_contains_triangle():
    p2 = projective_space(2)
    o2 = line_bundle(p2, (2, 0, 0))
    box = enumeration_box(o2)
    for d1 in range(0, 3):
        for d2 in range(0, 3 - d1):
            assert (d1, d2) in box


def test_box_margin_invariance(rank3_sheaf):
    eng = SheafCohomology(rank3_sheaf)
    for c in ((0, 0), (3, -2), (-4, 1)):
        shifts = rank3_sheaf.variety.twist_divisor(c)
        box = enumeration_box(twist(rank3_sheaf, c))
        wide = box.expand(3)
        for fn in (eng.h0, eng.hn, eng.chi):
            tight = sum(fn(eng.levels(m, shifts)) for m in box.points())
            loose = sum(fn(eng.levels(m, shifts)) for m in wide.points())
            assert tight == loose
        tight_cech = [0, 0, 0]
        loose_cech = [0, 0, 0]
        for target, points in ((tight_cech, box.points()), (loose_cech, wide.points())):
            for m in points:
                for i, hi in enumerate(eng.cech(eng.levels(m, shifts))):
                    target[i] += hi
        assert tight_cech == loose_cech


def test_h0_dim_binomials():
    p2 = projective_space(2)
    o = structure_sheaf(p2)
    for d in range(0, 5):
        assert h0_dim(o, (d,)) == (d + 1) * (d + 2) // 2
    assert h0_dim(o, (-1,)) == 0


def test_h0_dim_final_example(rank3_sheaf):
    # frozen from the direct character-enumeration oracle over a wide box
    assert h0_dim(rank3_sheaf, (10, 4)) == 512


def test_cech_p2_canonical():
    p2 = projective_space(2)
    om3 = line_bundle(p2, (-3, 0, 0))
    assert cech_cohomology(om3, (0,)) == (0, 0, 1)
    assert hn_dim(om3, (0,)) == 1
    o1 = line_bundle(p2, (1, 0, 0))
    assert cech_cohomology(o1, (0,)) == (3, 0, 0)


def test_cech_p1_values():
    p1, om2 = p1_bundle(-2)
    assert cech_cohomology(om2, (0,)) == (0, 1)
    _, o = p1_bundle(0)
    assert cech_cohomology(o, (3,)) == (4, 0)


def test_cech_final_example_entries(rank3_sheaf):
    eng = SheafCohomology(rank3_sheaf)
    assert eng.cech_twisted((2, 4))[1] == 3
    assert eng.cech_twisted((10, -4))[1] == 47
    assert eng.cech_twisted((5, -1))[1] == 0


def test_h1_surface_matches_cech(rank3_sheaf):
    assert h1_surface(rank3_sheaf, (2, 4)) == 3
    assert h1_surface(rank3_sheaf, (5, -1)) == 0
    h3 = hirzebruch(3)
    assert h1_surface(structure_sheaf(h3), (0, 0)) == 0
    rng = random.Random(11)
    sheaf = random_sheaf(rng, h3, 2)
    eng = SheafCohomology(sheaf)
    for c in ((0, 0), (2, -1), (-3, 2)):
        assert eng.h1_identity_twisted(c) == eng.cech_twisted(c)[1]


def test_h1_surface_unsupported():
    p3 = projective_space(3)
    with pytest.raises(UnsupportedVarietyError):
        h1_surface(structure_sheaf(p3), (0,))


def test_line_bundle_character_dims_are_01():
    h = hirzebruch(2)
    sheaf = line_bundle(h, (1, -1, 2, 0))
    eng = SheafCohomology(sheaf)
    box = enumeration_box(sheaf).expand(2)
    for m in box.points():
        lv = eng.levels(m)
        assert eng.h0(lv) in (0, 1)
        assert eng.hn(lv) in (0, 1)
        for hi in eng.cech(lv):
            assert hi in (0, 1)


def test_three_paths_agree_on_random_sheaves():
    rng = random.Random(23)
    for a in (0, 1, 2):
        v = hirzebruch(a)
        sheaf = random_sheaf(rng, v, rng.randint(1, 3), jump_lo=-4, jump_hi=0)
        eng = SheafCohomology(sheaf)
        for c in ((0, 0), (2, 1), (-2, 3), (4, -2)):
            cech = eng.cech_twisted(c)
            assert cech[0] == eng.h0_twisted(c)
            assert cech[-1] == eng.hn_twisted(c)
            alternating = sum((-1) ** i * hi for i, hi in enumerate(cech))
            assert alternating == eng.chi_twisted(c)


def test_three_paths_agree_on_projective_plane():
    rng = random.Random(3)
    p2 = projective_space(2)
    sheaf = random_sheaf(rng, p2, 2, jump_lo=-3, jump_hi=0)
    eng = SheafCohomology(sheaf)
    for c in ((0,), (2,), (-3,)):
        cech = eng.cech_twisted(c)
        assert cech[0] == eng.h0_twisted(c)
        assert cech[-1] == eng.hn_twisted(c)
        assert sum((-1) ** i * h for i, h in enumerate(cech)) == eng.chi_twisted(c)
        assert h1_surface(sheaf, c) == cech[1]


def test_h0_supported_equals_boxed():
    rng = random.Random(5)
    sheaf = random_sheaf(rng, hirzebruch(3), 3)
    eng = SheafCohomology(sheaf)
    for c in ((0, 0), (6, 2), (-9, -1), (12, -5)):
        assert eng.h0_supported(c) == eng.h0_twisted(c)


def test_cech_on_threefold_bundle():
    from toricsheaf import split_bundle

    v = split_bundle(1, (1, 2))
    o = structure_sheaf(v)
    eng = SheafCohomology(o)
    assert eng.cech_twisted((0, 0)) == (1, 0, 0, 0)
    canonical = tuple(-sum(d[i] for d in v.degrees) for i in range(2))
    assert eng.cech_twisted(canonical) == (0, 0, 0, 1)
    rng = random.Random(77)
    sheaf = random_sheaf(rng, v, 2, jump_lo=-3, jump_hi=0)
    eng = SheafCohomology(sheaf)
    for c in ((0, 0), (1, -1)):
        cech = eng.cech_twisted(c)
        assert cech[0] == eng.h0_twisted(c)
        assert cech[-1] == eng.hn_twisted(c)
        assert sum((-1) ** i * h for i, h in enumerate(cech)) == eng.chi_twisted(c)


def test_tangent_sheaf_cohomology_matches_deformation_theory():
    """h^0(T) = a + 5 (automorphisms), h^1(T) = a - 1 (deformations), h^2 = 0."""
    from toricsheaf import EquivariantReflexiveSheaf, KlyachkoFiltration, Subspace, span

    full = Subspace.full(2)
    for a in (1, 2, 3):
        h = hirzebruch(a)
        tangent = EquivariantReflexiveSheaf(h, 2, (
            KlyachkoFiltration((-1, 0), (span([(a, 1)], 2), full)),
            KlyachkoFiltration((-1, 0), (span([(0, 1)], 2), full)),
            KlyachkoFiltration((-1, 0), (span([(1, 0)], 2), full)),
            KlyachkoFiltration((-1, 0), (span([(1, 0)], 2), full)),
        ))
        assert cech_cohomology(tangent, (0, 0)) == (a + 5, a - 1, 0)


def test_cech_at_canonical_class_of_surface():
    h3 = hirzebruch(3)
    o = structure_sheaf(h3)
    canonical = tuple(-sum(d[i] for d in h3.degrees) for i in range(2))
    assert canonical == (1, -2)
    assert SheafCohomology(o).cech_twisted(canonical) == (0, 0, 1)


def test_euler_characteristic_is_polynomial_everywhere(rank3_sheaf):
    """chi of the twist agrees with the degree-2 polynomial through any window."""
    values = {(p, q): euler_characteristic(rank3_sheaf, (p, q))
              for p in range(0, 3) for q in range(0, 3)}
    # second differences constant in each direction
    for q in range(0, 3):
        row = [values[(p, q)] for p in range(0, 3)]
        assert row[2] - 2 * row[1] + row[0] == 0  # chi linear in p here
