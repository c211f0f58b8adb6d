from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fwburnside import (
    BurnsideElement,
    PreconditionError,
    basis_element,
    check_commutes,
    check_def_necessary,
    check_gcd_property,
    check_integrality,
    check_m_equality,
    check_prime_kernel_sufficient,
    construct_group,
    cyclic_group,
    fw_apply,
    fw_context,
    fw_transitive_image,
    identity_element,
    marks_of,
    multiply,
    r_constant,
    subgroup_lattice,
    t_constant,
    transport_element,
)
from fwburnside.groups import cyclic_generator, cyclic_isomorphism


def coeffs_strategy(k):
    rat = st.builds(
        Fraction,
        st.integers(min_value=-5, max_value=5),
        st.integers(min_value=1, max_value=3),
    )
    return st.lists(rat, min_size=k, max_size=k)


def test_lift_on_cyclic_group_is_identity():
    G = cyclic_group(12)
    ctx = fw_context(G)
    assert ctx.C is G
    lat = subgroup_lattice(G)
    for c in range(lat.n_classes()):
        x = basis_element(G, c)
        assert fw_apply(ctx, x) == x


def test_lift_is_unital_and_preserves_free_set(q8):
    ctx = fw_context(q8)
    clat = subgroup_lattice(ctx.C)
    assert fw_apply(ctx, identity_element(ctx.C)) == identity_element(q8)
    free_c = basis_element(ctx.C, 0)
    assert fw_apply(ctx, free_c) == basis_element(q8, 0)


def test_lift_matches_marks_by_subgroup_order(q8):
    # the defining property: the mark at every H equals the source mark at
    # the cyclic subgroup of the same order
    ctx = fw_context(q8)
    clat = subgroup_lattice(ctx.C)
    glat = subgroup_lattice(q8)
    for j in range(clat.n_classes()):
        x = basis_element(ctx.C, j)
        y = fw_apply(ctx, x)
        mx = marks_of(x).marks
        my = marks_of(y).marks
        for c in range(glat.n_classes()):
            d = glat.class_order(c)
            assert my[c] == mx[clat.class_by_label(f"{d}:0")]


def test_transitive_image_q8(q8):
    ctx = fw_context(q8)
    ti = fw_transitive_image(ctx, ctx.c_subgroup(2))
    assert ti.transitive
    assert ti.stabilizer == q8.center()
    glat = subgroup_lattice(q8)
    assert ti.element == basis_element(q8, glat.class_index(q8.center()))


def test_transitive_image_characterization():
    # [C/D] lifts to a transitive set exactly when some order-|D| class
    # has the gcd property, and then the stabilizer is such a class
    for spec in ("S3", "S4", "Q8", "A4", "D12", "SL(2,3)"):
        G = construct_group(spec)
        ctx = fw_context(G)
        glat = subgroup_lattice(G)
        clat = subgroup_lattice(ctx.C)
        for j in range(clat.n_classes()):
            d = clat.class_order(j)
            ti = fw_transitive_image(ctx, ctx.c_subgroup(d))
            witness = any(
                glat.class_order(c) == d
                and check_gcd_property(G, glat.class_rep(c))
                for c in range(glat.n_classes())
            )
            assert ti.transitive == witness
            if ti.transitive:
                assert ti.stabilizer.order == d
                assert check_gcd_property(G, ti.stabilizer)


def test_lift_of_coset_basis_matches_gcd_class():
    # fw([C/C_d]) equals [G/N] exactly when N has the gcd property
    for spec in ("S4", "Q8", "A4", "Dic12"):
        G = construct_group(spec)
        ctx = fw_context(G)
        glat = subgroup_lattice(G)
        for c in range(glat.n_classes()):
            N = glat.class_rep(c)
            lifted = fw_apply(
                ctx,
                basis_element(
                    ctx.C, subgroup_lattice(ctx.C).class_index(ctx.c_subgroup(N.order))
                ),
            )
            agrees = lifted == basis_element(G, c)
            assert agrees == check_gcd_property(G, N)


@pytest.mark.parametrize("spec", ["S3", "S4", "Q8", "Q16", "A4", "A5", "SL(2,3)"])
def test_integrality_on_catalog_samples(spec):
    assert check_integrality(fw_context(construct_group(spec)))


@given(coeffs_strategy(4), coeffs_strategy(4))
def test_lift_is_a_ring_map(a_coeffs, b_coeffs):
    G = construct_group("Q8")
    ctx = fw_context(G)
    a = BurnsideElement(ctx.C, a_coeffs)
    b = BurnsideElement(ctx.C, b_coeffs)
    assert fw_apply(ctx, a + b) == fw_apply(ctx, a) + fw_apply(ctx, b)
    assert fw_apply(ctx, multiply(a, b)) == multiply(fw_apply(ctx, a), fw_apply(ctx, b))


def test_lift_ignores_generator_choice():
    # subgroups of a cyclic group are characteristic, so transporting along
    # any automorphism leaves every element fixed and the lift unchanged
    G = construct_group("D12")
    ctx = fw_context(G)
    C = ctx.C
    g0 = cyclic_generator(C)
    for g in range(C.n):
        if C.element_order(g) != C.n or g == g0:
            continue
        auto = cyclic_isomorphism(C, C, g0, g)
        for c in range(subgroup_lattice(C).n_classes()):
            x = basis_element(C, c)
            assert transport_element(x, auto, C) == x
            assert fw_apply(ctx, transport_element(x, auto, C)) == fw_apply(ctx, x)


def test_check_commutes_rejects_bad_inputs(q8):
    ctx = fw_context(q8)
    with pytest.raises(PreconditionError):
        check_commutes(ctx, "bogus", q8.center())
    other = construct_group("S3")
    with pytest.raises(PreconditionError):
        check_commutes(ctx, "def", other.center())


def test_def_counterexample_certificate():
    G = construct_group("C2xC2")
    ctx = fw_context(G)
    lat = subgroup_lattice(G)
    N = lat.class_rep(1)
    assert N.order == 2
    report = check_commutes(ctx, "def", N)
    assert not report.commutes
    assert report.certificate is not None
    cert = report.certificate
    assert cert.basis_label == "e[2]"
    assert cert.left == "-1/4[C2/1:0] + [C2/2:0]"
    assert cert.right == "1/4[C2/1:0]"


def test_def_commutes_at_center_quaternion_family():
    for spec in ("Q8", "Q16", "Dic12", "Dic20", "SL(2,3)"):
        G = construct_group(spec)
        ctx = fw_context(G)
        report = check_commutes(ctx, "def", G.center())
        assert report.commutes, spec
        assert report.certificate is None


def test_def_commutativity_downward_closed():
    # commuting kernels form a downward-closed family under containment
    for spec in ("C24", "Q16", "S4", "SL(2,3)", "D12"):
        G = construct_group(spec)
        ctx = fw_context(G)
        lat = subgroup_lattice(G)
        normal = list(lat.normal_class_indices())
        good = {
            c for c in normal if check_commutes(ctx, "def", lat.class_rep(c)).commutes
        }
        for c in good:
            N = lat.class_rep(c)
            for c2 in normal:
                M = lat.class_rep(c2)
                if M <= N:
                    assert c2 in good


def test_ind_ten_match_gcd_on_s4(s4):
    ctx = fw_context(s4)
    lat = subgroup_lattice(s4)
    for c in range(lat.n_classes()):
        H = lat.class_rep(c)
        expected = check_gcd_property(s4, H)
        assert check_commutes(ctx, "ind", H).commutes == expected
        assert check_commutes(ctx, "ten", H).commutes == expected


def test_res_and_fix_always_commute():
    for spec in ("S3", "Q8", "A4", "D10"):
        G = construct_group(spec)
        ctx = fw_context(G)
        lat = subgroup_lattice(G)
        for c in range(lat.n_classes()):
            H = lat.class_rep(c)
            assert check_commutes(ctx, "res", H).commutes
            if H.is_normal():
                assert check_commutes(ctx, "fix", H).commutes


def test_inf_matches_gcd_property():
    # mark bookkeeping: inflating then lifting agrees with lifting then
    # inflating exactly when |H n N| = gcd(|H|, |N|) for every H
    for spec in ("S4", "Q16", "SL(2,3)", "C2xC2"):
        G = construct_group(spec)
        ctx = fw_context(G)
        lat = subgroup_lattice(G)
        for c in lat.normal_class_indices():
            N = lat.class_rep(c)
            assert check_commutes(ctx, "inf", N).commutes == check_gcd_property(G, N)


def test_m_equality_examples():
    sl25 = construct_group("SL(2,5)")
    assert check_m_equality(sl25, sl25.center())
    v = construct_group("C2xC2")
    lat = subgroup_lattice(v)
    assert not check_m_equality(v, lat.class_rep(1))
    c12 = construct_group("C12")
    lat12 = subgroup_lattice(c12)
    for c in lat12.normal_class_indices():
        assert check_m_equality(c12, lat12.class_rep(c))


def test_def_necessary_conditions_hold_where_def_commutes():
    for spec in ("Q8", "Q16", "Dic12", "SL(2,3)", "C12", "S4"):
        G = construct_group(spec)
        ctx = fw_context(G)
        lat = subgroup_lattice(G)
        for c in lat.normal_class_indices():
            assert check_def_necessary(ctx, lat.class_rep(c))


def test_prime_kernel_sufficiency_on_center():
    for spec in ("Q8", "Q16", "Dic12", "Dic20", "SL(2,3)", "SL(2,5)"):
        G = construct_group(spec)
        ctx = fw_context(G)
        assert check_prime_kernel_sufficient(ctx, G.center())
        assert check_commutes(ctx, "def", G.center()).commutes


def test_prime_kernel_sufficiency_rejects_bad_hypotheses():
    # non-central kernel
    s3 = construct_group("S3")
    lat3 = subgroup_lattice(s3)
    C3 = next(lat3.class_rep(c) for c in lat3.normal_class_indices()
              if lat3.class_order(c) == 3)
    with pytest.raises(PreconditionError):
        check_prime_kernel_sufficient(fw_context(s3), C3)
    # composite order
    c8 = cyclic_group(8)
    with pytest.raises(PreconditionError):
        check_prime_kernel_sufficient(fw_context(c8), c8.subgroup([0, 2, 4, 6]))
    # not the unique subgroup of its order
    v = construct_group("C2xC2")
    latv = subgroup_lattice(v)
    with pytest.raises(PreconditionError):
        check_prime_kernel_sufficient(fw_context(v), latv.class_rep(1))


def test_t_and_r_constants_frozen(q8):
    lat = subgroup_lattice(q8)
    Z = q8.center()
    assert t_constant(q8, Z, Z) == Fraction(1, 2)
    assert t_constant(q8, lat.class_rep(2), Z) == 1
    assert t_constant(q8, q8.full_subgroup(), Z) == 1
    ctx = fw_context(q8)
    CN = ctx.c_subgroup(2)
    assert r_constant(ctx, ctx.c_subgroup(1), CN) == Fraction(1, 2)
    assert r_constant(ctx, ctx.c_subgroup(2), CN) == Fraction(1, 2)
    assert r_constant(ctx, ctx.c_subgroup(4), CN) == 1
    assert r_constant(ctx, ctx.c_subgroup(8), CN) == 1


def test_report_fields(q8):
    ctx = fw_context(q8)
    report = check_commutes(ctx, "def", q8.center())
    assert report.op == "def"
    assert report.group_label == "Q8"
    assert report.sub_label == "2:0"
    assert report.checked > 0
