import random

import pytest

from conftest import direct_l
from grsdual.construct import (
    ParameterError,
    Theorem4Params,
    Theorem123Params,
    build_theorem1,
    build_theorem2,
    build_theorem3,
    build_theorem4,
    construct,
    coset_representatives,
    field_for,
    lemma_ha,
    subspace_v,
    theorem4_tuples,
    theorem123_tuples,
)
from grsdual.duality import min_distance_exhaustive, verify_self_dual
from grsdual.gf import field_create
from grsdual.grs import l_value


def test_lemma_ha_examples():
    F = field_create(13)
    assert lemma_ha(F, 1, 1) == 1
    assert lemma_ha(F, 4, 1) == 7
    alpha = 8
    pts = [pow(alpha, j, 13) for j in range(1, 5)]
    assert lemma_ha(F, 4, 2) == direct_l(F, pts, 1) == (4 * pow(12, -1, 13)) % 13
    with pytest.raises(ValueError):
        lemma_ha(F, 5, 1)


def test_coset_representatives():
    F25 = field_create(5, 2)
    assert coset_representatives(F25, 5, 3, 1) == [1]
    one, h = coset_representatives(F25, 5, 3, 2)
    assert one == 1 and F25.element_order(h) == 4
    assert F25.pow(one, 3) != F25.pow(h, 3)
    F81 = field_create(3, 4)
    betas = coset_representatives(F81, 9, 5, 6)
    assert len({F81.pow(b, 5) for b in betas}) == 6
    with pytest.raises(ParameterError):
        coset_representatives(F81, 9, 5, 9)


def _check(F, code, n):
    assert code.n == n and code.k == n // 2
    assert len(set(code.points)) == len(code.points)
    assert verify_self_dual(F, code)


def test_theorem1_examples():
    F9 = field_create(3, 2)
    _check(F9, build_theorem1(F9, Theorem123Params(3, 1, 2, 1)), 2)
    F25 = field_create(5, 2)
    code = build_theorem1(F25, Theorem123Params(5, 3, 2, 1))
    _check(F25, code, 6)
    assert min_distance_exhaustive(F25, code) == 4
    F81 = field_create(3, 4)
    _check(F81, build_theorem1(F81, Theorem123Params(9, 5, 6, 1)), 30)


def test_theorem2_examples():
    F25 = field_create(5, 2)
    code = build_theorem2(F25, Theorem123Params(5, 3, 3, 2))
    _check(F25, code, 10)
    assert code.extended
    F81 = field_create(3, 4)
    _check(F81, build_theorem2(F81, Theorem123Params(9, 5, 3, 2)), 16)
    with pytest.raises(ParameterError):
        build_theorem2(F25, Theorem123Params(5, 3, 2, 2))


def test_theorem3_examples():
    F25 = field_create(5, 2)
    code = build_theorem3(F25, Theorem123Params(5, 3, 2, 3))
    _check(F25, code, 8)
    assert code.points[0] == 0 and code.extended
    F81 = field_create(3, 4)
    _check(F81, build_theorem3(F81, Theorem123Params(9, 5, 6, 3)), 32)
    with pytest.raises(ParameterError):
        build_theorem3(F25, Theorem123Params(5, 3, 3, 3))


def test_subspace_v():
    F = field_create(5, 2)
    assert subspace_v(F, 5, 2, 1) == [0, 5, 10, 15, 20]
    F81 = field_create(3, 4)
    V = subspace_v(F81, 3, 4, 2)
    assert len(V) == 9 and len(set(V)) == 9
    assert [v for v in V if v < 3] == [0]
    # closed under addition and F_p scaling
    assert all(F81.add(a, b) in V for a in V for b in V)
    assert all(F81.mul(2, a) in V for a in V)
    with pytest.raises(ParameterError):
        subspace_v(F81, 3, 4, 4)


def test_theorem4_examples():
    F = field_create(5, 2)
    _check(F, build_theorem4(F, Theorem4Params(5, 2, 2, 1)), 20)
    _check(F, build_theorem4(F, Theorem4Params(5, 2, 1, 1)), 10)
    with pytest.raises(ParameterError):
        build_theorem4(F, Theorem4Params(5, 2, 2, 2))


def test_theorem4_e0_only_on_request():
    with pytest.raises(ParameterError):
        construct(Theorem4Params(5, 2, 2, 0))
    built = construct(Theorem4Params(5, 2, 2, 0), allow_e0=True)
    assert built.code.n == 4 and verify_self_dual(built.ctx, built.code)


@pytest.mark.parametrize(
    "params",
    [
        Theorem123Params(9, 5, 9, 1),  # t too large
        Theorem123Params(9, 7, 2, 1),  # 7 does not divide 80
        Theorem123Params(9, 16, 2, 1),  # (q-1)/m = 5 odd
        Theorem123Params(9, 5, 3, 1),  # n odd
        Theorem123Params(6, 1, 2, 1),  # r not a prime power
        Theorem123Params(9, 5, 1, 1),  # t < 2
        Theorem4Params(5, 2, 3, 1),  # 6 does not divide 4
        Theorem4Params(3, 3, 1, 1),  # (27-1)/2 = 13 odd
    ],
)
def test_invalid_parameters(params):
    with pytest.raises(ParameterError):
        construct(params)


def test_wrong_field_or_tag():
    F = field_create(7, 2)
    with pytest.raises(ParameterError):
        build_theorem1(F, Theorem123Params(5, 3, 2, 1))
    F25 = field_create(5, 2)
    with pytest.raises(ParameterError):
        build_theorem1(F25, Theorem123Params(5, 3, 2, 3))


def test_theorem1_l_values_closed_form():
    for r, m, t in [(5, 3, 2), (7, 4, 3), (9, 5, 6), (11, 6, 5)]:
        built = construct(Theorem123Params(r, m, t, 1))
        F, pts = built.ctx, built.code.points
        alpha = F.root_of_unity(m)
        betas = coset_representatives(F, r, m, t)
        for z, b in enumerate(betas):
            cross = F.prod(F.sub(F.pow(b, m), F.pow(c, m)) for l, c in enumerate(betas) if l != z)
            for i in range(1, m + 1):
                idx = z * m + (i - 1)
                expected = F.prod(
                    [F.pow(b, m - 1), F.from_int(m), F.pow(alpha, -i), cross]
                )
                assert l_value(F, pts, idx) == expected


def test_theorem4_l_values_scale_with_omega():
    for p, mdeg, t, e in [(5, 2, 2, 1), (7, 2, 3, 1), (3, 4, 1, 2), (13, 2, 3, 1)]:
        built = construct(Theorem4Params(p, mdeg, t, e))
        F, pts = built.ctx, built.code.points
        omega = F.pow(F.subfield_generator(p), (p - 1) // (2 * t))
        size = p**e
        products = set()
        for idx in range(len(pts)):
            i = idx // size
            products.add(F.mul(l_value(F, pts, idx), F.pow(omega, i)))
        assert len(products) == 1


def test_all_small_tuples_self_dual():
    count = 0
    for q in (9, 25, 49):
        for params in list(theorem123_tuples(q)) + list(theorem4_tuples(q)):
            built = construct(params)
            _check(built.ctx, built.code, params.n)
            count += 1
    assert count > 20


def test_sampled_tuples_larger_fields():
    rng = random.Random(2024)
    checked = 0
    for q in (169, 289, 361, 529, 625, 729, 841, 961, 2187, 3125, 6561):
        tuples = [P for P in list(theorem123_tuples(q)) + list(theorem4_tuples(q)) if P.n <= 60]
        for params in rng.sample(tuples, min(4, len(tuples))):
            built = construct(params)
            _check(built.ctx, built.code, params.n)
            checked += 1
    assert checked >= 30


def test_field_for():
    assert field_for(Theorem123Params(9, 5, 6, 1)).q == 81
    assert field_for(Theorem4Params(5, 3, 1, 1)).q == 125
