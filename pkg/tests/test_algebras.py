import itertools
import random

import pytest

from conftest import naive_least_rotation, random_base, random_certificate, random_realizable_summand
from gradedlpa import (
    CyclicForm,
    DirectSumAlgebra,
    EntryShift,
    GlobalShift,
    GradedBase,
    InvalidStepError,
    NotIsomorphicError,
    Permute,
    ShiftedMatrixAlgebra,
    TrivialForm,
    WindowExceededError,
    apply_certificate,
    apply_step,
    canonical_form,
    direct_sum_iso,
    inverse_step,
    is_graded_isomorphic,
    iso_certificate,
    least_rotation_index,
    oracle_iso,
    summand_key,
)


def alg(base, *shifts):
    return ShiftedMatrixAlgebra.from_shifts(base, shifts)


K = GradedBase.trivial()
L = GradedBase.laurent


def test_base_validation_and_str():
    assert str(K) == "K"
    assert str(L(3)) == "K[x^3]"
    assert K.period is None and L(2).period == 2
    with pytest.raises(ValueError):
        L(0)
    with pytest.raises(ValueError):
        GradedBase(period=-1)


def test_algebra_construction():
    a = alg(K, 3, 1, 2)
    assert a.n == 3 and a.shifts == (3, 1, 2)
    assert str(a) == "M3(K)(3,1,2)"
    assert str(alg(L(2), 0, 1, 1)) == "M3(K[x^2])(0,1,1)"
    with pytest.raises(ValueError):
        ShiftedMatrixAlgebra(K, 2, (0,))
    with pytest.raises(ValueError):
        ShiftedMatrixAlgebra(K, 0, ())


def test_direct_sum_str():
    s = DirectSumAlgebra((alg(K, 0), alg(L(1), 2)))
    assert str(s) == "M1(K)(0) (+) M1(K[x^1])(2)"
    with pytest.raises(ValueError):
        DirectSumAlgebra(())


def test_least_rotation_exhaustive():
    for n in range(1, 7):
        for vec in itertools.product(range(3), repeat=n):
            assert least_rotation_index(vec) == naive_least_rotation(vec)


def test_least_rotation_random():
    rng = random.Random(7)
    for _ in range(500):
        vec = tuple(rng.randint(0, 5) for _ in range(rng.randint(1, 12)))
        assert least_rotation_index(vec) == naive_least_rotation(vec)


def test_form_validation():
    TrivialForm(2, (1, 0, 3))
    with pytest.raises(ValueError):
        TrivialForm(2, (1, 1))
    with pytest.raises(ValueError):
        TrivialForm(1, (0, 1))
    with pytest.raises(ValueError):
        TrivialForm(1, (1, 0))
    CyclicForm(2, (0, 1))
    with pytest.raises(ValueError):
        CyclicForm(2, (1, 0))
    with pytest.raises(ValueError):
        CyclicForm(2, (0, 0))
    with pytest.raises(ValueError):
        CyclicForm(3, (0, 1))


def test_canonical_form_trivial():
    form = canonical_form(alg(K, 3, 1, 2, 1))
    assert isinstance(form, TrivialForm)
    assert form.k == 2 and form.mults == (2, 1, 1)
    assert str(form) == "trivial k=2 mults=(2,1,1)"
    assert canonical_form(alg(K, 5)).mults == (1,)


def test_canonical_form_trivial_with_gap():
    form = canonical_form(alg(K, 0, 3))
    assert form.k == 3 and form.mults == (1, 0, 0, 1)


def test_canonical_form_cyclic():
    form = canonical_form(alg(L(2), 0, 1, 2))
    assert isinstance(form, CyclicForm)
    assert form.period == 2 and form.mults == (1, 2)
    assert str(form) == "cyclic m=2 mults=(1,2)"
    assert canonical_form(alg(L(2), 0, 1, 1)).mults == (1, 2)
    assert canonical_form(alg(L(3), 0, 1, 2)).mults == (1, 1, 1)
    # m = 1 collapses every shift to residue zero
    assert canonical_form(alg(L(1), 4, -7, 0)).mults == (3,)


def test_canonical_form_cyclic_rotation():
    # counts (0->2, 1->1, 2->0, 3->1) rotates to least (0,1,2,1)
    form = canonical_form(alg(L(4), 0, 0, 1, 3))
    assert form.mults == (0, 1, 2, 1)


def test_canonical_form_dense_guard():
    with pytest.raises(ValueError):
        canonical_form(alg(K, 0, 2**31))
    with pytest.raises(ValueError):
        canonical_form(alg(L(10_000_000), 0))


def test_apply_step_permute():
    # new shifts read through the image: new[i] = old[image[i]]
    assert apply_step((10, 20, 30), Permute((2, 3, 1)), K) == (20, 30, 10)
    with pytest.raises(InvalidStepError):
        apply_step((0, 1), Permute((1, 2, 3)), K)
    with pytest.raises(ValueError):
        Permute((1, 1, 2))


def test_apply_step_global_shift():
    assert apply_step((0, 1, 1), GlobalShift(1), L(2)) == (1, 2, 2)
    assert apply_step((5,), GlobalShift(-7), K) == (-2,)


def test_apply_step_entry_shift():
    assert apply_step((1, 2, 2), EntryShift(3, -2), L(2)) == (1, 2, 0)
    with pytest.raises(InvalidStepError):
        apply_step((0, 1), EntryShift(1, 2), K)
    with pytest.raises(InvalidStepError):
        apply_step((0, 1), EntryShift(1, 3), L(2))
    with pytest.raises(InvalidStepError):
        apply_step((0, 1), EntryShift(3, 2), L(2))
    with pytest.raises(ValueError):
        EntryShift(0, 2)


def test_inverse_step_round_trip():
    rng = random.Random(11)
    for _ in range(300):
        base = random_base(rng)
        n = rng.randint(1, 5)
        shifts = tuple(rng.randint(-6, 6) for _ in range(n))
        for step in random_certificate(rng, base, n, length=4):
            forward = apply_step(shifts, step, base)
            assert apply_step(forward, inverse_step(step), base) == shifts


def test_is_graded_isomorphic_examples():
    assert is_graded_isomorphic(alg(K, 0, 2), alg(K, 1, 3))
    assert not is_graded_isomorphic(alg(K, 0, 1), alg(K, 0, 2))
    assert is_graded_isomorphic(alg(L(2), 0, 1, 1), alg(L(2), 0, 1, 2))
    assert not is_graded_isomorphic(alg(L(2), 0, 0), alg(L(2), 0, 1))
    assert not is_graded_isomorphic(alg(K, 0), alg(L(1), 0))
    assert not is_graded_isomorphic(alg(K, 0), alg(K, 0, 0))


def test_is_graded_isomorphic_large_trivial_shifts():
    big = 2**31
    assert is_graded_isomorphic(alg(K, 0, big), alg(K, 5, big + 5))
    assert not is_graded_isomorphic(alg(K, 0, big), alg(K, 0, big - 1))


def test_iso_certificate_on_scrambled_pairs():
    rng = random.Random(13)
    for _ in range(400):
        a = random_realizable_summand(rng)
        cert = random_certificate(rng, a.base, a.n)
        b = ShiftedMatrixAlgebra.from_shifts(a.base, apply_certificate(a.shifts, cert, a.base))
        produced = iso_certificate(a, b)
        assert apply_certificate(a.shifts, produced, a.base) == b.shifts


def test_iso_certificate_trivial_is_shift_then_permute():
    cert = iso_certificate(alg(K, 0, 2), alg(K, 1, 3))
    assert cert == [GlobalShift(1)]
    cert = iso_certificate(alg(K, 2, 0), alg(K, 1, 3))
    assert apply_certificate((2, 0), cert, K) == (1, 3)


def test_iso_certificate_identical_inputs_is_empty():
    for a in (alg(K, 0, 1, 1), alg(K, 5), alg(L(2), 0, 1), alg(L(2), 5), alg(L(3), 7, 2, -4)):
        assert iso_certificate(a, a) == []


def test_iso_is_an_equivalence_relation():
    rng = random.Random(131)
    for base in (K, L(1), L(2), L(3)):
        pool = [
            alg(base, *(rng.randint(-2, 2) for _ in range(rng.randint(1, 3))))
            for _ in range(12)
        ]
        for a in pool:
            assert is_graded_isomorphic(a, a)
        for a, b in itertools.combinations(pool, 2):
            assert is_graded_isomorphic(a, b) == is_graded_isomorphic(b, a)
        for a, b, c in itertools.combinations(pool, 3):
            if is_graded_isomorphic(a, b) and is_graded_isomorphic(b, c):
                assert is_graded_isomorphic(a, c)


def test_iso_certificate_rejects_non_isomorphic():
    with pytest.raises(NotIsomorphicError):
        iso_certificate(alg(K, 0, 1), alg(K, 0, 2))
    with pytest.raises(NotIsomorphicError):
        iso_certificate(alg(K, 0), alg(L(1), 0))


def test_summand_key_separates_bases():
    assert summand_key(alg(K, 0)) != summand_key(alg(L(1), 0))
    assert summand_key(alg(L(2), 0, 1)) == summand_key(alg(L(2), 4, 7))


def test_direct_sum_iso_example():
    left = DirectSumAlgebra((alg(K, 0), alg(K, 0, 1)))
    right = DirectSumAlgebra((alg(K, 5, 6), alg(K, 7)))
    assert direct_sum_iso(left, left)
    assert direct_sum_iso(left, right)
    assert not direct_sum_iso(left, DirectSumAlgebra((alg(K, 0), alg(K, 0, 2))))
    assert not direct_sum_iso(left, DirectSumAlgebra((alg(K, 0),)))
    # same size and shifts but different base kinds never match
    assert not direct_sum_iso(
        DirectSumAlgebra((alg(K, 0, 1),)), DirectSumAlgebra((alg(L(1), 0, 1),))
    )


def test_direct_sum_iso_permuted_summands():
    rng = random.Random(17)
    for _ in range(100):
        summands = [random_realizable_summand(rng) for _ in range(rng.randint(1, 4))]
        scrambled = []
        for a in summands:
            cert = random_certificate(rng, a.base, a.n)
            scrambled.append(
                ShiftedMatrixAlgebra.from_shifts(a.base, apply_certificate(a.shifts, cert, a.base))
            )
        rng.shuffle(scrambled)
        assert direct_sum_iso(DirectSumAlgebra(tuple(summands)), DirectSumAlgebra(tuple(scrambled)))


def test_oracle_iso_small():
    assert oracle_iso(alg(K, 0, 2), alg(K, 1, 3), bound=4)
    assert not oracle_iso(alg(K, 0, 1), alg(K, 0, 2), bound=4)
    assert oracle_iso(alg(L(2), 0, 1, 1), alg(L(2), 0, 1, 2), bound=4)
    assert oracle_iso(alg(L(2), 0, 1, 1), alg(L(2), 0, 1, 2), bound=6)
    assert not oracle_iso(alg(K, 0), alg(K, 0, 0), bound=3)
    x = alg(L(3), 4, 1)
    assert oracle_iso(x, x, bound=2)


def test_oracle_iso_window_guard():
    with pytest.raises(WindowExceededError):
        oracle_iso(alg(K, *range(7)), alg(K, *range(7)), bound=2)
    with pytest.raises(WindowExceededError):
        oracle_iso(alg(K, 0, 500), alg(K, 0, 500), bound=2)
    with pytest.raises(ValueError):
        oracle_iso(alg(K, 0), alg(K, 0), bound=-1)


def test_oracle_iso_matches_decider():
    rng = random.Random(19)
    for _ in range(60):
        base = random_base(rng, max_period=3)
        n = rng.randint(1, 3)
        a = ShiftedMatrixAlgebra.from_shifts(base, tuple(rng.randint(0, 2) for _ in range(n)))
        b = ShiftedMatrixAlgebra.from_shifts(base, tuple(rng.randint(0, 2) for _ in range(n)))
        assert oracle_iso(a, b, bound=6) == is_graded_isomorphic(a, b)
