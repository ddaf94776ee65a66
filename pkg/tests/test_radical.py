import itertools
import random

import pytest

from greenseq import (
    ExchangeMatrix,
    YSeed,
    apply_sequence,
    certify_no_mgs,
    check_radical_identity,
    coordinate_change,
    find_skew_symmetrizer,
    mutate_seed,
    radical_vector,
    track_step,
)
from greenseq.errors import (
    NotFromInitialSeed,
    NotMutationCyclic,
    UnsupportedDimension,
    ZeroMatrix,
)

from conftest import (
    MARKOV,
    TRIANGLE,
    A3_PATH,
    random_skew_symmetrizable_rows,
    solve_coords,
)


def kernel_ok(rows, u):
    return all(sum(r * x for r, x in zip(row, u)) == 0 for row in rows)


class TestRadicalVector:
    def test_markov(self):
        u = radical_vector(ExchangeMatrix(MARKOV))
        assert u.coords == (2, 2, 2) and u.convention_tag == "Cyclic"

    def test_a3_path(self):
        u = radical_vector(ExchangeMatrix(A3_PATH))
        assert u.coords == (1, 0, 1) and u.convention_tag == "AcyclicCanonical"

    def test_skew_symmetrizable_cycle(self):
        b = ExchangeMatrix([[0, 1, -1], [-2, 0, 2], [2, -2, 0]])
        assert find_skew_symmetrizer(b.entries).d == (2, 1, 1)
        u = radical_vector(b)
        assert u.coords == (2, 2, 2) and u.convention_tag == "Cyclic"

    def test_two_sink_fallback(self):
        # 1 <- 2 -> 3 after mutating the A3 path at 1
        b = ExchangeMatrix([[0, 1, 0], [-1, 0, -1], [0, 1, 0]])
        u = radical_vector(b)
        assert u.convention_tag == "KernelFallback"
        assert u.coords[0] > 0
        assert kernel_ok(b.entries, u.coords)

    def test_zero_matrix_rejected(self):
        with pytest.raises(ZeroMatrix):
            radical_vector(ExchangeMatrix([[0, 0, 0]] * 3))

    def test_dimension_guard(self):
        with pytest.raises(UnsupportedDimension):
            radical_vector(ExchangeMatrix([[0, 1], [-1, 0]]))

    def test_kernel_property_random(self):
        rng = random.Random(7)
        checked = 0
        while checked < 200:
            rows = random_skew_symmetrizable_rows(rng, 3)
            if all(x == 0 for row in rows for x in row):
                continue
            u = radical_vector(ExchangeMatrix(rows))
            assert kernel_ok(rows, u.coords)
            checked += 1


class TestCoordinateChange:
    def test_triangle_middle_vertex(self):
        s = YSeed.initial(ExchangeMatrix(TRIANGLE))
        assert coordinate_change((1, 1, 1), s, 2) == (1, 0, 1)

    def test_no_positive_entries_only_flips(self):
        # at the initial seed of the A3 path, row 1 is (0,-1,0): sgn(c_1)=+1
        # gives an empty positive part, so only a_1 flips
        s = YSeed.initial(ExchangeMatrix(A3_PATH))
        assert coordinate_change((5, 7, 9), s, 1) == (-5, 7, 9)

    def test_double_application_restores(self):
        rng = random.Random(13)
        for _ in range(100):
            rows = random_skew_symmetrizable_rows(rng, 3)
            s = YSeed.initial(ExchangeMatrix(rows))
            path = [rng.randint(1, 3) for _ in range(rng.randint(0, 6))]
            s = apply_sequence(s, path)
            a = tuple(rng.randint(-5, 5) for _ in range(3))
            k = rng.randint(1, 3)
            a1 = coordinate_change(a, s, k)
            s1 = mutate_seed(s, k)
            assert coordinate_change(a1, s1, k) == a

    def test_represented_vector_unchanged(self):
        # oracle: solve u = sum a_i c_i by exact linear solve before and after
        rng = random.Random(29)
        for _ in range(100):
            rows = random_skew_symmetrizable_rows(rng, 3)
            s = apply_sequence(
                YSeed.initial(ExchangeMatrix(rows)),
                [rng.randint(1, 3) for _ in range(rng.randint(0, 5))],
            )
            a = tuple(rng.randint(-4, 4) for _ in range(3))
            u = tuple(
                sum(a[i] * s.c[i][j] for i in range(3)) for j in range(3)
            )
            k = rng.randint(1, 3)
            a1 = coordinate_change(a, s, k)
            s1 = mutate_seed(s, k)
            assert solve_coords(s1.c, u) == a1


class TestTrackStep:
    def test_triangle_to_acyclic_middle(self):
        s = YSeed.initial(ExchangeMatrix(TRIANGLE))
        actual, predicted = track_step((1, 1, 1), s, 2)
        assert actual == predicted == (1, 0, 1)

    def test_path_source(self):
        s = YSeed.initial(ExchangeMatrix(A3_PATH))
        actual, predicted = track_step((1, 0, 1), s, 1)
        assert actual == predicted == (-1, 0, 1)

    def test_markov_cyclic_to_cyclic(self):
        s = YSeed.initial(ExchangeMatrix(MARKOV))
        for k in (1, 2, 3):
            actual, predicted = track_step((2, 2, 2), s, k)
            assert actual == predicted == (2, 2, 2)

    def test_agrees_with_linear_solve_on_random_paths(self):
        rng = random.Random(41)
        done = 0
        while done < 150:
            rows = random_skew_symmetrizable_rows(rng, 3)
            if all(x == 0 for row in rows for x in row):
                continue
            s = YSeed.initial(ExchangeMatrix(rows))
            u0 = radical_vector(s.b).coords
            a = u0
            for step in range(rng.randint(1, 12)):
                k = rng.randint(1, 3)
                a, _ = track_step(a, s, k)
                s = mutate_seed(s, k)
                assert solve_coords(s.c, u0) == a
            done += 1


class TestRadicalIdentity:
    def test_empty_path_on_markov(self):
        rep = check_radical_identity((), YSeed.initial(ExchangeMatrix(MARKOV)))
        assert rep.holds and rep.sign == "+"

    def test_triangle_single_step(self):
        rep = check_radical_identity((2,), YSeed.initial(ExchangeMatrix(TRIANGLE)))
        assert rep.holds

    def test_markov_all_paths_length_4_sign_plus(self):
        s0 = YSeed.initial(ExchangeMatrix(MARKOV))
        for path in itertools.product((1, 2, 3), repeat=4):
            rep = check_radical_identity(path, s0)
            assert rep.holds and rep.sign == "+"

    def test_requires_initial_c(self):
        s = mutate_seed(YSeed.initial(ExchangeMatrix(MARKOV)), 1)
        with pytest.raises(NotFromInitialSeed):
            check_radical_identity((), s)


class TestCertificate:
    def test_markov_certificate(self):
        cert = certify_no_mgs(YSeed.initial(ExchangeMatrix(MARKOV)))
        assert cert.u0.coords == (2, 2, 2)
        trace = cert.replay((1, 2, 3, 1, 2))
        assert all(all(x > 0 for x in a) for a in trace)

    def test_acyclic_seed_rejected(self):
        with pytest.raises(NotMutationCyclic):
            certify_no_mgs(YSeed.initial(ExchangeMatrix(TRIANGLE)))

    def test_classifier_decides_applicability(self):
        b = ExchangeMatrix([[0, 1, -1], [-2, 0, 2], [2, -2, 0]])
        from greenseq import classify_mutation_cyclicity

        verdict = classify_mutation_cyclicity(b)
        if verdict.kind == "MutationAcyclic":
            with pytest.raises(NotMutationCyclic):
                certify_no_mgs(YSeed.initial(b))
        else:
            certify_no_mgs(YSeed.initial(b))

    def test_replay_all_counts_paths(self):
        cert = certify_no_mgs(YSeed.initial(ExchangeMatrix(MARKOV)))
        assert cert.replay_all(4) == 81
