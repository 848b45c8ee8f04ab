"""Unit and property tests for permutation statistics and the sweep oracle."""
import itertools
import math

import pytest
from hypothesis import given, strategies as st

from refined_eulerian.permutations import (
    DEFAULT_CAP,
    EnumerationCapError,
    append_max,
    brute_a_count,
    brute_c_count,
    brute_eulerian,
    brute_refined_poly,
    complement,
    descent_stats,
    is_alternating,
    is_reverse_alternating,
    permutations_no_even_descents,
    permutations_no_odd_descents,
    reflect_insert,
    reflect_insert_inverse,
    reversal,
    reversal_complement,
    rotate_insert,
    rotate_insert_inverse,
    standardize_to,
    validate_permutation,
)


def perm_words(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


class TestDescentStats:
    def test_strictly_decreasing_word_has_all_descents(self):
        stats = descent_stats((3, 2, 1))
        assert stats.descent_set == (1, 2)
        assert (stats.odes, stats.edes) == (1, 1)

    def test_identity_has_no_descents(self):
        for n in range(1, 8):
            stats = descent_stats(tuple(range(1, n + 1)))
            assert stats.descent_set == ()
            assert (stats.des, stats.odes, stats.edes) == (0, 0, 0)

    def test_ten_element_example(self):
        stats = descent_stats((4, 1, 8, 3, 5, 7, 10, 2, 6, 9))
        assert stats.descent_set == (1, 3, 7)
        assert (stats.odes, stats.edes) == (3, 0)

    @pytest.mark.parametrize(
        "bad", [(1, 1, 2), (1, 3), (0, 1, 2), (), (2, 3, 4)]
    )
    def test_rejects_invalid_words(self, bad):
        with pytest.raises(ValueError):
            descent_stats(bad)

    @given(perm_words())
    def test_parity_split_adds_up(self, word):
        stats = descent_stats(word)
        assert stats.des == stats.odes + stats.edes
        assert all(1 <= i <= len(word) - 1 for i in stats.descent_set)

    @given(perm_words())
    def test_degree_bounds(self, word):
        n = len(word)
        stats = descent_stats(word)
        assert stats.odes <= n // 2
        assert stats.edes <= (n - 1) // 2


class TestAlternating:
    def test_singleton_is_both(self):
        assert is_alternating((1,)) and is_reverse_alternating((1,))

    def test_213_is_alternating(self):
        assert is_alternating((2, 1, 3))
        assert not is_reverse_alternating((2, 1, 3))

    def test_reverse_alternating_count_in_s4(self):
        count = sum(
            1
            for w in itertools.permutations(range(1, 5))
            if is_reverse_alternating(w)
        )
        assert count == 5

    @given(perm_words())
    def test_alternating_iff_odd_descents_saturate(self, word):
        n = len(word)
        stats = descent_stats(word)
        expected = stats.odes == n // 2 and stats.edes == 0
        assert is_alternating(word) == expected

    @given(perm_words())
    def test_reverse_alternating_iff_even_descents_saturate(self, word):
        n = len(word)
        stats = descent_stats(word)
        expected = stats.edes == (n - 1) // 2 and stats.odes == 0
        assert is_reverse_alternating(word) == expected


class TestSymmetryMaps:
    def test_reversal_complement_fixes_identity(self):
        assert reversal_complement((1, 2, 3)) == (1, 2, 3)

    def test_complement_example(self):
        assert complement((1, 3, 2)) == (3, 1, 2)

    @given(perm_words())
    def test_involutions(self, word):
        assert reversal(reversal(word)) == word
        assert complement(complement(word)) == word
        assert reversal_complement(reversal_complement(word)) == word

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_rc_mirrors_descents_for_odd_length(self, n):
        for word in itertools.permutations(range(1, n + 1)):
            mirror = reversal_complement(word)
            left = set(descent_stats(word).descent_set)
            right = {n - i for i in descent_stats(mirror).descent_set}
            assert left == right


class TestStandardize:
    def test_example_suffix(self):
        word = (1, 8, 3, 5, 7, 10, 2, 6, 9)
        target = (1, 2, 3, 4, 5, 6, 8, 9, 10)
        assert standardize_to(word, target) == (1, 8, 3, 4, 6, 10, 2, 5, 9)

    def test_small_relabel(self):
        assert standardize_to((3, 1, 2), (5, 7, 9)) == (9, 5, 7)

    @given(perm_words())
    def test_identity_relabel(self, word):
        assert standardize_to(word, sorted(word)) == word

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            standardize_to((1, 2), (3,))

    def test_duplicate_targets(self):
        with pytest.raises(ValueError):
            standardize_to((1, 2), (3, 3))


class TestBruteForce:
    def test_single_permutation(self):
        assert brute_refined_poly(1).to_text() == "1"

    def test_s3(self):
        assert brute_refined_poly(3).to_text() == "1 + 2*p + 2*q + p*q"

    def test_s4_row_at_p0(self):
        assert brute_refined_poly(4).substitute_p(0).to_text("q") == "1 + 5*q"

    @pytest.mark.parametrize("n", range(1, 8))
    def test_coefficient_sum_is_factorial(self, n):
        assert brute_refined_poly(n).coefficient_sum() == math.factorial(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_top_monomial(self, n):
        poly = brute_refined_poly(n)
        top = [key for key in poly.terms() if sum(key) == n - 1]
        assert top == [(n // 2, (n - 1) // 2)]
        assert poly.coefficient(n // 2, (n - 1) // 2) == 1

    def test_a_count_from_table_row(self):
        assert brute_a_count(7, 3) == 272

    def test_c_count(self):
        assert brute_c_count(4, 1) == 6

    def test_eulerian_count(self):
        assert brute_eulerian(3, 1) == 4

    def test_out_of_range_indices_are_zero(self):
        assert brute_a_count(4, 7) == 0
        assert brute_c_count(4, 9) == 0
        assert brute_eulerian(4, 12) == 0

    def test_cap_is_enforced(self):
        with pytest.raises(EnumerationCapError):
            brute_refined_poly(7, cap=6)
        with pytest.raises(EnumerationCapError):
            brute_a_count(DEFAULT_CAP + 1, 0)

    def test_cap_can_be_raised(self):
        assert brute_refined_poly(7, cap=7).coefficient_sum() == math.factorial(7)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_reverse_alternating_class_is_last_a_entry(self, n):
        count = sum(
            1
            for w in itertools.permutations(range(1, n + 1))
            if is_reverse_alternating(w)
        )
        assert brute_a_count(n, (n - 1) // 2) == count

    @pytest.mark.parametrize("n", range(1, 8))
    def test_filtered_iterators_match_counts(self, n):
        no_odd = list(permutations_no_odd_descents(n))
        assert len(no_odd) == sum(brute_a_count(n, k) for k in range((n - 1) // 2 + 1))
        for word, edes in no_odd:
            stats = descent_stats(word)
            assert stats.odes == 0 and stats.edes == edes
        no_even = list(permutations_no_even_descents(n))
        for word, odes in no_even:
            stats = descent_stats(word)
            assert stats.edes == 0 and stats.odes == odes


class TestInsertions:
    def test_rotate_example(self):
        assert rotate_insert((1, 2, 3), 1) == (3, 4, 1, 2)

    def test_rotate_rejects_bad_cut(self):
        with pytest.raises(ValueError):
            rotate_insert((1, 2, 3), 2)
        with pytest.raises(ValueError):
            rotate_insert((1, 2, 3, 4), 1)

    def test_rotate_round_trip_s5(self):
        for word in itertools.permutations(range(1, 6)):
            for j in (1, 2):
                assert rotate_insert_inverse(rotate_insert(word, j)) == (word, j)

    def test_reflect_round_trip_s6(self):
        for word in itertools.permutations(range(1, 7)):
            for j in (1, 2, 3):
                assert reflect_insert_inverse(reflect_insert(word, j)) == (word, j)

    def test_reflect_worked_example(self):
        theta = (4, 1, 8, 3, 5, 7, 10, 2, 6, 9)
        assert reflect_insert(theta, 1) == (7, 11, 1, 8, 3, 4, 6, 10, 2, 5, 9)
        assert reflect_insert(theta, 2) == (3, 10, 7, 11, 2, 4, 6, 9, 1, 5, 8)
        assert reflect_insert(theta, 4) == (1, 4, 6, 8, 3, 10, 7, 11, 2, 5, 9)

    def test_reflect_images_land_in_predicted_class(self):
        # sources up to S_8, so images live in S_9 at most
        for m in (2, 4, 6, 8):
            for theta, odes in permutations_no_even_descents(m):
                for j in range(1, m // 2 + 1):
                    image = reflect_insert(theta, j)
                    predicted = odes if theta[2 * j - 2] > theta[2 * j - 1] else odes + 1
                    stats = descent_stats(image)
                    assert stats.odes == 0
                    assert stats.edes == predicted

    def test_rotate_images_land_in_predicted_class(self):
        for m in (3, 5, 7):
            for pi, edes in permutations_no_odd_descents(m):
                for j in range(1, (m + 1) // 2):
                    image = rotate_insert(pi, j)
                    predicted = edes if pi[2 * j - 1] > pi[2 * j] else edes + 1
                    stats = descent_stats(image)
                    assert stats.odes == 0
                    assert stats.edes == predicted

    def test_inverse_rejects_appended_images(self):
        with pytest.raises(ValueError):
            rotate_insert_inverse(append_max((2, 1, 3)))
        with pytest.raises(ValueError):
            reflect_insert_inverse(append_max((2, 1, 3, 4)))

    def test_append_max(self):
        assert append_max((2, 1)) == (2, 1, 3)


@given(perm_words())
def test_validate_round_trip(word):
    assert validate_permutation(list(word)) == word
