import pytest

from qsegre.exactalg import q_factorial
from qsegre.permstats import Permutation, inversions, q_binomial, w_polynomial
from qsegre.poset import (chain_report, check_el_labeling, mobius_number,
                          proper_part, rational_betti_numbers,
                          reduced_euler_characteristic)
from qsegre.subspace import (FiniteField, Subspace, atom_label, atom_vector,
                             build_bnq, build_segre_bnq, edge_label,
                             enumerate_subspaces, field_make, label_set,
                             rref_rows)

import itertools

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)
F5 = field_make(5)


class TestFiniteField:
    def test_prime_field_arithmetic(self):
        assert F3.mul(2, 2) == 1
        assert F3.add(2, 2) == 1
        assert F2.add(1, 1) == 0

    def test_f4_uses_the_unique_quadratic_modulus(self):
        assert F4.modulus == (1, 1, 1)  # x^2 + x + 1
        x = 2  # the residue class of x
        assert F4.mul(x, x) == 3  # x^2 = x + 1

    def test_inverses(self):
        for field in (F2, F3, F4, F5):
            for a in range(1, field.order):
                assert field.mul(a, field.inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            F3.inv(0)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            field_make(4)
        with pytest.raises(ValueError):
            field_make(2, 5)  # 32 > 16

    def test_field_equality_by_construction_data(self):
        assert field_make(3) == field_make(3)
        assert field_make(2, 2) != field_make(2, 1)

    def test_extension_fields_at_the_size_bound(self):
        f9 = field_make(3, 2)
        f16 = field_make(2, 4)
        assert f9.order == 9 and f16.order == 16
        for field in (f9, f16):
            for a in range(1, field.order):
                acc = 1
                for _ in range(field.order - 1):
                    acc = field.mul(acc, a)
                assert acc == 1


class TestSubspace:
    def test_rref_canonicalizes(self):
        rows = rref_rows(F2, 3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
        assert rows == ((1, 0, 1), (0, 1, 1))

    def test_same_span_same_subspace(self):
        a = Subspace.from_vectors(F3, 2, [(1, 2)])
        b = Subspace.from_vectors(F3, 2, [(2, 1)])  # scalar multiple
        assert a == b

    def test_validation_rejects_non_rref(self):
        with pytest.raises(ValueError):
            Subspace(F2, 2, ((1, 1), (0, 1)))  # pivot column not elementary

    def test_containment(self):
        plane = Subspace.from_vectors(F2, 3, [(1, 0, 0), (0, 1, 0)])
        line = Subspace.from_vectors(F2, 3, [(1, 1, 0)])
        other = Subspace.from_vectors(F2, 3, [(0, 0, 1)])
        assert plane.contains(line)
        assert not plane.contains(other)

    def test_span_contains_its_generators(self):
        import random
        rng = random.Random(31337)
        for field in (F2, F3, F4):
            for _ in range(20):
                n = rng.randrange(1, 5)
                vectors = [tuple(rng.randrange(field.order) for _ in range(n))
                           for _ in range(rng.randrange(1, 4))]
                span = Subspace.from_vectors(field, n, vectors)
                assert span.dim <= len(vectors)
                for v in vectors:
                    if any(v):
                        assert span.contains(Subspace.from_vectors(field, n, [v]))


class TestEnumeration:
    def test_rank_sizes_small(self):
        subs = enumerate_subspaces(2, F2)
        by_rank = [sum(1 for s in subs if s.dim == k) for k in range(3)]
        assert by_rank == [1, 3, 1]

    def test_total_count_b4_f2(self):
        assert len(enumerate_subspaces(4, F2)) == 67

    def test_line_case(self):
        for field in (F2, F3, F4, F5):
            assert [s.dim for s in enumerate_subspaces(1, field)] == [0, 1]

    def test_no_duplicates(self):
        subs = enumerate_subspaces(3, F3)
        assert len(subs) == len(set(subs))

    def test_rank_counts_match_gaussian_binomials(self):
        # dual route: the RREF enumeration against the polynomial quotient
        for n in range(1, 5):
            for field in (F2, F3, F4, F5):
                subs = enumerate_subspaces(n, field)
                for k in range(n + 1):
                    expected = q_binomial(n, k).evaluate(field.order)
                    assert sum(1 for s in subs if s.dim == k) == expected

    def test_count_bound_enforced(self):
        with pytest.raises(ValueError):
            enumerate_subspaces(4, F2, count_bound=10)


class TestLabels:
    def test_rightmost_coordinate_examples(self):
        x = Subspace.from_vectors(F3, 3, [(1, 0, 1)])
        y = Subspace.from_vectors(F3, 3, [(2, 1, 0)])
        assert atom_label(x) == 3
        assert atom_label(y) == 2
        assert atom_label(Subspace.from_vectors(F3, 3, [(1, 0, 0)])) == 1

    def test_label_invariant_under_rescaling(self):
        for scale in range(1, 5):
            vec = tuple(F5.mul(scale, v) for v in (0, 3, 2, 0))
            s = Subspace.from_vectors(F5, 4, [vec])
            assert atom_label(s) == 3

    def test_atom_vector_normalizes_rightmost_entry(self):
        s = Subspace.from_vectors(F3, 3, [(1, 0, 2)])
        vec = atom_vector(s)
        assert vec[2] == 1

    def test_atom_operations_reject_higher_dimension(self):
        plane = Subspace.from_vectors(F2, 3, [(1, 0, 0), (0, 1, 0)])
        with pytest.raises(ValueError):
            atom_label(plane)

    def test_label_set_size_equals_dimension(self):
        for s in enumerate_subspaces(3, F2):
            assert len(label_set(s)) == s.dim

    def test_edge_label_example(self):
        diagonal = Subspace.from_vectors(F2, 2, [(1, 1)])
        full = Subspace.from_vectors(F2, 2, [(1, 0), (0, 1)])
        assert edge_label(diagonal, full) == 1
        assert edge_label(Subspace(F2, 2, ()), diagonal) == atom_label(diagonal)

    def test_edge_label_rejects_non_covers(self):
        bottom = Subspace(F2, 3, ())
        full = Subspace.from_vectors(F2, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        with pytest.raises(ValueError):
            edge_label(bottom, full)


class TestLatticeConstruction:
    def test_b2_f2_chain_words(self):
        p, labeling = build_bnq(2, F2)
        report = chain_report(p, labeling)
        assert report.by_label_word == {(1, 2): 1, (2, 1): 2}

    def test_b3_f2_reversed_word_count(self):
        p, labeling = build_bnq(3, F2)
        report = chain_report(p, labeling)
        assert report.by_label_word[(3, 2, 1)] == 8

    def test_b3_f3_total_chains(self):
        p, labeling = build_bnq(3, F3)
        assert chain_report(p, labeling).total == 52

    def test_chain_counts_are_q_to_the_inversions(self):
        for n, field in ((2, F2), (2, F3), (3, F2), (3, F3), (2, F4)):
            p, labeling = build_bnq(n, field)
            report = chain_report(p, labeling)
            expected = {img: field.order ** inversions(Permutation(img))
                        for img in itertools.permutations(range(1, n + 1))}
            assert report.by_label_word == expected
            assert report.total == q_factorial(n).evaluate(field.order)

    def test_el_property_small(self):
        for n, field in ((2, F2), (2, F5), (3, F2), (3, F3)):
            ok, violation = check_el_labeling(*build_bnq(n, field))
            assert ok, violation

    def test_segre_descending_counts(self):
        for n, field, expected in ((2, F2, 8), (2, F3, 15), (3, F2, 344)):
            sp, labeling = build_segre_bnq(n, field)
            assert chain_report(sp, labeling).descending_count == expected
            assert expected == w_polynomial(n).evaluate(field.order)

    def test_segre_rank_sizes_are_squares(self):
        sp22, _ = build_segre_bnq(2, F2)
        assert sp22.rank_sizes() == [1, 9, 1]
        p, _ = build_bnq(2, F3)
        sp, _ = build_segre_bnq(2, F3)
        assert sp.rank_sizes() == [c * c for c in p.rank_sizes()]

    def test_segre_el_property(self):
        ok, violation = check_el_labeling(*build_segre_bnq(2, F2))
        assert ok, violation

    def test_mobius_equals_signed_descending_count(self):
        for n, field in ((2, F2), (2, F3), (3, F2)):
            sp, labeling = build_segre_bnq(n, field)
            descending = chain_report(sp, labeling).descending_count
            assert mobius_number(sp) == (-1) ** n * descending

    def test_mobius_of_the_lattice_itself_has_the_closed_form(self):
        # classical: mu of the full subspace lattice is (-1)^n q^(n(n-1)/2)
        for n, field in ((2, F2), (3, F2), (3, F3), (4, F2), (2, F4)):
            p, _ = build_bnq(n, field)
            q = field.order
            assert mobius_number(p) == (-1) ** n * q ** (n * (n - 1) // 2)

    def test_betti_of_lattice_proper_part_matches_descending_count(self):
        p, labeling = build_bnq(3, F2)
        betti = rational_betti_numbers(proper_part(p))
        assert betti == [0, 8]
        assert chain_report(p, labeling).descending_count == 8

    def test_euler_characteristic_of_proper_part(self):
        sp, _ = build_segre_bnq(3, F2)
        assert reduced_euler_characteristic(proper_part(sp)) == -344

    def test_betti_of_proper_parts(self):
        sp2, _ = build_segre_bnq(2, F2)
        assert rational_betti_numbers(proper_part(sp2)) == [8]
        sp3, _ = build_segre_bnq(3, F2)
        assert rational_betti_numbers(proper_part(sp3)) == [0, 344]
