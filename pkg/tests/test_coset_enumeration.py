"""Coset enumeration: orders, subgroup indices, statuses, realizations."""

import pytest

from paulikit.catalog import (
    cyclic_group,
    dihedral_group,
    pauli_matrix_group,
    quaternion_group,
)
from paulikit.coset_enumeration import (
    BOUND_EXCEEDED,
    COMPLETE,
    CosetTable,
    Incomplete,
    group_from_coset_table,
    presentation_order_audit,
    todd_coxeter,
)
from paulikit.groups import is_isomorphic
from paulikit.presentations import Presentation, Word, bundled_presentation, parse_presentation

W = Word.from_text


def _trace(table: CosetTable, pres: Presentation, coset: int, word: Word) -> int:
    gen_index = {g: i for i, g in enumerate(pres.generators)}
    c = coset
    for name, exp in word.letters:
        col = 2 * gen_index[name] + (0 if exp > 0 else 1)
        c = table.rows[c][col]
    return c


class TestBundledOrders:
    @pytest.mark.parametrize(
        "name,expected",
        [("z4", 4), ("q8", 8), ("d8", 8), ("pauli_uxy", 16), ("seifquo", 16)],
    )
    def test_complete_with_expected_count(self, name, expected):
        table = todd_coxeter(bundled_presentation(name), coset_bound=1000)
        assert table.status == COMPLETE
        assert table.coset_count == expected

    def test_free_product_exceeds_bound(self):
        table = todd_coxeter(bundled_presentation("q8_free_z4"), coset_bound=1000)
        assert table.status == BOUND_EXCEEDED
        assert table.rows is None
        assert table.coset_count == 1000


class TestTableProperties:
    def test_generator_actions_are_permutations_and_relators_trace_trivially(self):
        pres = bundled_presentation("seifquo")
        table = todd_coxeter(pres, coset_bound=1000)
        n = table.coset_count
        for gi in range(len(pres.generators)):
            perm = table.action(gi)
            assert sorted(perm) == list(range(n))
        for rel in pres.relators:
            for c in range(n):
                assert _trace(table, pres, c, rel) == c

    def test_inverse_columns_are_inverse_permutations(self):
        pres = bundled_presentation("q8")
        table = todd_coxeter(pres, coset_bound=100)
        for gi in range(len(pres.generators)):
            fwd = [row[2 * gi] for row in table.rows]
            bwd = [row[2 * gi + 1] for row in table.rows]
            for c, image in enumerate(fwd):
                assert bwd[image] == c

    def test_determinism(self):
        pres = bundled_presentation("pauli_uxy")
        t1 = todd_coxeter(pres, coset_bound=500)
        t2 = todd_coxeter(pres, coset_bound=500)
        assert t1.rows == t2.rows


class TestSubgroupEnumeration:
    def test_index_of_cyclic_subgroup_in_s3(self):
        s3 = parse_presentation("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b a b")
        table = todd_coxeter(s3, subgroup_generators=[W("a")], coset_bound=100)
        assert table.coset_count == 3

    def test_whole_group_subgroup_gives_one_coset(self):
        pres = bundled_presentation("z4")
        table = todd_coxeter(pres, subgroup_generators=[W("y")], coset_bound=100)
        assert table.coset_count == 1

    def test_unknown_subgroup_generator(self):
        with pytest.raises(ValueError):
            todd_coxeter(bundled_presentation("z4"), subgroup_generators=[W("u")])


class TestHardCases:
    def test_total_collapse_to_trivial_group(self):
        pres = parse_presentation(
            "gens: a b\nrel: b^-1 a b a^-2\nrel: a^-1 b a b^-2"
        )
        table = todd_coxeter(pres, coset_bound=5000)
        assert table.status == COMPLETE
        assert table.coset_count == 1

    def test_large_coxeter_group(self):
        pres = parse_presentation(
            "gens: a b c d\n"
            "rel: a^2\nrel: b^2\nrel: c^2\nrel: d^2\n"
            "rel: a c a c\nrel: a d a d\nrel: b d b d\n"
            "rel: a b a b a b\nrel: b c b c b c b c\nrel: c d c d c d\n"
        )
        table = todd_coxeter(pres, coset_bound=20000)
        assert table.coset_count == 1152

    def test_generator_missing_from_relators_means_infinite(self):
        pres = parse_presentation("gens: a b\nrel: a^2")
        table = todd_coxeter(pres, coset_bound=500)
        assert table.status == BOUND_EXCEEDED

    def test_bound_one_detects_trivial_group(self):
        pres = parse_presentation("gens: a\nrel: a")
        assert todd_coxeter(pres, coset_bound=1).coset_count == 1


class TestRealization:
    @pytest.mark.parametrize(
        "name,reference",
        [
            ("z4", cyclic_group(4)),
            ("q8", quaternion_group()),
            ("d8", dihedral_group()),
            ("pauli_uxy", pauli_matrix_group()),
            ("seifquo", pauli_matrix_group()),
        ],
    )
    def test_coset_groups_match_concrete_models(self, name, reference):
        table = todd_coxeter(bundled_presentation(name), coset_bound=1000)
        realized = group_from_coset_table(table)
        assert realized.order == table.coset_count
        ok, witness = is_isomorphic(realized, reference)
        assert ok
        assert witness is not None

    def test_incomplete_table_rejected(self):
        table = todd_coxeter(bundled_presentation("q8_free_z4"), coset_bound=200)
        with pytest.raises(Incomplete):
            group_from_coset_table(table)

    def test_nontrivial_subgroup_rejected(self):
        s3 = parse_presentation("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b a b")
        table = todd_coxeter(s3, subgroup_generators=[W("a")], coset_bound=100)
        with pytest.raises(Incomplete):
            group_from_coset_table(table)


class TestAudit:
    def test_small_cyclic_audit_completes(self):
        audit = presentation_order_audit(bundled_presentation("z4"), [10])
        assert audit.completed
        assert audit.completed_order == 4

    def test_divisor_reporting(self):
        audit = presentation_order_audit(
            bundled_presentation("seifquo"), [100], expected_divisor=16
        )
        assert audit.completed_order == 16
        assert audit.divisor_ok is True

    def test_three_involution_presentation_trajectory(self):
        audit = presentation_order_audit(
            bundled_presentation("pauli_xyz"), [100, 1000, 10000],
            expected_divisor=16,
        )
        assert not audit.completed
        assert [e.status for e in audit.entries] == [BOUND_EXCEEDED] * 3
        assert [e.bound for e in audit.entries] == [100, 1000, 10000]
        assert audit.divisor_ok is None

    def test_audit_stops_at_first_completion(self):
        audit = presentation_order_audit(bundled_presentation("z4"), [10, 100])
        assert len(audit.entries) == 1
