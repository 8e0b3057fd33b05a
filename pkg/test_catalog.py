"""Tests for built-in codes, QMDS arithmetic and table reproduction."""

import unittest

from catalog import (
    DLB_LABEL,
    TABLES,
    QmdsFamily,
    Rejection,
    builtin,
    example_nine_one,
    load_table,
    qmds_outer_codes,
    qmds_params,
    reproduce_table,
    row_matches,
    rows_dataframe,
    table_rows,
)
from concat import BlockCode
from models import OuterParams
from stabilizer import StabilizerCode


class TestBuiltins(unittest.TestCase):

    def test_five_one_three(self):
        five = builtin("five_one_three")
        self.assertIsInstance(five, BlockCode)
        self.assertEqual([str(g) for g in five.code.generators], ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
        self.assertEqual((five.n_blocks, five.block_size, five.delta), (5, 1, 3))

    def test_four_two_two(self):
        four = builtin("four_two_two")
        self.assertEqual({str(g) for g in four.code.generators}, {"XXXX", "ZZZZ"})
        self.assertEqual(four.code.k, 2)
        self.assertEqual(four.k_qudits, 2)

    def test_eight_three_css(self):
        code = builtin("eight_three_css")
        self.assertIsInstance(code, StabilizerCode)
        self.assertEqual((code.n, code.k), (8, 3))

    def test_qr(self):
        code = builtin("qr:4")
        self.assertEqual((code.n, code.k), (4, 3))

    def test_nine_one_listing(self):
        code = example_nine_one()
        self.assertEqual((code.n, code.k, len(code.generators)), (9, 1, 8))

    def test_unknown(self):
        with self.assertRaises(KeyError):
            builtin("seven_one_three")
        with self.assertRaises(KeyError):
            builtin("qr:x")


class TestQmds(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(qmds_params(4, 3, 8), OuterParams(8, 2, 4, 4))
        self.assertEqual(qmds_params(8, 4, 10), OuterParams(10, 2, 5, 8))

    def test_distance_bound_rejected(self):
        rejection = qmds_params(2, 3, 8)
        self.assertIsInstance(rejection, Rejection)
        self.assertEqual(rejection.bound, "distance")
        self.assertIn("d = 4 > q+1 = 3", str(rejection))

    def test_length_and_dimension_rejected(self):
        self.assertEqual(qmds_params(4, 3, 19).bound, "length")
        self.assertEqual(qmds_params(4, 3, 5).bound, "dimension")

    def test_exception_family(self):
        params = qmds_params(4, 3, 18)
        self.assertEqual(params, OuterParams(18, 12, 4, 4))
        self.assertEqual(QmdsFamily(8).to_dict()["exception"], {"n": 66, "k": 60, "d": 4})

    def test_not_power_of_two(self):
        with self.assertRaises(ValueError):
            qmds_params(6, 2, 7)

    def test_outer_codes_meet_singleton(self):
        outers = qmds_outer_codes(4, 3)
        self.assertEqual([o.n for o in outers], list(range(7, 19)))
        for o in outers:
            self.assertEqual(o.k + 2 * o.delta, o.n + 2)

    def test_outer_codes_respect_length(self):
        outers = qmds_outer_codes(8, 4, n_max=50)
        self.assertTrue(all(4 * o.n - 1 <= 50 for o in outers))
        self.assertEqual(outers[-1].n, 12)


class TestTables(unittest.TestCase):

    def test_spot_rows(self):
        cases = [
            (OuterParams(9, 3, 4, 4), 3, (26, 6, 7, 3)),
            (OuterParams(10, 2, 4, 2), 2, (19, 2, 7, 3)),
            (OuterParams(27, 7, 9, 8), None, (107, 21, 17, 8)),
        ]
        for outer, r, expected in cases:
            with self.subTest(outer=str(outer)):
                (params,) = table_rows([outer], r)
                self.assertEqual((params.n, params.k, params.d_e_bound, params.t), expected)
                self.assertEqual(params.provenance, "arithmetic")

    def test_dimension_mismatch(self):
        with self.assertRaises(ValueError):
            table_rows([OuterParams(27, 7, 9, 8)], 3)

    def test_qmds_source_rejects_non_mds(self):
        with self.assertRaises(ValueError):
            table_rows([OuterParams(10, 2, 4, 2)], source="qmds")

    def test_every_row_reproduced(self):
        counts = {"table1": 36, "table2": 47, "table3": 41}
        for table_id in TABLES:
            with self.subTest(table=table_id):
                pairs = reproduce_table(table_id)
                self.assertEqual(len(pairs), counts[table_id])
                for row, params in pairs:
                    self.assertTrue(row_matches(row, params), f"{row} vs {params}")

    def test_every_row_beats_reference(self):
        for table_id in TABLES:
            frame = rows_dataframe(reproduce_table(table_id))
            self.assertIn(DLB_LABEL, frame.columns)
            self.assertTrue(frame["beats_dlb"].all())
            self.assertTrue(frame["matches"].all())

    def test_unknown_table(self):
        with self.assertRaises(ValueError):
            load_table("table4")


if __name__ == "__main__":
    unittest.main()
