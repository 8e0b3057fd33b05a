"""Tests for the exact distance engines."""

import os
import random
import unittest
from unittest.mock import patch

from catalog import builtin, example_nine_one
from concat import make_qr
from distance import css_distances, min_distance, shell_size
from models import CodeValidationError, SearchLimitError
from pauli import effective_weight, hamming_weight, product
from stabilizer import from_strings, is_detectable


def _code(name):
    loaded = builtin(name)
    return getattr(loaded, "code", loaded)


class TestKnownDistances(unittest.TestCase):

    def test_five_qubit_code(self):
        report = min_distance(_code("five_one_three"), "hamming")
        self.assertEqual(report.value, 3)
        self.assertEqual(report.method, "centralizer_enumeration")

    def test_four_two_two(self):
        self.assertEqual(min_distance(_code("four_two_two"), "hamming").value, 2)

    def test_qr_effective_distance_is_two(self):
        for r in range(2, 7):
            with self.subTest(r=r):
                report = min_distance(make_qr(r), "effective")
                self.assertEqual(report.value, 2)
                self.assertEqual(str(report.witness), "I" * (r - 1) + "Z")

    def test_q5_hamming_distance_is_one(self):
        self.assertEqual(min_distance(make_qr(5), "hamming").value, 1)

    def test_eight_three_css(self):
        code = _code("eight_three_css")
        self.assertEqual(min_distance(code, "effective").value, 4)
        x_report, z_report = css_distances(code)
        self.assertEqual((x_report.value, z_report.value), (4, 2))
        self.assertEqual(set(str(x_report.witness)) - {"I"}, {"X"})
        self.assertEqual(set(str(z_report.witness)) - {"I"}, {"Z"})

    def test_nine_one_effective_distance(self):
        self.assertEqual(min_distance(example_nine_one(), "effective").value, 5)

    def test_block_metric(self):
        five = builtin("five_one_three")
        report = min_distance(five.code, "block", block_widths=[1] * 5)
        self.assertEqual(report.value, 3)


class TestStrategiesAgree(unittest.TestCase):
    """Centralizer and weight-ordered enumeration report the same value and witness."""

    def _codes(self):
        codes = [_code(name) for name in ("five_one_three", "four_two_two", "eight_three_css")]
        codes += [make_qr(r) for r in range(2, 8)]
        codes.append(example_nine_one())
        return [c for c in codes if c.n + c.k <= 14]

    def test_reports_match(self):
        for code in self._codes():
            for metric in ("hamming", "effective"):
                with self.subTest(code=code.describe(), metric=metric):
                    a = min_distance(code, metric, strategy="centralizer")
                    b = min_distance(code, metric, strategy="weight")
                    self.assertEqual((a.value, a.witness), (b.value, b.witness))

    def test_type_restricted_reports_match(self):
        code = _code("eight_three_css")
        for pauli_type in ("X", "Z"):
            a = min_distance(code, "hamming", strategy="centralizer", pauli_type=pauli_type)
            b = min_distance(code, "hamming", strategy="weight", pauli_type=pauli_type)
            self.assertEqual((a.value, a.witness), (b.value, b.witness))

    def test_thread_count_does_not_change_result(self):
        code = make_qr(12)
        one = min_distance(code, "hamming", strategy="centralizer", cap=30, threads=1)
        four = min_distance(code, "hamming", strategy="centralizer", cap=30, threads=4)
        self.assertEqual(one, four)
        self.assertEqual(str(one.witness), "I" * 11 + "Z")


class TestWitness(unittest.TestCase):

    def test_witness_is_undetectable_with_reported_weight(self):
        code = example_nine_one()
        report = min_distance(code, "effective")
        self.assertFalse(is_detectable(code, report.witness))
        self.assertEqual(effective_weight(report.witness), report.value)

    def test_stabilizer_multiples_never_lighter(self):
        code = example_nine_one()
        report = min_distance(code, "effective")
        rng = random.Random(5)
        for _ in range(200):
            chosen = [g for g in code.generators if rng.random() < 0.5]
            multiple = product(chosen + [report.witness], code.n)
            self.assertGreaterEqual(effective_weight(multiple), report.value)
            self.assertFalse(is_detectable(code, multiple))

    def test_hamming_witness_weight(self):
        report = min_distance(_code("five_one_three"), "hamming", strategy="weight")
        self.assertEqual(hamming_weight(report.witness), 3)


class TestBudgetAndLimits(unittest.TestCase):

    def test_budget_exceeded(self):
        code = example_nine_one()
        for strategy in ("centralizer", "weight"):
            with self.subTest(strategy=strategy):
                report = min_distance(code, "effective", budget=4, strategy=strategy)
                self.assertTrue(report.exceeds_budget)
                self.assertIsNone(report.value)
                self.assertIsNone(report.witness)
                self.assertEqual(report.to_dict()["budget"], 4)

    def test_budget_reached(self):
        report = min_distance(example_nine_one(), "effective", budget=5, strategy="weight")
        self.assertEqual(report.value, 5)
        self.assertFalse(report.exceeds_budget)

    def test_zero_logical_qubits(self):
        with self.assertRaises(CodeValidationError):
            min_distance(from_strings(["ZZ", "XX"]), "hamming")

    def test_shell_limit(self):
        with patch.dict(os.environ, {"ADCODES_SHELL_LIMIT": "10"}):
            with self.assertRaises(SearchLimitError):
                min_distance(_code("five_one_three"), "hamming", strategy="weight")

    def test_block_metric_needs_enumeration(self):
        code = _code("five_one_three")
        with self.assertRaises(SearchLimitError):
            min_distance(code, "block", cap=3, block_widths=[1] * 5)
        with self.assertRaises(ValueError):
            min_distance(code, "block", strategy="weight", block_widths=[1] * 5)
        with self.assertRaises(ValueError):
            min_distance(code, "block", block_widths=[2, 2])

    def test_unknown_metric(self):
        with self.assertRaises(ValueError):
            min_distance(make_qr(2), "manhattan")

    def test_shell_sizes(self):
        self.assertEqual(shell_size(2, 3, "effective"), 15)
        self.assertEqual(shell_size(1, 3, "hamming"), 9)
        self.assertEqual(sum(shell_size(w, 4, "hamming") for w in range(1, 5)), 4 ** 4 - 1)
        self.assertEqual(sum(shell_size(w, 4, "effective") for w in range(1, 9)), 4 ** 4 - 1)


if __name__ == "__main__":
    unittest.main()
