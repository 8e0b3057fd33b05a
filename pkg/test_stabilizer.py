"""Tests for stabilizer code validation, logical completion and error detection."""

import functools
import unittest

from ad_errors import gen_A1
from catalog import builtin, example_nine_one
from models import CodeValidationError
from pauli import PauliString, commutes, multiply, parse_pauli
from stabilizer import (
    StabilizerCode,
    compute_logicals,
    detects_set,
    from_strings,
    in_stabilizer,
    is_detectable,
    same_stabilizer,
    undetectable_keys,
    validate,
)

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]


class TestValidate(unittest.TestCase):

    def test_anticommuting_pair_named(self):
        with self.assertRaises(CodeValidationError) as ctx:
            validate(from_strings(["XI", "ZI"]))
        self.assertEqual(ctx.exception.indices, (0, 1))

    def test_dependent_generators(self):
        with self.assertRaises(CodeValidationError):
            validate(from_strings(["ZZI", "IZZ", "ZIZ"]))

    def test_wrong_length(self):
        with self.assertRaises(CodeValidationError) as ctx:
            validate(StabilizerCode(3, (parse_pauli("ZZ"),)))
        self.assertEqual(ctx.exception.indices, (0,))

    def test_broken_logical_pairing(self):
        code = from_strings(["ZZ"]).with_logicals([parse_pauli("XX")], [parse_pauli("XX")])
        with self.assertRaises(CodeValidationError):
            validate(code)

    def test_k(self):
        self.assertEqual(validate(from_strings(FIVE_QUBIT)).k, 1)


class TestLogicals(unittest.TestCase):

    def test_completion_pairs_correctly(self):
        code = compute_logicals(from_strings(FIVE_QUBIT))
        (lx,), (lz,) = code.logical_x, code.logical_z
        self.assertFalse(commutes(lx, lz))
        for g in code.generators:
            self.assertTrue(commutes(lx, g))
            self.assertTrue(commutes(lz, g))
        self.assertFalse(in_stabilizer(code, lx))

    def test_completion_ignores_generator_order(self):
        forward = compute_logicals(from_strings(FIVE_QUBIT))
        backward = compute_logicals(from_strings(list(reversed(FIVE_QUBIT))))
        self.assertEqual(forward.logical_x, backward.logical_x)
        self.assertEqual(forward.logical_z, backward.logical_z)

    def test_multiple_pairs(self):
        code = compute_logicals(builtin("eight_three_css"))
        self.assertEqual(len(code.logical_x), 3)
        validate(code)

    def test_trivial_code_gets_single_qubit_logicals(self):
        code = compute_logicals(StabilizerCode(3, ()))
        self.assertEqual([str(p) for p in code.logical_x], ["XII", "IXI", "IIX"])
        self.assertEqual([str(p) for p in code.logical_z], ["ZII", "IZI", "IIZ"])


class TestDetection(unittest.TestCase):

    def setUp(self):
        self.q3 = builtin("qr:3")

    def test_membership(self):
        code = from_strings(FIVE_QUBIT)
        self.assertTrue(in_stabilizer(code, parse_pauli("XZZXI") * parse_pauli("IXZZX")))
        self.assertTrue(in_stabilizer(code, PauliString.identity(5)))
        self.assertFalse(in_stabilizer(code, parse_pauli("XXXXX")))

    def test_single_z_undetectable_in_q3(self):
        self.assertFalse(is_detectable(self.q3, parse_pauli("ZII")))
        self.assertTrue(is_detectable(self.q3, parse_pauli("XII")))
        self.assertTrue(is_detectable(self.q3, parse_pauli("ZZZ")))

    def test_smallest_failure_reported(self):
        self.assertEqual(str(detects_set(self.q3, gen_A1(3))), "IIZ")

    def test_every_stabilizer_element_is_detectable(self):
        codes = [builtin("five_one_three").code, builtin("four_two_two").code, builtin("eight_three_css"),
                 builtin("qr:3"), example_nine_one()]
        for code in codes:
            with self.subTest(code=code.describe()):
                for mask in range(1 << len(code.generators)):
                    chosen = [g for i, g in enumerate(code.generators) if mask >> i & 1]
                    element = functools.reduce(multiply, chosen, PauliString.identity(code.n))
                    self.assertTrue(in_stabilizer(code, element))
                    self.assertTrue(is_detectable(code, element))

    def test_detects_set_passes(self):
        self.assertIsNone(detects_set(from_strings(FIVE_QUBIT), gen_A1(5)))

    def test_undetectable_keys_sorted(self):
        keys = [p.key for p in gen_A1(3)]
        failing = undetectable_keys(self.q3, keys).tolist()
        self.assertEqual(failing, sorted(failing))
        for key in failing:
            self.assertFalse(is_detectable(self.q3, PauliString.from_key(3, key)))

    def test_same_stabilizer(self):
        a = from_strings(FIVE_QUBIT)
        b = from_strings(["XZZXI", "IXZZX", "XIXZZ", "YYZIZ"])  # last row = first * fourth
        self.assertTrue(same_stabilizer(a, b))
        self.assertFalse(same_stabilizer(a, from_strings(["ZZIII", "IZZII", "IIZZI", "IIIZZ"])))


if __name__ == "__main__":
    unittest.main()
