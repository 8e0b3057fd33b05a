"""Tests for the code, error set and parameter file formats."""

import os
import stat
import tempfile
import unittest

from ad_errors import gen_A1
from catalog import builtin
from code_files import (
    formatCode,
    formatErrorSet,
    loadCodeFile,
    parseCodeText,
    parseErrorSetText,
    parseParamsText,
    saveCodeFile,
)
from concat import BlockCode, make_qr
from models import CodeFormatError, CodeValidationError


class TestCodeFormat(unittest.TestCase):

    def test_block_code_round_trip(self):
        five = builtin("five_one_three")
        parsed = parseCodeText(formatCode(five))
        self.assertIsInstance(parsed, BlockCode)
        self.assertEqual(parsed, five)

    def test_logicals_and_name_survive(self):
        q3 = make_qr(3)
        parsed = parseCodeText(formatCode(q3))
        self.assertEqual(parsed.logical_x, q3.logical_x)
        self.assertEqual(parsed.logical_z, q3.logical_z)
        self.assertEqual(parsed.name, "Q_3")

    def test_output_is_deterministic(self):
        text = formatCode(make_qr(3))
        self.assertEqual(text, formatCode(parseCodeText(text)))
        self.assertTrue(text.splitlines()[1].startswith("code n=3 k=2"))

    def test_comments_skipped(self):
        code = parseCodeText("# a comment\n\ncode n=2 k=1\n# between\nZZ\n")
        self.assertEqual([str(g) for g in code.generators], ["ZZ"])
        self.assertEqual(code.comments, ("a comment", "between"))

    def test_bad_symbol_has_line_number(self):
        with self.assertRaises(CodeFormatError) as ctx:
            parseCodeText("code n=2 k=1\nZQ\n")
        self.assertEqual(ctx.exception.line, 2)

    def test_wrong_length_line(self):
        with self.assertRaises(CodeFormatError) as ctx:
            parseCodeText("code n=3 k=2\nZZ\n")
        self.assertEqual(ctx.exception.line, 2)

    def test_missing_header(self):
        with self.assertRaises(CodeFormatError):
            parseCodeText("ZZ\n")
        with self.assertRaises(CodeFormatError):
            parseCodeText("# only comments\n")

    def test_header_k_mismatch(self):
        with self.assertRaises(CodeValidationError):
            parseCodeText("code n=3 k=1\nZZI\n")

    def test_anticommuting_generators(self):
        with self.assertRaises(CodeValidationError):
            parseCodeText("code n=2 k=0\nXI\nZI\n")

    def test_bad_logical_line(self):
        with self.assertRaises(CodeFormatError) as ctx:
            parseCodeText("code n=2 k=1\nZZ\nlogicals\nY: XX\n")
        self.assertEqual(ctx.exception.line, 4)

    def test_block_structure_mismatch(self):
        with self.assertRaises(CodeFormatError):
            parseCodeText("code n=2 k=1 blocks=3 blocksize=1 delta=1\nZZ\n")

    def test_partial_qudit_dimension(self):
        with self.assertRaises(CodeFormatError) as ctx:
            parseCodeText("code n=4 k=1 blocks=2 blocksize=2 delta=2\nZZII\nIIZZ\nXXXX\n")
        self.assertEqual(ctx.exception.line, 1)

    def test_save_and_load(self):
        code = builtin("eight_three_css")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "css.stab")
            saveCodeFile(path, code)
            self.assertEqual(loadCodeFile(path), code)
            self.assertEqual(os.listdir(tmp), ["css.stab"])

    @unittest.skipIf(os.name != "posix", "file modes are POSIX-only")
    def test_saved_file_follows_umask(self):
        previous = os.umask(0o027)
        try:
            with tempfile.TemporaryDirectory() as tmp:
                path = os.path.join(tmp, "css.stab")
                saveCodeFile(path, builtin("eight_three_css"))
                self.assertEqual(stat.S_IMODE(os.stat(path).st_mode), 0o640)
        finally:
            os.umask(previous)

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            loadCodeFile("/nonexistent/code.stab")


class TestErrorSetFormat(unittest.TestCase):

    def test_round_trip(self):
        errors = gen_A1(3)
        text = formatErrorSet(errors)
        self.assertTrue(text.startswith("errorset n=3 label=A^1(3)\n"))
        parsed = parseErrorSetText(text)
        self.assertEqual(parsed.keys, errors.keys)
        self.assertEqual(parsed.label, "A^1(3)")

    def test_missing_header(self):
        with self.assertRaises(CodeFormatError):
            parseErrorSetText("XI\n")


class TestParamsFormat(unittest.TestCase):

    def test_full_and_bare_rows(self):
        rows, outers = parseParamsText("# header\n3 9 3 4 4 -> 26 6 7 6\n10 2 4 2\n", "table1")
        self.assertEqual(len(rows), 1)
        self.assertEqual((rows[0].t, rows[0].n, rows[0].k, rows[0].d_e, rows[0].d_lb), (3, 26, 6, 7, 6))
        self.assertEqual(rows[0].table, "table1")
        self.assertEqual([str(o) for o in outers], ["(9,3,4)_4", "(10,2,4)_2"])

    def test_bad_rows(self):
        with self.assertRaises(CodeFormatError) as ctx:
            parseParamsText("3 9 3 4 4 -> 26 6 7\n")
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(CodeFormatError):
            parseParamsText("10 2 4 3\n")
        with self.assertRaises(CodeFormatError):
            parseParamsText("10 two 4 2\n")


if __name__ == "__main__":
    unittest.main()
