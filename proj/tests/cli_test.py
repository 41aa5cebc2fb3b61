# Copyright 2026 The fuchs Authors
# SPDX-License-Identifier: Apache-2.0

"""End-to-end tests of the fuchs command: exit codes, text output, and
--json output checked against docs/schemas."""

import json
import os
import pathlib
import subprocess
import sys
import unittest

import jsonschema

FUCHS = os.environ["FUCHS_CLI"]
SCHEMAS = pathlib.Path(os.environ["FUCHS_SCHEMAS"])


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("FUCHS_MAX_RING_ORDER", None)
    if env:
        full_env.update(env)
    return subprocess.run([FUCHS, *args], capture_output=True, text=True, env=full_env, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


class ExitCodes(unittest.TestCase):
    def check(self, args, code, env=None):
        r = run(*args, env=env)
        self.assertEqual(r.returncode, code, f"{args}: stdout={r.stdout!r} stderr={r.stderr!r}")
        return r

    def test_realizable(self):
        out = self.check(["realizable", "C256"], 0).stdout
        self.assertIn("witness: F257", out)
        self.check(["realizable", "C128"], 1)
        out = self.check(["realizable", "C2^inf"], 1).stdout
        self.assertIn("quasi-cyclic", out)
        self.check(["realizable", "C8", "--char", "3"], 0)
        self.check(["realizable", "C8", "--char", "4"], 1)
        self.check(["realizable", "Z^2"], 0)

    def test_input_errors(self):
        self.check(["realizable", "D4"], 2)
        self.check(["realizable", "C6^inf"], 2)
        self.check(["realizable", "C6"], 2)
        self.check(["units", "GF(6)"], 2)
        self.check(["units", "Z4[x]/(x^2-2"], 2)
        self.check(["verify", "nope"], 2)
        self.check(["frobnicate"], 2)
        self.check([], 2)
        self.check(["units"], 2)
        self.check(["realizable", "C8", "--char", "x"], 2)
        self.check(["units", "F2"], 2, env={"FUCHS_MAX_RING_ORDER": "abc"})

    def test_units(self):
        self.assertIn("structure: C_4", self.check(["units", "F2[x]/(x^3)"], 0).stdout)
        self.assertIn("structure: C_4", self.check(["units", "Z4[x]/(x^2-2,2x)"], 0).stdout)
        self.assertIn("structure: C_2 x C_4", self.check(["units", "F2[x]/(x^4)"], 0).stdout)
        self.assertIn("structure: C_4", self.check(["units", "char=4; orders=4,2; top=2,0"], 0).stdout)
        self.assertIn("structure: C_2", self.check(["units", "char=4; orders=4; table="], 0).stdout)
        self.check(["units", "char=4; orders=3; top=0"], 2)

    def test_size_limit(self):
        r = self.check(["units", "F2[x]/(x^8)"], 3, env={"FUCHS_MAX_RING_ORDER": "100"})
        self.assertIn("size-limit", r.stderr)
        self.check(["units", "GF(1073741824)"], 3)
        self.check(["units", "F2[x]/(x^8)"], 0, env={"FUCHS_MAX_RING_ORDER": "256"})

    def test_witness(self):
        self.assertIn("Z4[x]/(x^2-2,2x)", self.check(["witness", "C4", "--char", "4"], 0).stdout)
        self.check(["witness", "C128"], 1)
        self.check(["witness", "C3", "--char", "4"], 1)
        self.assertIn("verified: yes", self.check(["witness", "C8"], 0).stdout)

    def test_verify(self):
        out = self.check(["verify", "char4", "--order-bound", "16"], 0).stdout
        self.assertIn("verified up to order 16", out)
        self.check(["verify", "lemmas"], 0)

    def test_numtheory_and_factor(self):
        self.assertIn("257: yes", self.check(["numtheory", "is-prime", "257"], 0).stdout)
        self.assertIn("phi(9) = 6", self.check(["numtheory", "phi", "9"], 0).stdout)
        self.assertIn("3^2 - 1 = 2^3", self.check(["numtheory", "power-equation", "3"], 0).stdout)
        self.assertIn("multiplicity 8", self.check(["factor", "1 + x^8 (mod 2)"], 0).stdout)
        self.check(["factor", "x^2+1"], 2)

    def test_help_documents_notation(self):
        r = self.check(["--help"], 0)
        self.assertIn("C2^inf", r.stdout)
        self.assertIn("FUCHS_MAX_RING_ORDER", r.stdout)


class JsonSchemas(unittest.TestCase):
    def validate(self, name, args, codes=(0,)):
        r = run(*args, "--json")
        self.assertIn(r.returncode, codes, f"{args}: {r.stderr}")
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema(name))
        return doc

    def test_verdicts(self):
        for args in (["C256"], ["C128"], ["C2^inf"], ["C8", "--char", "6"], ["C4", "--char", "0"], ["Z[1/2]"],
                     ["C1"], ["C7", "--char", "4"]):
            self.validate("verdict", ["realizable", *args], codes=(0, 1))
        doc = self.validate("verdict", ["realizable", "C8", "--char", "3"])
        self.assertEqual(doc["witness"], "F9")
        self.assertEqual(doc["char"], 3)

    def test_witnesses(self):
        for args in (["C4", "--char", "4"], ["C8", "--char", "6"], ["C2", "--char", "0"], ["Z^2"], ["C31"]):
            self.validate("witness", ["witness", *args])

    def test_units(self):
        for ring in ("F2[x]/(x^3)", "Z4[x]/(x^2-2,2x)", "F9 x F2", "Z6", "F2", "Z4[x]/(x^2+x+1)"):
            self.validate("units", ["units", ring])

    def test_reports(self):
        doc = self.validate("report", ["verify", "all", "--trials", "300", "--order-bound", "8"])
        self.assertTrue(doc["passed"])
        self.assertGreaterEqual(len(doc["reports"]), 9)
        self.validate("report", ["verify", "char4", "--order-bound", "12"])

    def test_census_lines(self):
        r = run("enumerate", "--order-bound", "9", "--json")
        self.assertEqual(r.returncode, 0)
        lines = r.stdout.splitlines()
        self.assertGreater(len(lines), 10)
        for line in lines:
            jsonschema.validate(json.loads(line), schema("census_entry"))

    def test_factor(self):
        self.validate("factor", ["factor", "1 + x^8 (mod 2)"])
        self.validate("factor", ["factor", "x^7 - 1", "--mod", "2"])

    def test_numtheory(self):
        for args in (["is-prime", "7"], ["mersenne", "2047"], ["fermat", "257"], ["cyclic-units", "18"],
                     ["phi", "100"], ["power-equation", "2", "--m-bound", "20"]):
            self.validate("numtheory", ["numtheory", *args])


class Determinism(unittest.TestCase):
    def test_workers_do_not_change_json(self):
        for args in (["verify", "census", "--order-bound", "12"], ["enumerate", "--order-bound", "12"],
                     ["units", "F2[x]/(x^8-1)"]):
            a = run(*args, "--json", "--workers", "1")
            b = run(*args, "--json", "--workers", "3")
            self.assertEqual(a.returncode, 0)
            self.assertEqual(a.stdout, b.stdout, args)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
