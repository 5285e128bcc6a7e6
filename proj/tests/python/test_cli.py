"""End-to-end checks of the rimhook executable: exit codes, JSON diagnostics
and the documented examples."""

import json
import os
import subprocess
import unittest

CLI = os.environ.get("RIMHOOK_CLI", "rimhook")
RUNNING = "0 1 2 3\n1 2 2\n1\n"


def run(*args, stdin=""):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=300)


class ExitCodes(unittest.TestCase):
    def test_success(self):
        self.assertEqual(run("validate", stdin=RUNNING).returncode, 0)

    def test_domain_error_is_json(self):
        r = run("validate", "--format", "json", stdin="1 0\n")
        self.assertEqual(r.returncode, 1)
        diag = json.loads(r.stdout)
        self.assertEqual(diag["error"], "domain")
        self.assertIn("(1,2)", diag["message"])

    def test_domain_error_text_goes_to_stderr(self):
        r = run("insert", "--hook", "(3,3)", stdin=RUNNING)
        self.assertEqual(r.returncode, 1)
        self.assertTrue(r.stderr)

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("bogus").returncode, 2)
        self.assertEqual(run("insert", stdin=RUNNING).returncode, 2)
        self.assertEqual(run("verify", "stanley", "--degree", "x").returncode, 2)


class Examples(unittest.TestCase):
    def test_factorize_running_example(self):
        r = run("factorize", "--format", "json", stdin=RUNNING)
        self.assertEqual(r.returncode, 0, r.stderr)
        out = json.loads(r.stdout)
        self.assertEqual(out["factorization"]["anchors"], [[1, 4], [1, 3], [2, 2], [1, 1]])
        self.assertEqual(out["tableau"]["rows"], [[1, 0, 1, 1], [0, 1, 0], [0]])

    def test_build_empty_tableau_is_zero(self):
        r = run("build", "--format", "json", stdin="0 0 0\n0 0\n")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["rows"], [[0, 0, 0], [0, 0]])

    def test_factorize_then_build_round_trip(self):
        t = run("factorize", "--format", "json", stdin=RUNNING)
        tab = json.loads(t.stdout)["tableau"]
        r = run("build", "--format", "json", stdin=json.dumps(tab))
        self.assertEqual(json.loads(r.stdout)["rows"], [[0, 1, 2, 3], [1, 2, 2], [1]])

    def test_rsk_round_trip_through_json(self):
        t = "1 1 2\n0 1 0\n3 0 0\n"
        pair = run("rsk", "--format", "json", stdin=t)
        self.assertEqual(json.loads(pair.stdout)["P"]["rows"], [[1, 1, 1, 1], [2, 2, 3], [3]])
        back = run("rsk-inv", "--shape", "3,3,3", stdin=pair.stdout)
        self.assertEqual(back.stdout, t)
        bare = run("rsk-inv", stdin='{"P": [[1, 2]], "Q": [[1, 2]]}')
        self.assertEqual(bare.returncode, 0, bare.stderr)

    def test_gk_weak_chain(self):
        r = run("gk", "--k", "0", "--r", "1", "--kind", "weak", stdin="1 1 4\n2 3 4\n4 4 4\n")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "15")

    def test_verify_stanley(self):
        r = run("verify", "stanley", "--shape", "4,3,1", "--degree", "10")
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        self.assertTrue(r.stdout.startswith("PASS stanley"))
        self.assertIn("[1,3,7,14,27,47,79,126,196,294,432]", r.stdout)

    def test_verify_unknown_suite(self):
        self.assertEqual(run("verify", "nope").returncode, 2)


if __name__ == "__main__":
    unittest.main()
