"""Smoke tests of the Python module."""

import unittest

import rimhook

RUNNING = [[0, 1, 2, 3], [1, 2, 2], [1]]
PAK = [[1, 1, 4], [2, 3, 4], [4, 4, 4]]


class Module(unittest.TestCase):
    def test_factorize_and_build(self):
        f = rimhook.factorize(RUNNING)
        self.assertEqual(f["anchors"], [(1, 4), (1, 3), (2, 2), (1, 1)])
        self.assertEqual(rimhook.build(f["tableau"]), RUNNING)
        self.assertEqual(rimhook.build([[0, 0], [0]]), [[0, 0], [0]])

    def test_candidates_and_insert(self):
        self.assertEqual(rimhook.candidates(RUNNING), [(1, 4), (1, 2), (2, 2), (3, 1)])
        pi = [[0, 0, 0], [0, 0, 0], [1, 1, 1]]
        r = rimhook.insert(pi, (2, 2))
        self.assertTrue(r["ok"])
        self.assertEqual(r["path"], [(2, 3), (2, 2), (2, 1)])
        self.assertEqual(r["result"], [[0, 0, 0], [1, 1, 1], [1, 1, 1]])
        bad = rimhook.insert([[0], [1]], (1, 1))
        self.assertFalse(bad["ok"])
        self.assertEqual(bad["witness"], (2, 1))

    def test_xi_hg_rsk(self):
        t = rimhook.xi(PAK)
        self.assertEqual(t, [[1, 1, 2], [0, 1, 0], [3, 0, 0]])
        self.assertEqual(rimhook.build(t), PAK)
        self.assertEqual(rimhook.hg_inv(rimhook.hg(PAK)), PAK)
        p, q = rimhook.rsk(t)
        self.assertEqual(p, [[1, 1, 1, 1], [2, 2, 3], [3]])
        self.assertEqual(q, [[1, 1, 1, 1], [2, 3, 3], [3]])
        self.assertEqual(rimhook.rsk_inv(p, q, shape=[3, 3, 3]), t)

    def test_series(self):
        self.assertEqual(rimhook.hook_product([2, 2], 4), [1, 1, 3, 4, 7])
        self.assertEqual(rimhook.rpp_series([3, 2], 6), rimhook.hook_product([3, 2], 6))
        self.assertEqual(rimhook.trace_series([2, 2], 3), rimhook.gansner_product([2, 2], 3))
        # exceeds 64 bits
        self.assertEqual(rimhook.hook_product([1000], 1000)[1000], 24061467864032622473692149727991)

    def test_errors(self):
        with self.assertRaises(rimhook.DomainError):
            rimhook.factorize([[1, 0]])
        with self.assertRaises(ValueError):
            rimhook.zeta(RUNNING, (1, 3))

    def test_verify(self):
        self.assertIn("stanley", rimhook.suite_names())
        r = rimhook.verify("syt", jobs=2)
        self.assertTrue(r["passed"], r["failures"])
        self.assertGreater(r["checks"], 0)


if __name__ == "__main__":
    unittest.main()
