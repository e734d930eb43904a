"""Smoke tests for the python bindings."""

import tdual


def test_smith_normal_form_contract():
    u, d, v = tdual.smith_normal_form([[2, 4], [2, 2]])
    assert d[0][0] == 2 and d[1][1] == 2
    assert d[0][1] == 0 and d[1][0] == 0
    # d = u * m * v
    m = [[2, 4], [2, 2]]

    def mul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))
        ]

    assert mul(mul(u, m), v) == d


def test_klein_bottle_cohomology():
    kb = tdual.catalog("klein_bottle")
    groups = [str(g) for g in tdual.cohomology(kb)]
    assert groups == ["Z", "Z", "Z/2"]
    twisted = [str(g) for g in tdual.cohomology(kb, [1, 0, 1])]
    assert twisted == ["0", "Z + Z/2", "Z"]


def test_twisted_circle_matrix():
    s1 = tdual.catalog("s1")
    assert tdual.twisted_coboundary(s1, [1], 0) == [[2]]


def test_kr_table_of_the_dual_pair():
    t2 = tdual.catalog("t2")
    table = tdual.kr(t2, [1, 0, 1])
    assert table["KR0"] == "Z + Z/2"
    assert table["KR1"] == "Z^2"
    assert table["KR2"] == "Z"
    assert table["KR3"] == "Z/2"
    assert table["periodicity"] == 4

    kb = tdual.catalog("klein_bottle")
    table = tdual.kr(kb, [1, 0, 1])
    assert table["KR0"] == "Z^2"
    assert table["KR1"] == "Z"
    assert table["KR2"] == "Z/2"
    assert table["KR3"] == "Z + Z/2"


def test_axiom_suite():
    report = tdual.run_axioms(seed=3, count=30)
    assert report["all_pass"]
    assert report["instances"] == 30
    broken = tdual.run_axioms(seed=3, count=12, corrupt=True)
    assert not broken["all_pass"]


def test_invariant_cohomology_dims():
    dims = [tdual.invariant_twisted_cohomology(2, 0, 1, 0, i) for i in range(4)]
    assert dims == [1, 2, 1, 0]


def test_document_commands():
    doc = "twist e on catalog:s1 { e=1 }\n"
    code, out = tdual.doc_kr(doc, "catalog:s1", "e")
    assert code == 0
    assert "KR^3 = Z/2" in out

    doc = (
        "twist e on catalog:s1 { e=1 }\n"
        "bundle X on catalog:s1 { xi=0 chern=0 }\n"
        "background bg { bundle=X eps=e t=0 alpha=0 h_base=0 h_fib=0 }\n"
    )
    code, out = tdual.doc_tdual(doc, "bg")
    assert code == 0
    assert "overall PASS" in out
