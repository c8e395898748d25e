import pytest

mvs = pytest.importorskip("mvs")


def test_chain_basics():
    a = mvs.lukasiewicz(4)
    assert a.size == 5
    assert a.one() == 4
    assert a.oplus(1, 2) == 3
    assert a.odot(3, 3) == 2
    assert a.ord(1) == 4
    assert mvs.validate(a)["ok"]


def test_ideals_and_spectrum():
    p = mvs.product(mvs.lukasiewicz(1), mvs.lukasiewicz(1))
    assert len(mvs.ideals(p)) == 4
    assert len(mvs.primes(p)) == 2
    s = mvs.spec(p)
    assert s["n"] == 2
    assert not s["leq"][0][1] and not s["leq"][1][0]
    assert mvs.radical(p) == [0]


def test_quotient_and_isomorphism():
    p = mvs.product(mvs.lukasiewicz(1), mvs.lukasiewicz(1))
    q = mvs.quotient(p, [0, 1])  # first-factor kernel
    assert q.size == 2
    assert mvs.isomorphic(q, mvs.lukasiewicz(1))


def test_classifiers():
    assert mvs.is_local(mvs.lukasiewicz(4))
    assert not mvs.is_perfect(mvs.lukasiewicz(2))
    assert mvs.rank(mvs.lukasiewicz(3)) == 3
    assert mvs.in_VK(mvs.lukasiewicz(2), 4)
    r = mvs.classify(mvs.lukasiewicz(2), [2, 3])
    assert r["rank"] == 2 and r["inVK"]["2"] and not r["inVK"]["3"]


def test_normal_forms():
    nf = {"arity": 1, "meets": [[{"a": [1], "b": 0}], [{"a": [2], "b": -1}]]}
    assert mvs.normal_form_eval(nf, ["3/4"]) == "1/2"
    assert mvs.normal_form_zeroset(nf) == "[0, 1/2]"
    assert mvs.locally_homogeneous(nf)
    h = mvs.homogenize(nf)
    assert h["arity"] == 2


def test_corpus_and_verify():
    assert len(mvs.all_algebras(4)) == 2
    ids = mvs.registry_ids()
    assert len(ids) >= 20
    reports = mvs.verify([ids[0]])
    assert len(reports) == 1 and reports[0]["id"] == ids[0]


def test_input_errors_surface():
    with pytest.raises(mvs.InputError):
        mvs.quotient(mvs.lukasiewicz(2), [0, 2])  # not downward closed
    with pytest.raises(mvs.InputError):
        mvs.all_algebras(7)
