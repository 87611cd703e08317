from fractions import Fraction

import pytest

import sympspin


def test_symplectic_form_l2():
    assert sympspin.symplectic_form(2) == [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [-1, 0, 0, 0],
        [0, -1, 0, 0],
    ]


def test_space_dimensions():
    assert sympspin.curvature_space_dimension(2) == 45
    assert sympspin.weyl_space_dimension(2) == 35


def test_sampling_is_deterministic():
    a = sympspin.sample_rational_vector(10, 42, 9)
    assert a == sympspin.sample_rational_vector(10, 42, 9)
    assert [Fraction(x) for x in a][:3] == [0, -5, Fraction(6, 7)]


def test_clifford_commutator_on_constant():
    one = {"l": 1, "cap": 4, "terms": [{"alpha": [0], "re": "1", "im": "0"}]}
    # e_2 . e_1 . 1 - e_1 . e_2 . 1 = -i omega_12 . 1 = -i
    lhs = sympspin.clifford_basis(1, sympspin.clifford_basis(0, one))
    assert sympspin.clifford_basis(0, one)["terms"] == [{"alpha": [1], "re": "0", "im": "1"}]
    assert lhs["terms"] == [{"alpha": [0], "re": "0", "im": "1"}]


def test_projectors_partition_a_form():
    phi = sympspin.random_form(2, 2, 2, 8, seed=3)
    parts = [sympspin.project(p, phi) for p in ("p20", "p21", "p22")]
    for p, part in zip(("p20", "p21", "p22"), parts):
        assert sympspin.project(p, part) == part
    with pytest.raises(ValueError):
        sympspin.project("p33", phi)


def test_curvature_decomposition():
    r = sympspin.random_curvature(2, 5)
    assert all(sympspin.check_symmetries(r).values())
    w = sympspin.weyl_of(r)
    assert all(sympspin.check_symmetries(w).values())
    sigma = sympspin.ricci_of(r)
    assert sympspin.ricci_of(sympspin.sigma_tilde_of(sigma)) == sigma


def test_invalid_tensor_raises():
    bad = {"l": 1, "entries": [{"ijkl": [1, 1, 1, 1], "val": "1"}]}
    assert not sympspin.check_symmetries(bad)["antisymmetry"]
    with pytest.raises(sympspin.SymmetryViolation):
        sympspin.weyl_of(bad)


def test_run_suite_and_replay():
    report = sympspin.run_suite(trials=2, max_degree=4, suites=["lemma1", "theorem9"])
    assert report["overall"] == "pass"
    assert [c["name"] for c in report["checks"]] == ["lemma1.clifford_commutator", "theorem9.p22_vanishes"]
    assert sympspin.replay(report) == []
    with pytest.raises(ValueError):
        sympspin.run_suite(l=1, suites=["theorem9"])
