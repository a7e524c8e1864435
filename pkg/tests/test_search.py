import pytest

from disjunct import exhaustive_T, is_d_disjunct
from oracles import antichain_exists


def test_t1_certificates_match_antichain_oracle():
    certs = exhaustive_T(1, 5)
    assert [c.t for c in certs] == [1, 2, 3, 4, 5]
    for cert in certs:
        exists = antichain_exists(cert.t, cert.t + 1)
        if cert.found:
            assert exists
        else:
            assert cert.exhausted and not exists


def test_t1_threshold_is_four():
    certs = exhaustive_T(1, 4)
    assert [c.found for c in certs] == [False, False, False, True]
    assert all(c.exhausted for c in certs[:3])
    found = certs[3]
    assert found.matrix.t == 4 and found.matrix.n == 5
    assert is_d_disjunct(found.matrix, 1).is_disjunct


def test_found_matrices_always_verify():
    for cert in exhaustive_T(1, 6):
        if cert.found:
            assert cert.matrix.n == cert.t + 1
            assert is_d_disjunct(cert.matrix, cert.d).is_disjunct


def test_budget_exhaustion_is_reported():
    certs = exhaustive_T(1, 3, budget=2)
    # tiny budget: the t=3 search cannot finish and must say so
    assert not certs[2].found
    assert not certs[2].exhausted


def test_affine_seed_for_d2():
    certs = exhaustive_T(2, 9, budget=50_000)
    at9 = certs[-1]
    assert at9.found
    assert at9.matrix.t == 9 and at9.matrix.n == 10
    assert is_d_disjunct(at9.matrix, 2).is_disjunct


def test_large_t_is_declined_honestly():
    certs = exhaustive_T(3, 25, budget=100)
    for cert in certs:
        if cert.t > 20 and not cert.found:
            assert not cert.exhausted


def test_parameter_validation():
    with pytest.raises(ValueError):
        exhaustive_T(0, 3)
    with pytest.raises(ValueError):
        exhaustive_T(1, 0)
