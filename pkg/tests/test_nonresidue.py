import logging

import pytest

from conftest import brute_nonresidue, power_residues, simple_sieve
from normeuclid.characters import build_character
from normeuclid.errors import SearchExhausted
from normeuclid.nonresidue import (
    NonResidueData,
    find_q1,
    find_q2,
    find_r,
    grh_findings,
    nonresidue_data,
)


@pytest.mark.parametrize("f,q1", [(7, 2), (307, 5), (4775569, 29), (2278522747, 53), (360007, 23)])
def test_find_q1_records(f, q1):
    assert find_q1(build_character(3, f)) == q1


@pytest.mark.parametrize("f,q1,q2", [(7, 2, 3), (31, 3, 5), (13, 2, 3)])
def test_find_q2_examples(f, q1, q2):
    chi = build_character(3, f)
    assert find_q1(chi) == q1
    assert find_q2(chi, q1) == q2


def test_find_r_examples():
    chi = build_character(3, 7)
    r, omega = find_r(chi, 2, 3)
    assert r == 5
    assert omega == (3 - chi.exponent(3)) % 3
    assert (5 * 3) % 7 in power_residues(3, 7)
    assert nonresidue_data(build_character(3, 13)).r == brute_nonresidue(3, 13)[2]


def test_find_r_rejects_residue_q2():
    chi = build_character(3, 31)
    with pytest.raises(ValueError):
        find_r(chi, 3, 2)  # chi(2) = 1 mod 31


def test_nonresidue_data_examples():
    d = nonresidue_data(build_character(3, 7))
    assert (d.q1, d.q2, d.r) == (2, 3, 5)
    d31 = nonresidue_data(build_character(3, 31))
    assert (d31.q1, d31.q2, d31.r) == brute_nonresidue(3, 31)
    assert d31.to_dict() == {"q1": 3, "q2": 5, "omega_exponent": d31.omega_exponent, "r": d31.r}


@pytest.mark.parametrize("ell", [5, 7, 13])
def test_brute_force_higher_degree(ell):
    for f in [p for p in simple_sieve(3000) if p % ell == 1]:
        d = nonresidue_data(build_character(ell, f))
        assert (d.q1, d.q2, d.r) == brute_nonresidue(ell, f), f


def test_search_exhausted_with_tiny_cap():
    chi = build_character(3, 31)
    with pytest.raises(SearchExhausted):
        find_q1(chi, cap=3)
    with pytest.raises(SearchExhausted):
        find_q2(chi, 3, cap=5)


def test_grh_findings_quiet_for_real_data():
    chi = build_character(3, 25147657981)
    d = nonresidue_data(chi)
    assert d.q1 == 61
    assert grh_findings(chi, d) == []


def test_grh_findings_flags_fabricated_data(caplog):
    chi = build_character(3, 25147657981)
    fake = NonResidueData(q1=500, q2=2000, omega_exponent=1, r=10**6)
    with caplog.at_level(logging.WARNING):
        out = grh_findings(chi, fake)
    assert len(out) == 3
    assert "GRH bound violated" in caplog.text
