import pytest

from conftest import simple_sieve
from normeuclid.audit import audit_q2_proof, audit_r_proof
from normeuclid.errors import DomainError

ODD_PRIMES_BELOW_100 = [p for p in simple_sieve(100) if p > 2]


@pytest.mark.parametrize("f", [1e9, 1e10, 1e12, 1e20])
def test_q2_audit_passes(f):
    rep = audit_q2_proof(f)
    assert rep.passed, [s.label for s in rep.failed_steps()]
    assert rep.context == "Q2Proof"


def test_q2_audit_boundary_values():
    rep = audit_q2_proof(1e9)
    assert rep.step("(log x)/sqrt x <= 0.214").exact == pytest.approx(0.2130, abs=1e-4)
    assert rep.step("x>1073").exact == pytest.approx(1073.6, abs=0.05)
    term = rep.step("terminal 2.32 < 2.5")
    assert term.exact < 2.32 < 2.5
    assert all(s.rounded_holds for s in rep.steps)


def test_q2_audit_margins_grow():
    a, b = audit_q2_proof(1e9), audit_q2_proof(1e12)
    assert b.step("terminal 2.32 < 2.5").exact < a.step("terminal 2.32 < 2.5").exact


@pytest.mark.parametrize("ell", ODD_PRIMES_BELOW_100)
def test_r_audit_passes_at_boundary(ell):
    rep = audit_r_proof(ell, 1e8)
    assert rep.passed, [(s.label, s.exact, s.claimed) for s in rep.failed_steps()]
    assert rep.step("terminal 2.3 < 2.5").exact < 2.3


def test_r_audit_ell_dependent_steps():
    rep = audit_r_proof(97, 1e8)
    assert rep.step("<= 2.27 l").passed
    assert rep.step("x>3393").exact > 3393
    assert audit_r_proof(3, 1e8).step("x>3393").exact == pytest.approx(3393.2, abs=0.05)


def test_audit_domain_errors():
    with pytest.raises(DomainError):
        audit_q2_proof(1e8)
    with pytest.raises(DomainError):
        audit_r_proof(2, 1e9)
    with pytest.raises(DomainError):
        audit_r_proof(9, 1e9)
    with pytest.raises(DomainError):
        audit_r_proof(3, 1e7)


def test_report_serialises():
    d = audit_r_proof(5, 1e8).to_dict()
    assert d["passed"] and d["ell"] == 5
    assert {"label", "relation", "claimed", "rounded", "exact", "passed"} <= set(d["steps"][0])
