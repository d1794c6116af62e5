import json

import pytest

from asmkit import identities
from asmkit.asm import CapExceededError
from asmkit.identities import IDENTITY_IDS, CheckReport, UnknownIdentityError, run_all, run_check, trial_rng

REPORT_KEYS = {"id", "size", "trials", "seed", "field", "status", "witnesses", "elapsed_ms"}


def strip_time(report):
    d = report.to_dict()
    d.pop("elapsed_ms")
    return json.dumps(d, sort_keys=True)


def test_vocabulary():
    assert len(IDENTITY_IDS) == 16
    assert set(IDENTITY_IDS) == set(identities.DEFAULT_SIZES) == set(identities.SIZE_MEANING)


def test_unknown_id():
    with pytest.raises(UnknownIdentityError):
        run_check("no-such-identity", 1, 1, 0)


@pytest.mark.parametrize("ident,size", [
    ("sym-even-osasm", 4), ("thm-ox", 3), ("conj17-odd-osasm", 1), ("pf-squared-det", 6),
    ("partfunc-pfaffian", 4), ("lemma-zx", 4), ("cor-corr", 1), ("psi-ratio", 2),
])
def test_checks_pass(ident, size):
    r = run_check(ident, size, trials=3, seed=42)
    assert r.status == "pass", r.witnesses
    assert set(r.to_dict()) == REPORT_KEYS


def test_fields():
    assert run_check("eq-zsymp", 0, 2, 1).field == "cyclo12"
    assert run_check("lemma-zx", 2, 2, 1).field == "rational"


def test_determinism():
    a = run_check("partfunc-pfaffian", 3, 4, 99)
    b = run_check("partfunc-pfaffian", 3, 4, 99)
    assert strip_time(a) == strip_time(b)


def test_trial_seeds_differ():
    xs = {trial_rng(7, "lemma-zx", 3, t).random() for t in range(5)}
    assert len(xs) == 5
    assert trial_rng(7, "lemma-zx", 3, 0).random() == trial_rng(7, "lemma-zx", 3, 0).random()


def test_failure_records_witness(monkeypatch):
    def bogus(size, trials, rngs, out):
        out.compare(1, 2, n=size)

    monkeypatch.setitem(identities._CHECKS, "thm-ox", bogus)
    r = run_check("thm-ox", 3, 1, 0)
    assert r.status == "fail"
    assert r.witnesses == [{"point": {"n": "3"}, "lhs": "1", "rhs": "2"}]


def test_cap_errors_propagate_from_run_check():
    with pytest.raises(CapExceededError):
        run_check("product-even", 5, 1, 0)


def test_run_all_isolates_errors():
    reports = run_all({"product-even": 5}, seed=3, trials=2)
    assert [r.id for r in reports] == list(IDENTITY_IDS)
    status = {r.id: r.status for r in reports}
    assert status.pop("product-even") == "error"
    assert set(status.values()) == {"pass"}
    assert all(isinstance(r, CheckReport) for r in reports)
    json.dumps([r.to_dict() for r in reports])


def test_zx_resamples_past_sigma_q4_pole():
    # seed 0 at n = 2 draws q = +-1 in some trial
    assert run_check("lemma-zx", 2, 5, 0).status == "pass"


@pytest.mark.parametrize("ident, size", [("lemma-zx", 1), ("sym-even-osasm", 3)])
def test_invalid_size_rejected(ident, size):
    with pytest.raises(ValueError):
        run_check(ident, size, 1, 0)
