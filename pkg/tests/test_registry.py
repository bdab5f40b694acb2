import json

import pytest

from plethy.registry import (
    IdentityReport,
    registry_ids,
    verify_all,
    verify_identity,
)
from plethy.series import SeriesContext

THEOREM_IDS = registry_ids("theorem")
CONJECTURE_IDS = registry_ids("conjecture")


def test_registry_inventory():
    # ids named by the acceptance gate must all exist
    required = [
        "THRALL",
        "CADOGAN",
        "SOLOMON",
        "EXT-REG",
        "PLINV-E",
        "SYM-LIE2",
        "ALT-E-LIE2",
        "ALT-H-LIE",
        "ALT-H-LIE-PROD",
        "EXT-LIE",
        "EXT-CONJ",
        "ALT-CONJ",
        "ACYC-LIE",
        "ACYC-LIE2",
        "TOTALCOH-LIE",
        "TOTALCOH-LIE2",
        "HE-UNIT",
        "HODGE-FILT",
        "LEHRER",
        "EVENODD",
        "HL-REG",
        "IND-CONF",
        "LEHRER-LIE2",
        "EVENODD-LIE2",
        "HL-LIE2",
        "IND-LIE2",
        "CONJ-FROM-LIE",
        "CONJ-FROM-LIE2",
        "LIE2-FROM-LIE",
        "SIGMA-REC",
        "TAU-REC",
        "RESTRICT-REC-LIE",
        "RESTRICT-REC-LIE2",
        "U-CLOSED",
        "BETA-POS",
        "META-PRODUCTS-MOBIUS",
        "META-PRODUCTS-TOTIENT",
        "META-PRODUCTS-TWOADIC",
        "METAGE2-LIE",
        "METAGE2-LIE2",
    ]
    for id in required:
        assert id in THEOREM_IDS, id
    # the first chain carries eight published equations, the second seven
    assert sum(1 for id in THEOREM_IDS if id.startswith("EQUIV-PBW-")) == 8
    assert sum(1 for id in THEOREM_IDS if id.startswith("EQUIV-LIE2-")) == 7
    assert set(CONJECTURE_IDS) == {"U-POS", "WHITEHOUSE"}


@pytest.fixture(scope="module")
def ctx6():
    return SeriesContext(6)


@pytest.mark.parametrize("identity", THEOREM_IDS)
def test_theorem_identities_cap6(identity, ctx6):
    report = verify_identity(identity, 6, ctx6)
    assert report.passed, (report.id, report.first_fail_degree, report.detail)


def test_conjecture_entries_pass_at_desk_scale():
    rep = verify_identity("U-POS", 8)
    assert rep.passed and rep.tier == "conjecture"
    rep = verify_identity("WHITEHOUSE", 10)
    assert rep.passed
    notes = "\n".join(rep.detail)
    assert "n=4: not positive" in notes
    assert "n=8: not positive" in notes
    assert "n=6: positive" in notes


def test_whitehouse_extended_scan():
    # past the acceptance bound the sparse conversion carries the scan
    rep = verify_identity("WHITEHOUSE", 20)
    assert rep.passed
    notes = "\n".join(rep.detail)
    assert "n=16: not positive" in notes
    assert "n=20: positive" in notes


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identity("NOPE", 6)
    with pytest.raises(KeyError):
        verify_all(6, ids=["NOPE"])


def test_min_cap_enforced():
    with pytest.raises(ValueError):
        verify_identity("THRALL", 1)


def test_verify_all_order_and_json():
    ids = ["THRALL", "CADOGAN", "EXT-REG"]
    reports = verify_all(4, ids=ids)
    assert [r.id for r in reports] == ids
    payload = reports[0].to_dict()
    assert payload["id"] == "THRALL"
    assert payload["status"] == "pass"
    assert payload["cap"] == 4
    json.dumps(payload)  # serializable


def test_parallel_matches_serial():
    ids = ["THRALL", "EXT-REG", "SYM-LIE2", "ACYC-LIE", "WHITEHOUSE"]
    serial = [r.to_dict() for r in verify_all(5, ids=ids, jobs=1)]
    parallel = [r.to_dict() for r in verify_all(5, ids=ids, jobs=2)]
    assert serial == parallel


def test_failure_report_shape():
    # a deliberately unsatisfiable scan: WHITEHOUSE pattern breaks if we
    # claim positivity should fail at n = 6; simulate by checking a fake
    # report object instead of weakening the registry
    rep = IdentityReport(id="X", tier="theorem", cap=4, status="fail", first_fail_degree=3)
    payload = rep.to_dict()
    assert payload["status"] == "fail"
    assert payload["first_fail_degree"] == 3
    assert not rep.passed
