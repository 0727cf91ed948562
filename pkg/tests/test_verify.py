import pytest

from forestsym import verify as V
from forestsym.coeffs import QPoly
from forestsym.partitions import domino_weight_sum


def test_thm1_counts():
    r = V.verify_thm1(1)
    assert r.passed and r.cases == 2  # n = 0 and n = 1
    assert V.verify_thm1(4).passed


@pytest.mark.parametrize(
    "fn", [V.verify_thm1, V.verify_thm2, V.verify_orientations, V.verify_plethystic]
)
def test_fault_injection_is_detected(fn):
    r = fn(4, seed=7)
    assert not r.passed
    assert r.failure_count == 1
    assert set(r.failures[0]) >= {"case"}


def test_jobs_do_not_change_report():
    a = V.verify_thm2(4, seed=3)
    b = V.verify_thm2(4, seed=3, jobs=2)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("target", V.MODULAR_TARGETS)
def test_modular(target):
    assert V.verify_modular(4, target).passed


def test_modular_rejects_unknown_target():
    with pytest.raises(ValueError):
        V.verify_modular(3, "nope")


def test_vertical_reports_question_tally():
    r = V.verify_vertical(4)
    assert r.passed
    outside = r.notes["c_lambda(m,S) outside N[q]"]
    assert {"m": [3, 4, 4, 4], "S": [1, 2], "partitions": [[3, 1]]} in outside


def test_distinct_parts_weight():
    lam, mu = (3, 2, 1), (6,)
    assert V.distinct_parts_weight(mu, lam) == domino_weight_sum(mu, lam)
    assert V.distinct_parts_weight(mu, lam, literal=True) != domino_weight_sum(mu, lam)
    with pytest.raises(ValueError):
        V.distinct_parts_weight((4,), (2, 2))


def test_remark_special_case():
    from forestsym.graphs import HessenbergFunction

    e = V.remark_e_coefficients(HessenbergFunction((2, 2)))
    assert e[(2,)] == QPoly((1, 1))  # [2]_q c_2 with c_2 = 1


def test_report_rendering():
    r = V.verify_thm1(3, seed=1)
    assert r.to_text().startswith("FAIL thm1")
    assert "elapsed" not in r.to_json()
    assert "elapsed" in r.to_json(timing=True)
    assert len(V.verify_thm1(5, seed=2).failures) <= V.MAX_RENDERED
