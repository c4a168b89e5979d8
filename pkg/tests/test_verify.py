import numpy as np
import pytest

from skewcoh.states import tetrahedron_margins
from skewcoh.verify import (
    ALL_SUITES,
    DEFAULT_SEED,
    format_report,
    random_bell_params,
    random_hermitian,
    random_psd,
    random_xz_params,
    run_suites,
    suite_coefficient_table,
    suite_xz,
)


def test_bell_sampling_is_valid_and_reproducible():
    a = random_bell_params(np.random.default_rng(7), 50)
    b = random_bell_params(np.random.default_rng(7), 50)
    assert [p.triple for p in a] == [p.triple for p in b]
    assert all(min(tetrahedron_margins(*p.triple)) >= 0 for p in a)


def test_xz_sampling_is_valid():
    for prm in random_xz_params(np.random.default_rng(7), 30):
        assert abs(prm.r) <= 1 and abs(prm.s) <= 1


def test_random_matrix_helpers(rng):
    h = random_hermitian(rng, 4)
    assert np.abs(h - h.conj().T).max() == 0.0
    p = random_psd(rng, 4)
    assert np.linalg.eigvalsh(p)[0] >= -1e-12


def test_unknown_suite_name_rejected():
    with pytest.raises(ValueError, match="unknown suites"):
        run_suites(names=["nope"])


def test_suite_registry_covers_report():
    results = run_suites(names=["linalg", "werner"], samples=50)
    report = format_report(results)
    assert "suite linalg: PASS" in report
    assert "suite werner: PASS" in report
    assert report.strip().endswith("2/2 suites passed")
    assert set(ALL_SUITES) >= {"closed-forms", "coefficient-table", "dynamics", "surfaces"}


def test_xz_suite_reports_candidate_deviations():
    result = suite_xz(np.random.default_rng(DEFAULT_SEED), samples=40)
    assert result.passed
    assert any("candidate deviates" in w for w in result.warnings)
    deviating = [w for w in result.warnings if "candidate deviates" in w]
    assert all("r=" in w and "c=(" in w for w in deviating)  # parameters included


def test_coefficient_suite_reports_gad_limitation():
    result = suite_coefficient_table(np.random.default_rng(DEFAULT_SEED), samples=20)
    assert result.passed
    assert any("mixing 1/2" in w for w in result.warnings)


def test_same_seed_same_report():
    r1 = format_report(run_suites(names=["closed-forms"], seed=99, samples=60))
    r2 = format_report(run_suites(names=["closed-forms"], seed=99, samples=60))
    assert r1 == r2
