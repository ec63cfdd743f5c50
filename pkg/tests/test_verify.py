import pytest

from bcfusion.verify import DEFAULT_GRID, CheckResult, format_results, run_suite

EXPECTED_CHECKS = {
    "unit", "total_symmetry", "associativity", "sector_grading",
    "spin_rule", "vector_rule", "simple_current", "current_multiplication",
    "positive_character_law", "positive_character_weyl_sum", "perron_frobenius_unique",
    "phi_character_symmetry", "phi_sign_table", "psi_bijection", "psi_fusion_graph",
    "bratteli_paths", "eigenvalue_squares", "generator_dim_identity", "markov_trace",
    "ranklevel_duality", "two_stage_oracle", "unitarity_audit",
}


def test_suite_covers_all_checks_and_passes():
    results = run_suite(2, 9)
    assert {r.name for r in results} == EXPECTED_CHECKS
    assert all(r.ok for r in results)


def test_suite_on_degenerate_instance():
    """ell = 7 at rank 2: V (x) V loses a summand; affected checks skip, rest pass."""
    results = run_suite(2, 7)
    assert all(r.ok for r in results)
    by_name = {r.name: r for r in results}
    assert "skipped" in by_name["eigenvalue_squares"].detail
    assert "skipped" in by_name["markov_trace"].detail
    assert "skipped" in by_name["ranklevel_duality"].detail
    assert by_name["psi_fusion_graph"].ok


def test_format_results_lines():
    results = [CheckResult("alpha", True), CheckResult("beta", False, "why")]
    text = format_results(2, 9, results)
    assert "1/2 checks pass" in text
    assert "[PASS] alpha" in text and "[FAIL] beta  (why)" in text


def test_default_grid_shape():
    assert all(ell % 2 == 1 and k >= 2 for (k, ell) in DEFAULT_GRID)
