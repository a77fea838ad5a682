"""Command-line front-end: output format, exit codes, error routing."""

import pytest

from pochex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def assert_clean_failure(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 1, (argv, err)
    assert out == ""
    assert err != ""


# -- poch ---------------------------------------------------------------------


def test_poch_value(capsys):
    code, out, err = run(capsys, "poch", "--alpha", "1", "-m", "2", "-k", "1")
    assert (code, out, err) == (0, "3\n", "")


def test_poch_negative_rational_equals_form(capsys):
    code, out, _ = run(capsys, "poch", "--alpha=-5/2", "-m", "3", "-k", "2")
    assert (code, out) == (0, "-9/2\n")


@pytest.mark.parametrize(
    "method", ["recurrence", "stirling_sum", "coffey", "bernoulli", "series_oracle"]
)
def test_poch_all_methods_agree(capsys, method):
    code, out, _ = run(
        capsys, "poch", "--alpha", "7/3", "-m", "4", "-k", "2", "--method", method
    )
    assert code == 0
    assert out == "257/3\n"


def test_poch_bad_rational(capsys):
    assert_clean_failure(capsys, "poch", "--alpha", "1.5", "-m", "2", "-k", "1")


def test_poch_bad_method(capsys):
    assert_clean_failure(
        capsys, "poch", "--alpha", "1", "-m", "2", "-k", "1", "--method", "magic"
    )


def test_poch_negative_length_is_domain_error(capsys):
    assert_clean_failure(capsys, "poch", "--alpha", "1", "-m", "-2", "-k", "0")


# -- recip --------------------------------------------------------------------


def test_recip_value(capsys):
    code, out, err = run(capsys, "recip", "--beta", "2", "-m", "1", "-k", "1")
    assert (code, out, err) == (0, "-1/4\n", "")


def test_recip_pole(capsys):
    assert_clean_failure(capsys, "recip", "--beta=-2", "-m", "4", "-k", "1")


def test_recip_laurent_lines(capsys):
    code, out, err = run(
        capsys, "recip", "--laurent", "-n", "1", "-b", "1", "-m", "3", "--order", "3"
    )
    assert code == 0
    assert err == ""
    assert out.splitlines() == ["-1,-1", "0,0", "1,-1", "2,0", "3,-1"]


def test_recip_laurent_needs_its_flags(capsys):
    assert_clean_failure(capsys, "recip", "--laurent", "-m", "3")


def test_recip_laurent_rejects_beta(capsys):
    assert_clean_failure(
        capsys,
        "recip", "--laurent", "-n", "1", "-b", "1", "-m", "3", "--order", "3",
        "--beta", "2",
    )


def test_recip_needs_beta_and_k(capsys):
    assert_clean_failure(capsys, "recip", "-m", "3")


# -- quotient -------------------------------------------------------------------


def test_quotient_value(capsys):
    code, out, _ = run(
        capsys,
        "quotient", "--num", "1", "1", "-m", "1", "--den", "2", "1", "-n", "1",
        "-k", "1",
    )
    assert (code, out) == (0, "1/4\n")


def test_quotient_at_evaluation_point(capsys):
    code, out, _ = run(
        capsys,
        "quotient", "--num", "1", "1", "-m", "2", "--den", "1", "0", "-n", "0",
        "-k", "0", "--at", "1",
    )
    assert (code, out) == (0, "6\n")  # (2)_2


def test_quotient_pole_at_evaluation_point(capsys):
    assert_clean_failure(
        capsys,
        "quotient", "--num", "1", "1", "-m", "1", "--den", "2", "1", "-n", "1",
        "-k", "0", "--at=-2",
    )


# -- pf ---------------------------------------------------------------------------


def test_pf_decomposition(capsys, tmp_path):
    spec = tmp_path / "quotient.txt"
    spec.write_text("[denominator]\npoch = 1 1 : 1\npoch = 2 1 : 1\n")
    code, out, err = run(capsys, "pf", "--spec", str(spec))
    assert (code, out, err) == (0, "1/(1+eps) - 1/(2+eps)\n", "")


def test_pf_with_numerator_scalar(capsys, tmp_path):
    spec = tmp_path / "quotient.txt"
    spec.write_text(
        "[numerator]\npoch = 3 0 : 1\n[denominator]\npoch = 1 1 : 2\n"
    )
    code, out, _ = run(capsys, "pf", "--spec", str(spec))
    assert code == 0
    assert out == "3*(1/(1+eps) - 1/(2+eps))\n"


def test_pf_missing_file(capsys, tmp_path):
    assert_clean_failure(capsys, "pf", "--spec", str(tmp_path / "nope.txt"))


def test_pf_repeated_root(capsys, tmp_path):
    spec = tmp_path / "quotient.txt"
    spec.write_text("[denominator]\npoch = 1 1 : 2\npoch = 2 1 : 1\n")
    assert_clean_failure(capsys, "pf", "--spec", str(spec))


def test_pf_parse_error_carries_line_number(capsys, tmp_path):
    spec = tmp_path / "quotient.txt"
    spec.write_text("[denominator]\npoch = 1 1 : 0 1 0\n")
    code, out, err = run(capsys, "pf", "--spec", str(spec))
    assert (code, out) == (1, "")
    assert "line 2" in err


# -- expand ----------------------------------------------------------------------


F1_SPEC = """\
[numerator]
poch = 1 -2 : 0 1 1
poch = 1 -1 : 0 1 1
[denominator]
poch = 1 -1 : 0 1 0
poch = 1 -1 : 0 0 1
[options]
eps_order = 1
degree_bound = 2
"""


def test_expand_closed_csv(capsys):
    code, out, _ = run(
        capsys, "expand", "--closed", "F1", "--eps-order", "1", "--degree-bound", "2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,m1,m2,coefficient"
    assert "0,1,1,4" in lines
    assert "1,0,1,-2" in lines
    assert "1,1,1,-10" in lines
    assert "1,2,0,-3" in lines
    assert len(lines) == 1 + 12  # six lattice points, k = 0 and 1


def test_expand_spec_file_matches_closed(capsys, tmp_path):
    spec = tmp_path / "f1.spec"
    spec.write_text(F1_SPEC)
    code_a, out_a, _ = run(capsys, "expand", "--spec", str(spec))
    code_b, out_b, _ = run(
        capsys, "expand", "--closed", "F1", "--eps-order", "1", "--degree-bound", "2"
    )
    assert code_a == code_b == 0
    assert out_a == out_b


def test_expand_flag_overrides_file_options(capsys, tmp_path):
    spec = tmp_path / "f1.spec"
    spec.write_text(F1_SPEC)
    code, out, _ = run(capsys, "expand", "--spec", str(spec), "--eps-order", "0")
    assert code == 0
    ks = {line.split(",")[0] for line in out.splitlines()[1:]}
    assert ks == {"0"}


def test_expand_defaults(capsys):
    code, out, _ = run(capsys, "expand", "--closed", "F4")
    assert code == 0
    lines = out.splitlines()[1:]
    ks = {int(line.split(",")[0]) for line in lines}
    degrees = {int(line.split(",")[1]) + int(line.split(",")[2]) for line in lines}
    assert ks == {0, 1, 2, 3}  # default eps order 3
    assert max(degrees) == 5  # default degree bound 5


def test_expand_regroup_total(capsys):
    code, out, _ = run(
        capsys,
        "expand", "--closed", "F5", "--eps-order", "0", "--degree-bound", "1",
        "--regroup", "total",
    )
    assert code == 0
    assert out.splitlines() == [
        "k,m,n,coefficient",
        "0,0,0,1",
        "0,1,0,1/2",
        "0,1,1,1/4",
    ]


def test_expand_aligned_format(capsys):
    code, out, _ = run(
        capsys,
        "expand", "--closed", "F1", "--eps-order", "1", "--degree-bound", "1",
        "--format", "aligned",
    )
    assert code == 0
    assert out.startswith("k = 0\n")
    assert "k = 1" in out


def test_expand_delta_families(capsys):
    code_a, out_a, _ = run(
        capsys,
        "expand", "--closed", "F6", "--delta", "1/3",
        "--eps-order", "1", "--degree-bound", "2",
    )
    code_b, out_b, _ = run(
        capsys,
        "expand", "--closed", "F6_alt", "--delta", "1/3",
        "--eps-order", "1", "--degree-bound", "2",
    )
    assert code_a == code_b == 0
    assert out_a == out_b


def test_expand_delta_required(capsys):
    assert_clean_failure(capsys, "expand", "--closed", "F7")


def test_expand_source_flags_are_exclusive(capsys, tmp_path):
    spec = tmp_path / "f1.spec"
    spec.write_text(F1_SPEC)
    assert_clean_failure(capsys, "expand", "--spec", str(spec), "--closed", "F1")
    assert_clean_failure(capsys, "expand")


def test_expand_unknown_example(capsys):
    assert_clean_failure(capsys, "expand", "--closed", "F9")


# -- tables -----------------------------------------------------------------------


def test_tables_small(capsys):
    code, out, err = run(capsys, "tables", "--k", "0", "--max-m", "2")
    assert (code, err) == (0, "")
    assert out.splitlines() == [
        "k,m,n,coefficient",
        "0,0,0,1",
        "0,1,0,1/2",
        "0,1,1,1/4",
        "0,2,0,5/16",
        "0,2,1,1/4",
        "0,2,2,1/8",
    ]


def test_tables_defaults_have_84_entries(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,m,n,coefficient"
    assert len(lines) == 1 + 84  # k in 0..3, m in 0..5, n in 0..m


def test_tables_k_range(capsys):
    code, out, _ = run(capsys, "tables", "--k", "1..2", "--max-m", "3")
    assert code == 0
    ks = {line.split(",")[0] for line in out.splitlines()[1:]}
    assert ks == {"1", "2"}


def test_tables_bad_range(capsys):
    assert_clean_failure(capsys, "tables", "--k", "3..1")
    assert_clean_failure(capsys, "tables", "--k", "x")


def test_tables_negative_max_m(capsys):
    assert_clean_failure(capsys, "tables", "--max-m", "-1")


# -- verify -----------------------------------------------------------------------


def test_verify_selected_ids(capsys):
    code, out, err = run(capsys, "verify", "--id", "A9", "--id", "nueva1")
    assert (code, err) == (0, "")
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("A9: PASS (")
    assert lines[1].startswith("nueva1: PASS (")


def test_verify_unknown_id(capsys):
    assert_clean_failure(capsys, "verify", "--id", "A99")


def test_verify_id_and_all_conflict(capsys):
    assert_clean_failure(capsys, "verify", "--id", "A9", "--all")


# -- top-level behavior --------------------------------------------------------------


def test_no_subcommand(capsys):
    assert_clean_failure(capsys)


def test_unknown_subcommand(capsys):
    assert_clean_failure(capsys, "frobnicate")


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "poch" in out


def test_output_is_deterministic(capsys):
    args = ("expand", "--closed", "F2", "--eps-order", "2", "--degree-bound", "3")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
