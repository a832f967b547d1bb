"""Command-line contract: output strings and exit statuses.

0 on success, 2 on usage or input errors, 3 on mathematical mismatch
(failing verify case or vanishing cell factor while tracing).
"""

import pytest

from tilecount.cli import main
from tilecount.verify import parse_record

ONES = "2 2\n1 1\n1 1\n"
DEGENERATE = "2 2\n1 1\n-1 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_fortress(capsys):
    code, out, _ = run(capsys, "count", "fortress", "1", "1", "1")
    assert code == 0
    assert out.strip() == "2^1 * 5^2 = 50"


def test_count_fortress_bar(capsys):
    code, out, _ = run(capsys, "count", "fortress", "1", "1", "1", "--bar")
    assert code == 0
    assert out.strip() == "5^2 = 25"


def test_count_zigzag(capsys):
    code, out, _ = run(capsys, "count", "zigzag", "4")
    assert code == 0
    assert out.strip() == "2 * 3^5 = 486"


def test_count_zigzag_bar(capsys):
    code, out, _ = run(capsys, "count", "zigzag", "7", "--bar")
    assert code == 0
    assert out.strip() == "2 * 3^16 = 86093442"


def test_count_brick(capsys):
    code, out, _ = run(capsys, "count", "blum", "8")
    assert code == 0
    assert out.strip() == "2 * 3^5 = 486"


def test_count_triangle(capsys):
    code, out, _ = run(capsys, "count", "tri", "1")
    assert code == 0
    assert out.strip() == "3^2 * 2^4 = 144"


def test_count_pattern_file(capsys, tmp_path):
    path = tmp_path / "ones.pat"
    path.write_text(ONES)
    code, out, _ = run(capsys, "count", "aztec", str(path), "5")
    assert code == 0
    assert out.strip() == "2^15 = 32768"


def test_count_rejects_bar_elsewhere(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "q", "3", "--bar"])
    assert exc.value.code == 2


def test_count_rejects_non_integer(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "zigzag", "four"])
    assert exc.value.code == 2


def test_count_rejects_wrong_arity(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "zigzag", "4", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "fortress"])
    assert exc.value.code == 2


def test_count_rejects_unknown_region(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "hexagon", "3"])
    assert exc.value.code == 2


def test_count_rejects_bad_order(capsys):
    # blum_value raises ValueError for order 0; surfaced as a usage error
    with pytest.raises(SystemExit) as exc:
        main(["count", "blum", "0"])
    assert exc.value.code == 2


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "stanley", "--cases", "4", "--seed", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].endswith("cases, 0 failed")
    assert all(line.startswith("ok") for line in lines[:-1])


def test_verify_records(capsys):
    code, out, _ = run(
        capsys, "verify", "powers", "--cases", "2", "--format", "records"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines
    for line in lines:
        assert parse_record(line).equal


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2


def test_trace(capsys, tmp_path):
    path = tmp_path / "ones.pat"
    path.write_text(ONES)
    code, out, _ = run(capsys, "trace", str(path), "2")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].split() == ["step", "1", "order", "2", "factor", "16"]
    assert lines[1].split() == ["step", "2", "order", "1", "factor", "1/2"]
    assert lines[-1] == "value 8"


def test_trace_reports_vanishing_cell(capsys, tmp_path):
    path = tmp_path / "bad.pat"
    path.write_text(DEGENERATE)
    code, out, err = run(capsys, "trace", str(path), "3")
    assert code == 3
    assert "vanishing factor" in err
    assert "order 3" in err and "step 1" in err


def test_trace_rejects_missing_file(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["trace", "/no/such/file.pat", "2"])
    assert exc.value.code == 2


def test_console_entry_point():
    import subprocess

    proc = subprocess.run(
        ["tilecount", "count", "zigzag", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2 * 3^5 = 486"
