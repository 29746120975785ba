import csv

from residua import Bounds, verify_all
from residua.report import write_report


def test_write_report_outputs(tmp_path):
    reports = verify_all(Bounds(max_prime=20))
    paths = write_report(reports, tmp_path)
    assert [p.name for p in paths] == ["verify_report.csv", "verify_report.png"]
    with paths[0].open() as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 17
    assert all(r["status"] == "pass" for r in rows)
    assert {r["theorem"] for r in rows} == {rep.theorem_id for rep in reports}
    # PNG magic bytes
    assert paths[1].read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_report_dir_created(tmp_path):
    reports = verify_all(Bounds(max_prime=10))
    target = tmp_path / "nested" / "dir"
    write_report(reports, target)
    assert (target / "verify_report.csv").exists()
