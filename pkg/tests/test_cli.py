"""CLI exit codes and golden JSON reports.

Set DIGIFREEZE_UPDATE_GOLDEN=1 to rewrite the files under tests/golden.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from digifreeze.cli import main

ROOT = Path(__file__).resolve().parent.parent
SCENARIOS = ROOT / "scenarios"
GOLDEN = Path(__file__).resolve().parent / "golden"
UPDATE = os.environ.get("DIGIFREEZE_UPDATE_GOLDEN") == "1"

CASES = [
    ("info_union_rectangles", ["info", "union_rectangles.scn"], 0),
    ("construct_notched_c1", ["construct", "notched_c1.scn", "--verify"], 0),
    ("construct_notched_c2", ["construct", "notched_c2.scn", "--verify"], 0),
    ("construct_mask", ["construct", "mask.scn", "--verify"], 0),
    ("construct_thin", ["construct", "thin.scn"], 5),
    ("verify_union_rectangles_minimal", ["verify", "union_rectangles_minimal.scn"], 0),
    ("verify_rect_and_trapz_missing", ["verify", "rect_and_trapz_missing.scn"], 3),
    ("verify_rect_and_trapz_corrected", ["verify", "rect_and_trapz_corrected.scn"], 0),
    ("minimize_union_rectangles", ["minimize", "union_rectangles.scn"], 0),
    ("minimize_mask", ["minimize", "mask.scn"], 0),
]


def run(argv, tmp_path):
    report = tmp_path / "report.json"
    code = main(argv + ["--no-stats", "--report", str(report)])
    return code, report.read_text() if report.exists() else None


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden_reports(name, argv, code, tmp_path):
    argv = [argv[0], str(SCENARIOS / argv[1])] + argv[2:]
    got_code, text = run(argv, tmp_path)
    assert got_code == code
    golden = GOLDEN / f"{name}.json"
    if UPDATE:
        golden.parent.mkdir(exist_ok=True)
        golden.write_text(text)
    assert text == golden.read_text()
    # reports are byte-identical from run to run
    assert run(argv, tmp_path)[1] == text


def test_report_keys(tmp_path):
    _, text = run(["verify", str(SCENARIOS / "rect_and_trapz_missing.scn")], tmp_path)
    rep = json.loads(text)
    assert list(rep) == [
        "version", "command", "adjacency", "verdict", "candidate", "forced_fixed",
        "witness", "close_neighbors", "stats", "budget", "details",
    ]
    moved = [pair for pair in rep["witness"] if pair[0] != pair[1]]
    assert moved == [[[6, 1], [7, 0]]]


def test_stats_present_by_default(tmp_path, capsys):
    assert main(["verify", str(SCENARIOS / "union_rectangles_minimal.scn")]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert set(rep["stats"]) == {"nodes", "propagation_passes", "seconds"}


def test_five_point_rect_and_trapz_subset_is_refuted(tmp_path):
    code, text = run(["verify", str(SCENARIOS / "rect_and_trapz_minimal.scn")], tmp_path)
    assert code == 3
    assert json.loads(text)["verdict"] == "not_freezing"


def test_budget_exhaustion_exit_code(tmp_path):
    # the boundary of a 3x3 square: no close neighbors, so refuting needs search
    ring = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)]
    (tmp_path / "ring.pts").write_text("".join(f"{x} {y}\n" for x, y in ring))
    scn = tmp_path / "ring.scn"
    scn.write_text("image: ring.pts\nadjacency: c1\ncandidate:\nbudget_nodes: 1\n")
    code, text = run(["verify", str(scn)], tmp_path)
    assert code == 4
    assert json.loads(text)["verdict"] == "budget_exhausted"


def test_flags_override_scenario(tmp_path):
    scn = SCENARIOS / "union_rectangles_minimal.scn"
    code, text = run(["verify", str(scn), "--adjacency", "c2", "--budget-nodes", "50"], tmp_path)
    rep = json.loads(text)
    assert rep["adjacency"] == "c2"
    assert rep["budget"]["nodes"] == 50
    assert code in (0, 3)


def test_plain_image_source(tmp_path):
    code, text = run(["info", str(SCENARIOS / "unit_cube.pts")], tmp_path)
    rep = json.loads(text)
    assert code == 0
    assert rep["details"]["dimension"] == 3 and rep["details"]["points"] == 8


def test_construct_without_disks_uses_rectangles(tmp_path):
    code, text = run(["construct", str(SCENARIOS / "union_rectangles.grid"), "--verify"], tmp_path)
    rep = json.loads(text)
    assert code == 0 and rep["verdict"] == "freezing"
    assert len(rep["details"]["disks"]) == 2


@pytest.mark.parametrize(
    "content,code",
    [
        ("0 0\n0 0\n", 1),  # duplicate point
        ("0 zero\n", 1),
        ("origin: 0 0\n#?\n", 1),
    ],
)
def test_input_errors(tmp_path, capsys, content, code):
    bad = tmp_path / "bad.pts"
    bad.write_text(content)
    assert main(["info", str(bad)]) == code
    assert capsys.readouterr().err.startswith("error:")


def test_missing_file(capsys):
    assert main(["info", "/nonexistent/image.pts"]) == 1
    assert "error:" in capsys.readouterr().err


def test_unbuildable_disk_in_scenario(tmp_path):
    (tmp_path / "a.pts").write_text("0 0\n1 0\n2 0\n")
    scn = tmp_path / "s.scn"
    scn.write_text("image: a.pts\ndisk: 0 0, 1 0, 2 0\n")
    assert main(["construct", str(scn)]) == 5


def test_render_ascii_and_svg(tmp_path):
    out = tmp_path / "notched.txt"
    assert main(["render", str(SCENARIOS / "notched_c1.scn"), "--out", str(out), "--no-stats",
                 "--report", str(tmp_path / "r.json")]) == 0
    assert out.read_text() == (GOLDEN / "notched_c1.txt").read_text()
    svg = tmp_path / "mask.svg"
    assert main(["render", str(SCENARIOS / "mask.scn"), "--format", "svg", "--out", str(svg),
                 "--report", str(tmp_path / "r.json")]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and "stroke-dasharray" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "digifreeze", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().startswith("digifreeze ")
