import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from digifreeze.formats import (
    ParseError,
    dump_report,
    format_point_list,
    load_image,
    parse_adjacency,
    parse_cycle,
    parse_grid,
    parse_point_list,
    parse_scenario,
    write_atomic,
)

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def test_point_list_with_comments():
    text = "# header\n0 0\n1 0  # trailing\n\n"
    assert parse_point_list(text) == [(0, 0), (1, 0)]
    assert parse_point_list("0 0 1\n") == [(0, 0, 1)]
    with pytest.raises(ParseError, match=":3:.*dimension"):
        parse_point_list("0 0\n1 0\n1 1 1\n", Path("img.pts"))


def test_point_list_errors_carry_line_numbers():
    with pytest.raises(ParseError, match=":2:"):
        parse_point_list("0 0\n1 x\n", Path("img.pts"))
    with pytest.raises(ParseError, match="duplicate"):
        parse_point_list("0 0\n0 0\n")
    with pytest.raises(ParseError, match="no points"):
        parse_point_list("# nothing\n")
    with pytest.raises(ParseError):
        parse_point_list("1 2 3 4\n")


def test_grid_origin_is_bottom_left():
    pts = parse_grid("origin: 10 20\n#..\n.##\n")
    assert sorted(pts) == [(10, 21), (11, 20), (12, 20)]


def test_grid_errors():
    with pytest.raises(ParseError, match="origin"):
        parse_grid("##\n")
    with pytest.raises(ParseError, match="unexpected"):
        parse_grid("origin: 0 0\n#x\n")
    with pytest.raises(ParseError, match="no points"):
        parse_grid("origin: 0 0\n...\n")


def test_grid_and_list_agree_for_mask():
    from digifreeze.fixtures import mask

    assert load_image(SCENARIOS / "mask.grid", 2) == mask()


@given(st.sets(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=1, max_size=40))
def test_point_list_round_trip(points):
    assert sorted(parse_point_list(format_point_list(points))) == sorted(points)


def test_adjacency_names():
    assert parse_adjacency("c1") == 1 and parse_adjacency(" C2 ") == 2
    with pytest.raises(ParseError):
        parse_adjacency("8")


def test_cycle_parsing():
    assert parse_cycle("0 0, 1 0 ,1 1,") == [(0, 0), (1, 0), (1, 1)]
    with pytest.raises(ParseError):
        parse_cycle("0 a")


def test_scenario_fields():
    sc = parse_scenario((SCENARIOS / "mask.scn").read_text(), SCENARIOS / "mask.scn")
    assert sc.adjacency == 2 and len(sc.disks) == 8 and sc.candidate is None
    assert sc.image_path.name == "mask.grid"
    assert len(sc.image()) == 45


def test_scenario_errors(tmp_path):
    (tmp_path / "a.pts").write_text("0 0\n")
    bad = {
        "colour: red\nimage: a.pts\n": "unknown key",
        "image: a.pts\nimage: a.pts\n": "twice",
        "adjacency: c1\n": "needs an 'image:'",
        "image: missing.pts\n": "does not exist",
        "image: a.pts\nbudget_nodes: lots\n": "bad number",
        "image: a.pts\nadjacency: c9\n": "unknown adjacency",
        "image: a.pts\njust words\n": "key: value",
    }
    for text, message in bad.items():
        path = tmp_path / "s.scn"
        path.write_text(text)
        with pytest.raises(ParseError, match=message):
            parse_scenario(text, path)


def test_empty_candidate_line(tmp_path):
    (tmp_path / "a.pts").write_text("0 0\n1 0\n")
    sc = parse_scenario("image: a.pts\ncandidate:\n", tmp_path / "s.scn")
    assert sc.candidate == []


def test_report_keeps_points_on_one_line():
    text = dump_report({"points": [[0, 1], [-2, 3]], "name": "x"})
    assert "[0, 1]" in text and "[-2, 3]" in text
    assert json.loads(text) == {"points": [[0, 1], [-2, 3]], "name": "x"}


def test_write_atomic(tmp_path):
    target = tmp_path / "out.txt"
    write_atomic(target, "one\n")
    write_atomic(target, "two\n")
    assert target.read_text() == "two\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]
