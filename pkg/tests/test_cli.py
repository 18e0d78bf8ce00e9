import io
import json
import subprocess
import sys

import pytest

from rydcalc import cli
from rydcalc.wire import parse_flag_class, parse_index, parse_isotropic, parse_two_row

FL36_LEFT = {"n": 7, "k": [3, 6], "perm": [1, 3, 6, 2, 4, 7, 5]}
FL36_RIGHT = {"n": 7, "k": [3, 6], "perm": [1, 4, 6, 2, 5, 7, 3]}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_translate_example(capsys):
    code, out, _ = run(capsys, "translate", '{"family":"B","n":5,"k":3,"base":[4,1,1],"top":[2,0,0]}', "--check")
    assert code == 0
    assert json.loads(out) == {"gamma": [6, 1, 1]}


def test_translate_inverse(capsys):
    code, out, _ = run(capsys, "translate", '{"family":"B","n":5,"k":3,"gamma":[6,1,1]}', "--check")
    assert code == 0
    assert json.loads(out)["base"] == [4, 1, 1]


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--count", "--n", "7", "--k", "1", "3", "5")
    assert (code, json.loads(out)) == (0, {"count": 630})
    code, out, _ = run(capsys, "enumerate", '{"kind":"k-diagrams","n":7,"k":[1,3,5]}', "--count")
    assert json.loads(out) == {"count": 630}


def test_enumerate_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "enumerate", "--n", "5", "--k", "2", "4")
    _, parallel, _ = run(capsys, "enumerate", "--n", "5", "--k", "2", "4", "--parallel", "2")
    assert serial == parallel
    assert len(json.loads(serial)) == 30


def test_enumerate_respects_max_n(capsys):
    code, _, err = run(capsys, "enumerate", "--count", "--n", "7", "--k", "3", "--max-n", "6")
    assert code == 1 and "exceeds" in err


def test_bk_fl36(capsys):
    data = json.dumps({"left": FL36_LEFT, "right": FL36_RIGHT})
    code, out, _ = run(capsys, "bk", data, "--check")
    assert code == 0
    terms = json.loads(out)
    coeffs = {tuple(t["class"]["perm"]): t["coeff"] for t in terms}
    assert coeffs[(3, 5, 7, 2, 4, 6, 1)] == 2
    for t in terms:
        assert parse_flag_class(t["class"])


def test_bk_identity_and_empty_product(capsys):
    e = {"n": 4, "k": [2], "perm": [1, 2, 3, 4]}
    code, out, _ = run(capsys, "bk", json.dumps({"left": e, "right": e}))
    assert [t["coeff"] for t in json.loads(out)] == [1]
    assert json.loads(out)[0]["class"]["perm"] == [1, 2, 3, 4]
    pair = {"left": {"n": 5, "k": [2, 4], "perm": [1, 2, 4, 5, 3]}, "right": {"n": 5, "k": [2, 4], "perm": [3, 4, 1, 2, 5]}}
    code, out, _ = run(capsys, "bk", json.dumps(pair), "--check")
    assert (code, json.loads(out)) == (0, [])


def test_bk_word_route(capsys):
    data = json.dumps({"left": FL36_LEFT, "right": FL36_RIGHT, "route": "words"})
    _, words, _ = run(capsys, "bk", data)
    _, jdt, _ = run(capsys, "bk", json.dumps({"left": FL36_LEFT, "right": FL36_RIGHT}))
    assert words == jdt


def test_cross_path_mismatch_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "bk_coeff_via_words", lambda *a: 7)
    code, _, err = run(capsys, "bk", json.dumps({"left": FL36_LEFT, "right": FL36_RIGHT}), "--check")
    assert code == 2 and "differ" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bk", "{bad json"],
        ["bk", '{"left": {"n": 7, "k": [3, 6], "perm": [7, 6, 5, 4, 3, 2, 1]}, "right": {}}'],
        ["translate", '{"family":"D","n":5,"k":2,"base":[3,0]}'],
        ["star", '{"variant":"XX","n":5,"left":{"base":[1,0]},"right":{"base":[1,0]}}'],
        ["nonsense"],
    ],
)
def test_bad_input_exits_1(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_cup_and_lr(capsys):
    code, out, _ = run(capsys, "cup", '{"left":[1,2,4,5,3],"right":[3,4,1,2,5]}', "--check")
    assert code == 0
    assert sorted(tuple(t["class"]["perm"]) for t in json.loads(out)) == [
        (3, 4, 2, 5, 1), (3, 5, 1, 4, 2), (4, 5, 1, 2, 3)]
    code, out, _ = run(capsys, "lr", '{"lam":[2,1],"mu":[2,1],"rows":3,"cols":3}', "--check")
    assert {tuple(t["class"]["nu"]): t["coeff"] for t in json.loads(out)}[(3, 2, 1)] == 2


def test_pieri_and_star(capsys):
    code, out, _ = run(capsys, "pieri", '{"variant":"LG","n":3,"p":1,"gamma":[1,0]}', "--check")
    assert code == 0
    assert sorted(t["class"]["gamma"] for t in json.loads(out)) == [[1, 1], [2, 0]]
    for t in json.loads(out):
        parse_index(t["class"])
    star = {"variant": "OG", "n": 5, "left": {"base": [3, 0], "charge": "up"}, "right": {"base": [4, 1]}}
    code, out, _ = run(capsys, "star", json.dumps(star), "--check")
    assert code == 0
    for t in json.loads(out):
        parse_two_row(t["class"], "OG", 5)


def test_output_is_byte_identical_and_sorted(capsys):
    args = ["star", '{"variant":"OG","n":6,"left":{"base":[4,0],"charge":"up"},"right":{"base":[4,0],"charge":"up"}}']
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    keys = [json.dumps(t["class"], sort_keys=True) for t in json.loads(first)]
    assert keys == sorted(keys)


def test_input_and_output_files(tmp_path, capsys, monkeypatch):
    src = tmp_path / "in.json"
    dst = tmp_path / "out.json"
    src.write_text('{"family":"B","n":5,"k":3,"base":[4,1,1],"top":[2,0,0]}')
    assert cli.main(["translate", "--input", str(src), "--output", str(dst)]) == 0
    assert json.loads(dst.read_text()) == {"gamma": [6, 1, 1]}
    monkeypatch.setattr(sys, "stdin", io.StringIO(src.read_text()))
    code, out, _ = run(capsys, "translate", "--input", "-")
    assert json.loads(out) == {"gamma": [6, 1, 1]}


def test_render(capsys):
    code, out, _ = run(capsys, "render", json.dumps(FL36_LEFT))
    assert code == 0 and "●" in out and "region 1,2" in out
    code, out, _ = run(capsys, "render", '{"family":"D","n":6,"k":3,"base":[4,3,3],"top":[2,1,0],"charge":"up"}')
    assert code == 0 and "charge=up" in out
    code, out, _ = run(capsys, "render", '{"variant":"LG","n":4,"base":[5,1],"top":true}')
    assert code == 0


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "5", "--suite", "1", "--suite", "2", "--suite", "7")
    result = json.loads(out)
    assert code == 0 and result["passed"]
    assert [s["criterion"] for s in result["suites"]] == [1, 2, 7]


def test_emitted_isotropic_classes_reparse(capsys):
    code, out, _ = run(capsys, "enumerate", '{"kind":"isotropic","family":"D","n":5,"k":2}')
    items = json.loads(out)
    assert len(items) == 40
    for item in items:
        parse_isotropic(item)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rydcalc", "enumerate", "--count", "--n", "4", "--k", "2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout) == {"count": 6}
