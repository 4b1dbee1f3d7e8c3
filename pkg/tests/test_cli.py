import pytest

from markoff.cli.run import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tsing_square_of_triple(capsys):
    code, out, _ = run(capsys, "tsing", "square", "--triple", "13,194,5")
    assert code == 0
    assert out == "6,3,1,6,8,1,3,6\n"


def test_tsing_le_and_pair(capsys):
    assert run(capsys, "tsing", "le", "--pair", "29,7")[1] == "6,3\n"
    assert run(capsys, "tsing", "pair", "--le", "1,5")[1] == "13,2\n"
    code, out, _ = run(capsys, "tsing", "juxtapose", "--left", "6,1,3,6", "--right", "6,4")
    assert (code, out) == (0, "6,3,1,6,8,1,3,6\n")


def test_tsing_warns_on_flipped_pair(capsys):
    code, out, err = run(capsys, "tsing", "square", "--pair", "13,11")
    assert code == 0
    assert out == "6,1,3,6\n"
    assert "n - k = 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["tsing", "square", "--pair", "4,2"],
        ["tsing", "square"],
        ["tree", "--depth", "x"],
        ["tree", "node", "--triple", "5,13,194"],
        ["census", "--bound", "ten"],
        ["census", "--bound", "200", "--zagier"],
        ["cantor", "limit", "--path", "LR"],
    ],
)
def test_invalid_input_exits_with_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_frobenius_cf(capsys):
    code, out, _ = run(capsys, "frobenius", "cf", "--fraction", "3/2")
    assert code == 0
    lines = out.splitlines()
    assert "m\t194" in lines
    assert "cf\t2,1,1,2,2,1,1,2" in lines
    assert "s\t29" in lines


def test_frobenius_reconstruct(capsys):
    code, out, _ = run(capsys, "frobenius", "reconstruct", "--m", "7561", "--r", "2923")
    assert code == 0
    assert "fraction\t5/3" in out.splitlines()


def test_tree_dump(capsys):
    code, out, _ = run(capsys, "tree", "dump", "--depth", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "path,m,r,s,w,v",
        '-,"1,5,2","0,2,1","1,1,1","-1,1,1","10,2,5"',
        'L,"1,13,5","0,5,2","1,2,1","-1,2,1","10,1,2"',
        'R,"5,29,2","2,12,1","1,5,1","1,7,1","2,2,5"',
    ]


def test_tree_node_by_path(capsys):
    code, out, _ = run(capsys, "tree", "node", "--path", "LR", "--decorations", "all")
    assert code == 0
    assert "w\t2,31,1" in out.splitlines()


def test_census_count(capsys):
    code, out, _ = run(capsys, "census", "--bound", "100", "--quiet")
    assert code == 0
    assert out == "bound,100\ncount,7\nduplicates,0\n"


def test_census_zagier(capsys):
    code, out, _ = run(capsys, "census", "--bound", "1e100", "--zagier", "--quiet")
    assert code == 0
    header, row = out.splitlines()
    assert header == "k,M,dev_logn,dev_log3n"
    assert row.startswith("100,9670,88.5632399893")


def test_census_table(capsys):
    code, out, _ = run(capsys, "census", "--table", "4", "--quiet")
    assert code == 0
    assert out.splitlines() == ["m,r,s,w,v", "1,0,1,-1,10", "2,1,1,1,5", "5,2,1,1,2", "13,5,2,2,1"]


def test_cantor_limit_and_gapsum(capsys):
    code, out, _ = run(capsys, "cantor", "limit", "--path", "LR*", "--precision", "10")
    assert code == 0
    assert "decimal\t2.5866068747" in out.splitlines()
    assert run(capsys, "cantor", "gapsum", "--depth", "0", "--precision", "4")[1] == "0.9355\n"


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "tree", "--depth", "2", "--quiet")
    assert code == 0
    assert out.startswith("tree: ")
    assert out.strip().endswith("ok")


def test_regression_command(capsys, tmp_path):
    sweep = tmp_path / "sweep.csv"
    sweep.write_text("k,M,dev_logn,dev_log3n\n0,1,1,0\n1,3,3,0\n2,7,5,0\n")
    code, out, _ = run(capsys, "regression", "--csv-path", str(sweep))
    assert code == 0
    slope = next(line for line in out.splitlines() if line.startswith("slope\t"))
    assert float(slope.split("\t")[1]) == pytest.approx(2.0)


def test_yaml_defaults_and_flag_precedence(capsys, tmp_path):
    settings = tmp_path / "tree.yaml"
    settings.write_text("depth: 1\nformat: csv\n")
    code, out, _ = run(capsys, "tree", "dump", "--yaml-path", str(settings))
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, "tree", "dump", "--yaml-path", str(settings), "--depth", "0")
    assert len(out.splitlines()) == 2


def test_unknown_yaml_key(capsys, tmp_path):
    settings = tmp_path / "bad.yaml"
    settings.write_text("depht: 1\n")
    code, _, err = run(capsys, "tree", "dump", "--yaml-path", str(settings))
    assert code == 2
    assert "depht" in err
