import pytest

from markoff.arith import PeriodicCF, QuadraticIrrational, quadratic_to_periodic
from markoff.arith.periodic import format_display_period
from markoff.cantor import spectrum_pair
from markoff.errors import InputError
from markoff.figures import FIGURES, FigureSettings, figure_tables
from markoff.frobenius import frobenius_cf
from markoff.tree import iter_tree, node_at
from markoff.tree.node import mirror

SMALL = FigureSettings(depth=2, precision=8, ks=(0, 2), rows=5)


def tables(*names):
    return {table.name: table for table in figure_tables(names, SMALL)}


def test_tree_figure():
    table = tables("tree")["tree"]
    assert table.columns == ("path", "m", "r", "s", "w", "v")
    assert len(table.rows) == 7
    assert table.rows[2] == ["R", "5,29,2", "2,12,1", "1,5,1", "1,7,1", "2,2,5"]


def test_frobenius_figure():
    rows = tables("frobenius")["frobenius"].rows
    assert rows[0] == ["-", "1/1", "2,2", "5", "2"]
    assert rows[1][:2] == ["L", "2/1"]
    assert rows[1][3:] == ["13", "5"]
    assert [row[3] for row in rows[3:]] == ["34", "194", "433", "169"]


def test_snake_figure():
    rows = tables("snake")["snake"].rows
    assert [row[0] for row in rows] == ["5/3", "3/5"]
    assert rows[0][1] == ",".join(str(a) for a in frobenius_cf(5, 3).digits)
    assert rows[0][2].startswith("+")


def test_le_figure():
    rows = tables("les")["les"].rows
    assert rows[0] == ["-", "5,1", "3", "6,4", "-7 — -2 — -2 — -2"]
    assert rows[1][:4] == ["L", "13,2", "1,5", "6,1,3,6"]
    assert len(rows) == 7


def test_spectrum_figures():
    found = tables("spectrum-R", "spectrum-T")
    rows_r = found["spectrum-R"].rows
    assert [row[0] for row in rows_r] == ["singular", "-", "L", "R"]
    assert rows_r[1][4] == format_display_period((1, 2, 2, 1))
    rows_t = found["spectrum-T"].rows
    assert rows_t[1][2] == format_display_period((6, 3, 1, 8))
    assert rows_t[1][4] == format_display_period((3, 6, 8, 1))


def test_cover_figure():
    rows = tables("cover")["cover"].rows
    assert [row[0] for row in rows] == ["0", "1", "1", "2", "2", "2", "2"]
    assert all(float(row[4]) < float(row[5]) for row in rows)


def test_table_and_zagier_figures():
    found = tables("table", "zagier")
    assert [row[0] for row in found["table"].rows] == ["1", "2", "5", "13", "29"]
    assert [row[:2] for row in found["zagier"].rows] == [["0", "1"], ["2", "7"]]


def test_render_and_defaults():
    table = tables("tree")["tree"]
    assert table.render("csv").splitlines()[0] == "path,m,r,s,w,v"
    names = [t.name for t in figure_tables(["tree", "snake"])]
    assert names == ["tree", "snake"]
    assert len(FIGURES) == 9


def test_unknown_figure():
    with pytest.raises(InputError):
        figure_tables(["tree", "mosaic"], SMALL)


TREE_FIGURE = [
    ("-", "1,5,2", "0,2,1", "1,1,1", "-1,1,1", "10,2,5"),
    ("L", "1,13,5", "0,5,2", "1,2,1", "-1,2,1", "10,1,2"),
    ("R", "5,29,2", "2,12,1", "1,5,1", "1,7,1", "2,2,5"),
    ("LL", "1,34,13", "0,13,5", "1,5,2", "-1,5,2", "10,1,1"),
    ("LR", "13,194,5", "5,75,2", "2,29,1", "2,31,1", "1,5,2"),
    ("RL", "5,433,29", "2,179,12", "1,74,5", "1,104,7", "2,25,2"),
    ("RR", "29,169,2", "12,70,1", "5,29,1", "7,41,1", "2,10,5"),
    ("LLL", "1,89,34", "0,34,13", "1,13,5", "-1,13,5", "10,2,1"),
    ("LLR", "34,1325,13", "13,507,5", "5,194,2", "5,196,2", "1,29,1"),
    ("LRL", "13,7561,194", "5,2923,75", "2,1130,29", "2,1208,31", "1,193,5"),
    ("LRR", "194,2897,5", "75,1120,2", "29,433,1", "31,463,1", "5,74,2"),
    ("RLL", "5,6466,433", "2,2673,179", "1,1105,74", "1,1553,104", "2,373,25"),
    ("RLR", "433,37666,29", "179,15571,12", "74,6437,5", "104,9047,7", "25,2173,2"),
    ("RRL", "29,14701,169", "12,6089,70", "5,2522,29", "7,3566,41", "2,865,10"),
    ("RRR", "169,985,2", "70,408,1", "29,169,1", "41,239,1", "10,58,5"),
]


def test_tree_figure_to_depth_3():
    table = figure_tables(["tree"], FigureSettings(depth=3))[0]
    assert [tuple(row) for row in table.rows] == TREE_FIGURE


SQUARE_FIGURE = {
    "-": "6,4",
    "L": "6,1,3,6",
    "R": "4,6,8,4",
    "LL": "6,1,5,3,1,6",
    "LR": "6,3,1,6,8,1,3,6",
    "RL": "4,6,8,1,3,8,6,4",
    "RR": "4,8,6,4,8,4",
    "LLL": "6,1,5,1,3,5,1,6",
    "LLR": "6,1,3,5,1,6,8,1,5,3,1,6",
    "LRL": "6,3,1,6,8,1,5,3,1,8,6,1,3,6",
    "LRR": "6,3,1,8,6,1,3,6,8,1,3,6",
    "RLL": "4,6,8,1,3,6,8,3,1,8,6,4",
    "RLR": "4,6,8,3,1,8,6,4,8,1,3,8,6,4",
    "RRL": "4,8,6,4,8,1,3,8,4,6,8,4",
    "RRR": "4,8,4,6,8,4,8,4",
    "LLLL": "6,1,5,1,5,3,1,5,1,6",
    "LLLR": "6,1,5,3,1,5,1,6,8,1,5,1,3,5,1,6",
    "LLRL": "6,1,3,5,1,6,8,1,5,1,3,5,1,8,6,1,5,3,1,6",
    "LLRR": "6,1,3,5,1,8,6,1,5,3,1,6,8,1,5,3,1,6",
    "LRLL": "6,3,1,6,8,1,5,3,1,6,8,1,3,5,1,8,6,1,3,6",
    "LRLR": "6,3,1,6,8,1,3,5,1,8,6,1,3,6,8,1,5,3,1,8,6,1,3,6",
    "LRRL": "6,3,1,8,6,1,3,6,8,1,5,3,1,8,6,3,1,6,8,1,3,6",
    "LRRR": "6,3,1,8,6,3,1,6,8,1,3,6,8,1,3,6",
    "RLLL": "4,6,8,1,3,6,8,1,3,8,6,3,1,8,6,4",
    "RLLR": "4,6,8,1,3,8,6,3,1,8,6,4,8,1,3,6,8,3,1,8,6,4",
    "RLRL": "4,6,8,3,1,8,6,4,8,1,3,6,8,3,1,8,4,6,8,1,3,8,6,4",
    "RLRR": "4,6,8,3,1,8,4,6,8,1,3,8,6,4,8,1,3,8,6,4",
    "RRLL": "4,8,6,4,8,1,3,8,6,4,8,3,1,8,4,6,8,4",
    "RRLR": "4,8,6,4,8,3,1,8,4,6,8,4,8,1,3,8,4,6,8,4",
    "RRRL": "4,8,4,6,8,4,8,1,3,8,4,8,6,4,8,4",
    "RRRR": "4,8,4,8,6,4,8,4,8,4",
}


@pytest.fixture(scope="module")
def le_rows():
    table = figure_tables(["les"], FigureSettings(depth=4))[0]
    return {row[0]: row for row in table.rows}


@pytest.mark.parametrize("path, square", sorted(SQUARE_FIGURE.items()))
def test_square_expansions_to_depth_4(le_rows, path, square):
    assert le_rows[path][3] == square


# (path, g, left (u, w), left period, right - 1 (u, w), right period) with values (u + sqrt(9g^2 - 4)) / 2w
R_SPECTRUM = [
    ("-", 5, (11, 5), "2,1,1,2", (5, 7), "1,2,2,1"),
    ("L", 13, (29, 13), "2,1,1,1,1,2", (15, 17), "1,1,1,2,2,1"),
    ("R", 29, (63, 31), "2,2,2,1,1,2", (29, 41), "1,2,2,2,2,1"),
    ("LL", 34, (76, 34), "2,1,1,1,1,1,1,2", (40, 44), "1,1,1,1,1,2,2,1"),
    ("LR", 194, (432, 196), "2,1,1,2,2,1,1,1,1,2", (224, 254), "1,1,1,2,2,1,1,2,2,1"),
    ("RL", 433, (941, 463), "2,2,2,1,1,2,2,1,1,2", (435, 611), "1,2,2,1,1,2,2,2,2,1"),
    ("RR", 169, (367, 181), "2,2,2,2,2,1,1,2", (169, 239), "1,2,2,2,2,2,2,1"),
    ("LLL", 89, (199, 89), "2,1,1,1,1,1,1,1,1,2", (105, 115), "1,1,1,1,1,1,1,2,2,1"),
    ("LLR", 1325, (2961, 1327), "2,1,1,1,1,2,2,1,1,1,1,1,1,2", (1559, 1715), "1,1,1,1,1,2,2,1,1,1,1,2,2,1"),
    ("LRL", 7561, (16837, 7639), "2,1,1,2,2,1,1,1,1,2,2,1,1,1,1,2", (8731, 9899), "1,1,1,2,2,1,1,1,1,2,2,1,1,2,2,1"),
    ("LRR", 2897, (6451, 2927), "2,1,1,2,2,1,1,2,2,1,1,1,1,2", (3345, 3793), "1,1,1,2,2,1,1,2,2,1,1,2,2,1"),
    ("RLL", 6466, (14052, 6914), "2,2,2,1,1,2,2,1,1,2,2,1,1,2", (6496, 9124), "1,2,2,1,1,2,2,1,1,2,2,2,2,1"),
    ("RLR", 37666, (81856, 40276), "2,2,2,1,1,2,2,2,2,1,1,2,2,1,1,2", (37840, 53150), "1,2,2,1,1,2,2,2,2,1,1,2,2,2,2,1"),
    ("RRL", 14701, (31925, 15745), "2,2,2,2,2,1,1,2,2,2,2,1,1,2", (14703, 20789), "1,2,2,2,2,1,1,2,2,2,2,2,2,1"),
    ("RRR", 985, (2139, 1055), "2,2,2,2,2,2,2,1,1,2", (985, 1393), "1,2,2,2,2,2,2,2,2,1"),
]

# Same layout with values (u + 3 sqrt(9g^2 - 4)) / 2w
T_SPECTRUM = [
    ("-", 5, (43, 7), "6,3,1,8", (25, 11), "3,6,8,1"),
    ("L", 13, (113, 17), "6,1,3,5,1,8", (83, 19), "5,3,1,6,8,1"),
    ("R", 29, (247, 61), "4,6,8,3,1,8", (145, 65), "3,8,6,4,8,1"),
    ("LL", 34, (296, 44), "6,1,5,3,1,5,1,8", (224, 46), "5,1,3,5,1,6,8,1"),
    ("LR", 194, (1684, 274), "6,3,1,6,8,1,3,5,1,8", (1240, 284), "5,3,1,8,6,1,3,6,8,1"),
    ("RL", 433, (3689, 911), "4,6,8,1,3,8,6,3,1,8", (2183, 961), "3,6,8,3,1,8,6,4,8,1"),
    ("RR", 169, (1439, 359), "4,8,6,4,8,3,1,8", (845, 379), "3,8,4,6,8,4,8,1"),
    ("LLL", 89, (775, 115), "6,1,5,1,3,5,1,5,1,8", (589, 119), "5,1,5,3,1,5,1,6,8,1"),
    ("LLR", 1325, (11533, 1735), "6,1,3,5,1,6,8,1,5,3,1,5,1,8", (8731, 1793), "5,1,3,5,1,8,6,1,5,3,1,6,8,1"),
    (
        "LRL",
        7561,
        (65633, 10679),
        "6,3,1,6,8,1,5,3,1,8,6,1,3,5,1,8",
        (48335, 11065),
        "5,3,1,6,8,1,3,5,1,8,6,1,3,6,8,1",
    ),
    ("LRR", 2897, (25147, 4093), "6,3,1,8,6,1,3,6,8,1,3,5,1,8", (18517, 4241), "5,3,1,8,6,3,1,6,8,1,3,6,8,1"),
    ("RLL", 6466, (55088, 13604), "4,6,8,1,3,6,8,3,1,8,6,3,1,8", (32600, 14350), "3,6,8,1,3,8,6,3,1,8,6,4,8,1"),
    (
        "RLR",
        37666,
        (320900, 79250),
        "4,6,8,3,1,8,6,4,8,1,3,8,6,3,1,8",
        (189896, 83596),
        "3,6,8,3,1,8,4,6,8,1,3,8,6,4,8,1",
    ),
    (
        "RRL",
        14701,
        (125177, 31229),
        "4,8,6,4,8,1,3,8,4,6,8,3,1,8",
        (73523, 32959),
        "3,8,6,4,8,3,1,8,4,6,8,4,8,1",
    ),
    ("RRR", 985, (8387, 2093), "4,8,4,6,8,4,8,3,1,8", (4925, 2209), "3,8,4,8,6,4,8,4,8,1"),
]


@pytest.fixture(scope="module")
def spectrum_rows():
    tables = figure_tables(["spectrum-R", "spectrum-T"], FigureSettings(depth=4, precision=10))
    return {table.name[-1]: {row[0]: row for row in table.rows} for table in tables}


@pytest.mark.parametrize(
    "spectrum, root_coefficient, entry",
    [("R", 1, entry) for entry in R_SPECTRUM] + [("T", 3, entry) for entry in T_SPECTRUM],
)
def test_spectrum_figures_to_depth_3(spectrum_rows, spectrum, root_coefficient, entry):
    path, g, (left_u, left_w), left_period, (right_u, right_w), right_period = entry
    node = node_at(path if path != "-" else "")
    assert node.g == g
    radicand = 9 * g * g - 4
    left, right = spectrum_pair(node, spectrum)
    assert left.value == QuadraticIrrational.half(left_u, root_coefficient, left_w, radicand)
    assert right.value == QuadraticIrrational.half(right_u, root_coefficient, right_w, radicand)
    assert quadratic_to_periodic(left.value) == PeriodicCF.pure(left.period)
    assert quadratic_to_periodic(right.value) == PeriodicCF.pure(right.period)
    row = spectrum_rows[spectrum][path]
    assert row == [path, left.value.decimal(10), left_period, right.value.decimal(10), right_period]


@pytest.mark.parametrize("spectrum, total", [("R", 3), ("T", 9)])
def test_mirror_periods_sum_pointwise(spectrum, total):
    for node in iter_tree(3):
        left, _ = spectrum_pair(node, spectrum)
        _, right = spectrum_pair(node_at(mirror(node.path)), spectrum)
        assert len(left.period) == len(right.period)
        assert {a + b for a, b in zip(left.period, right.period)} == {total}
