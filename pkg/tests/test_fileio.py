import pytest

from linearr.arrangement import build_arrangement, line_orders
from linearr.fileio import (
    format_arrangement,
    load_arrangement,
    parse_arrangement,
    save_arrangement,
)
from linearr.geometry import ArrangementError

THREE = [(1, -1, 0), (1, 0, 1), (1, 1, 3)]


def test_save_load_roundtrip_is_byte_identical(tmp_path):
    arr = build_arrangement(THREE)
    path = tmp_path / "three.arr"
    save_arrangement(arr, path)
    again = load_arrangement(path)
    assert again.lines == arr.lines
    assert format_arrangement(again) == path.read_text()


def test_format_shape():
    text = format_arrangement(build_arrangement(THREE))
    lines = text.splitlines()
    assert lines[0] == "arr v1 n=3"
    assert lines[1] == "1 1 -1 1"
    assert len(lines) == 4


def test_parse_accepts_comments_and_rationals():
    text = "\n".join(
        [
            "# a comment",
            "arr v1 n=2",
            "1 1 -1/2 1/4",
            "",
            "# another",
            "2 1 1/3 2",
        ]
    )
    arr = parse_arrangement(text)
    assert arr.n == 2
    assert arr.line(1).a > 0


def test_parse_normalizes_nonconventional_input():
    # same lines, translated so an intercept goes negative: loads fine and
    # comes back in conventional position with identical combinatorics
    base = build_arrangement(THREE)
    shifted = [ln.translated(-50, 0) for ln in base.lines]
    text = "arr v1 n=3\n" + "\n".join(
        f"{i} {ln.a} {ln.b} {ln.c}" for i, ln in enumerate(shifted, 1)
    )
    arr = parse_arrangement(text)
    assert line_orders(arr) == line_orders(base)
    assert arr.lines == base.lines


def test_id_order_mismatch_suggests_relabeling():
    with pytest.raises(ArrangementError) as err:
        parse_arrangement("arr v1 n=2\n1 1 1 3\n2 1 -1 0\n")
    assert err.value.code == "id-order-mismatch"
    assert "1->2" in str(err.value)


@pytest.mark.parametrize(
    "text",
    [
        "nope\n1 1 1 3\n",
        "arr v1 n=3\n1 1 -1 0\n2 1 0 1\n",
        "arr v1 n=2\n1 1 -1 0\n1 1 0 1\n",
        "arr v1 n=2\n1 1 -1 0\n2 1 0\n",
        "arr v1 n=2\n1 1 -1 0\n2 1 x 1\n",
        "arr v1 n=2\n1 1 -1 0\n3 1 0 1\n",
    ],
)
def test_parse_rejects_malformed_files(text):
    with pytest.raises(ArrangementError) as err:
        parse_arrangement(text)
    assert err.value.code == "bad-file"


def test_parse_rejects_zero_denominator():
    with pytest.raises(ArrangementError) as err:
        parse_arrangement("arr v1 n=2\n1 1 -1 1/0\n2 1 0 1\n")
    assert err.value.code == "bad-file"
