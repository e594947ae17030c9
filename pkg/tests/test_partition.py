import math

import pytest

from pizzacut import partition
from pizzacut.errors import OddNError, WitnessFailure
from pizzacut.geom import MINUS, PLUS, OrientedLine, Pizza, clip, rectangle
from pizzacut.partition import (CutNode, Slice, check_disk_deficiency, fair_partition,
                                fair_slice_from_half, follows_cutting_rule, leaves,
                                verify_partition)
from pizzacut.sections import find_halving_cut

UNIT = rectangle(0, 0, 1, 1)


def vertical_split(x):
    """Unit square cut by the line x = const; left piece is the plus side."""
    cut = OrientedLine(math.pi / 2, -x)
    return CutNode(UNIT, cut, Slice(clip(UNIT, cut, PLUS)), Slice(clip(UNIT, cut, MINUS)))


def test_verify_even_split_of_a_square():
    rep = verify_partition(Pizza(UNIT, UNIT), vertical_split(0.5))
    assert rep.fair and rep.max_deviation == pytest.approx(0.0, abs=1e-15)
    assert rep.dough_areas == pytest.approx([0.5, 0.5])


def test_verify_flags_an_unfair_split():
    rep = verify_partition(Pizza(UNIT, UNIT), vertical_split(0.3))
    assert not rep.fair
    assert rep.max_dough_deviation == pytest.approx(0.4, abs=1e-12)
    assert rep.tiles


def test_verify_detects_slices_that_disagree_with_cuts():
    cut = OrientedLine(math.pi / 2, -0.5)
    bogus = CutNode(UNIT, cut, Slice(rectangle(0, 0, 0.4, 1)), Slice(clip(UNIT, cut, MINUS)))
    assert not verify_partition(Pizza(UNIT, UNIT), bogus).slices_match_cuts
    assert not follows_cutting_rule(bogus)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_fair_partition_disks(disks, n):
    tree = fair_partition(disks, n)
    rep = verify_partition(disks, tree, 1e-6)
    assert rep.fair and rep.n == n and rep.slices_match_cuts
    assert follows_cutting_rule(tree)


@pytest.mark.parametrize("n", [2, 4, 6, 10])
def test_fair_partition_squares_and_offset(squares, offset, n):
    for pz in (squares, offset):
        rep = verify_partition(pz, fair_partition(pz, n), 1e-6)
        assert rep.fair, rep.to_dict()


@pytest.mark.parametrize("i", range(6))
def test_fair_partition_random(randoms, i):
    for n in (6, 8, 10):
        tree = fair_partition(randoms[i], n)
        assert len(leaves(tree)) == n
        assert verify_partition(randoms[i], tree, 1e-6).fair


def test_n8_first_cut_is_the_halving_cut(randoms):
    pz = randoms[3]
    assert fair_partition(pz, 8).cut == find_halving_cut(pz)


def test_odd_n_fails_before_cutting(disks, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("a cut was attempted")

    monkeypatch.setattr(partition, "find_halving_cut", boom)
    monkeypatch.setattr(partition, "simultaneous_alpha_cut", boom)
    with pytest.raises(OddNError) as exc:
        fair_partition(disks, 5)
    assert exc.value.exit_code == 3


def _half(pz):
    cut = find_halving_cut(pz)
    return cut, clip(pz.dough, cut, PLUS)


def test_fair_slice_from_half_disks(disks):
    cut, half = _half(disks)
    sl, rest, line = fair_slice_from_half(disks, half, cut, 6)
    assert sl.area == pytest.approx(4 * math.pi / 6, rel=1e-4)  # polygon vs disk
    assert sl.area == pytest.approx(disks.area_dough / 6, rel=1e-9)
    top = clip(clip(disks.topping, cut, PLUS), line, MINUS)
    assert top.area == pytest.approx(disks.area_topping / 6, rel=1e-6)
    assert sl.area + rest.area == pytest.approx(half.area, rel=1e-12)


def test_fair_slice_from_half_corner_topping():
    pz = Pizza(rectangle(0, 0, 1, 1), rectangle(0, 0, 2, 2))
    cut, half = _half(pz)
    sl, _, line = fair_slice_from_half(pz, half, cut, 6)
    assert sl.area == pytest.approx(2 / 3, abs=1e-6)
    top = clip(clip(pz.topping, cut, PLUS), line, MINUS)
    assert top.area == pytest.approx(1 / 6, abs=1e-6)


def test_fair_slice_from_half_identical_bodies():
    pz = Pizza(UNIT, UNIT)
    cut, half = _half(pz)
    sl, _, _ = fair_slice_from_half(pz, half, cut, 6)
    assert sl.area == pytest.approx(1 / 6, abs=1e-12)


def test_disk_deficiency_holds():
    rep = check_disk_deficiency(1, 2, 512, (1 / 3, 1 / 5, 2 / 5))
    assert rep.holds and min(rep.min_slack) > rep.margin > 0


def test_disk_deficiency_shrinks_towards_one_half():
    slacks = check_disk_deficiency(1, 2, 256, (0.3, 0.45, 0.49, 0.499),
                                   directions=16, strict=False).min_slack
    assert all(a > b for a, b in zip(slacks, slacks[1:]))
    assert slacks[-1] < 1e-3


def test_identical_disks_have_no_deficiency():
    rep = check_disk_deficiency(1, 1, 128, (1 / 3,), directions=16, strict=False)
    assert not rep.holds and rep.min_slack[0] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(WitnessFailure):
        check_disk_deficiency(1, 1, 128, (1 / 3,), directions=16)
