from __future__ import annotations

import pytest

from core.decide.inclusion import syn_equality
from core.gadgets.builders import build_gadget_A, build_gadget_B
from core.gadgets.instance import normalize_instance
from core.rc.polynomial import rc_lower_bound_3
from core.rc.search import rc_upper_search
from core.sync.reset import reset_letters


@pytest.mark.slow
def test_empty_intersection_keeps_reset_complexity_three(empty_instance):
    gadget_a = build_gadget_A(normalize_instance(empty_instance))
    assert syn_equality(gadget_a, build_gadget_B(empty_instance.sigma)).holds
    report = rc_upper_search(gadget_a, 3)
    assert report.exact
    assert report.rc == 3


@pytest.mark.slow
def test_nonempty_intersection_pushes_reset_complexity_past_three(nonempty_instance):
    gadget_a = build_gadget_A(normalize_instance(nonempty_instance))
    assert reset_letters(gadget_a) == ["y"]
    assert rc_lower_bound_3(gadget_a)
    report = rc_upper_search(gadget_a, 3)
    assert not report.exact
    assert report.rc_lower == 4
