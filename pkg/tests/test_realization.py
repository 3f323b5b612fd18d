"""
Tests for the octave-ordering realization rule
"""

import itertools

import pytest

from notemap.core.errors import BadReference
from notemap.core.models import NoteSet, RealizationEvent
from notemap.io import validate_realization

BAR_TWO = [NoteSet((-7, 1, 7, 14), label="bar 2")]

F, G = 0, 2


def bar_two_events():
    downbeat = [RealizationEvent(0, i, 0, 0) for i in range(4)]
    return downbeat + [RealizationEvent(0, G, -1, 1), RealizationEvent(0, F, 1, 1)]


class TestValidateRealization:
    """Test verdicts and violations"""

    def test_switching_after_sounding(self):
        verdict = validate_realization(bar_two_events(), BAR_TWO)
        assert verdict.valid
        assert verdict.violations == ()

    def test_shift_before_sounding(self):
        shifted = RealizationEvent(0, G, -1, 0)
        verdict = validate_realization([shifted, RealizationEvent(0, G, 0, 1)], BAR_TWO)
        assert not verdict.valid
        assert verdict.violations == (shifted,)

    def test_same_onset_is_not_before(self):
        events = [RealizationEvent(0, G, 0, 3), RealizationEvent(0, G, 1, 3)]
        assert not validate_realization(events, BAR_TWO).valid

    def test_never_unshifted(self):
        verdict = validate_realization([RealizationEvent(0, F, 2, 5)], BAR_TWO)
        assert [e.octave_shift for e in verdict.violations] == [2]

    def test_no_events(self):
        assert validate_realization([], BAR_TWO).valid
        assert validate_realization([], []).valid

    def test_other_element_does_not_count(self):
        events = [RealizationEvent(0, F, 0, 0), RealizationEvent(0, G, 1, 1)]
        assert not validate_realization(events, BAR_TWO).valid

    def test_violations_sorted_by_onset(self):
        events = [RealizationEvent(0, G, 1, 4), RealizationEvent(0, F, -1, 2), RealizationEvent(0, 3, 1, 2)]
        verdict = validate_realization(events, BAR_TWO)
        assert [(e.onset, e.element_index) for e in verdict.violations] == [(2, 0), (2, 3), (4, 2)]

    def test_permutation_invariance(self):
        events = bar_two_events() + [RealizationEvent(0, 1, 1, 0)]
        expected = validate_realization(events, BAR_TWO)
        for ordering in itertools.permutations(events[3:]):
            assert validate_realization(list(events[:3]) + list(ordering), BAR_TWO) == expected

    @pytest.mark.parametrize("event", [
        RealizationEvent(1, 0, 0, 0),
        RealizationEvent(0, 4, 0, 0),
        RealizationEvent(-1, 0, 0, 0),
    ])
    def test_bad_reference(self, event):
        with pytest.raises(BadReference):
            validate_realization([event], BAR_TWO)

    def test_negative_onset(self):
        with pytest.raises(BadReference):
            RealizationEvent(0, 0, 0, -1)
