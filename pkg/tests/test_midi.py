"""
Tests for Standard MIDI File export
"""

from fractions import Fraction

import mido
import pytest

from notemap.core.errors import ExportError, KeyOutOfRange, OffGrid
from notemap.core.models import NoteSet, Score
from notemap.io import export_midi, render_sets, split_value
from notemap.mapping import run_algorithm
from notemap.utils.config import MidiSettings


class TestSplitValue:
    """Test key and bend computation"""

    @pytest.mark.parametrize("value,expected", [
        (0, (60, 8192)),
        (-12, (48, 8192)),
        (Fraction(1, 2), (60, 10240)),
        (Fraction(-1, 2), (60, 6144)),
        (Fraction(-5, 2), (58, 6144)),
        (Fraction(-7, 2), (57, 6144)),
        (Fraction(15, 2), (67, 10240)),
    ])
    def test_split(self, value, expected):
        assert split_value(value) == expected

    def test_off_grid(self):
        with pytest.raises(OffGrid):
            split_value(Fraction(1, 3))

    @pytest.mark.parametrize("value", [200, -61])
    def test_key_out_of_range(self, value):
        with pytest.raises(KeyOutOfRange):
            split_value(value)

    def test_bend_range(self):
        assert split_value(Fraction(1, 2), MidiSettings(bend_range=1)) == (60, 12288)

    def test_inexact_bend(self):
        with pytest.raises(ExportError):
            split_value(Fraction(1, 2), MidiSettings(bend_range=3))


class TestGolden:
    """Byte-exact comparison against stored files"""

    def test_first_sample_chain(self, first_sample_algorithm, note_set, golden):
        sets = run_algorithm(first_sample_algorithm, note_set("{0, 4, 7, 11}"))
        assert export_midi(Score(sets=tuple(sets))) == golden("first_sample_chain.hex")

    def test_transposition_chain(self, transposition_algorithm, note_set, golden):
        sets = run_algorithm(transposition_algorithm, note_set("{1, 7, 9, 16, 18}"))
        assert export_midi(Score(sets=tuple(sets))) == golden("transposition_chain.hex")


class TestRender:
    """Test the rendered track structure"""

    def test_header(self, note_set):
        data = export_midi(Score(sets=(note_set("{0, 4, 7}"),)))
        assert data[:14] == bytes.fromhex("4D546864 00000006 0000 0001 01E0")
        assert data[14:18] == b"MTrk"
        assert data.endswith(bytes.fromhex("00FF2F00"))

    def test_track_name_from_label(self):
        data = export_midi(Score(sets=(NoteSet((0,), label="I"),)))
        assert bytes.fromhex("00FF030149") in data

    def test_unbent_chord_on_channel_zero(self):
        track = render_sets([NoteSet((0, 4, 7))]).tracks[0]
        notes = [m for m in track if m.type == 'note_on']
        assert {m.channel for m in notes} == {0}
        assert [m.note for m in notes] == [60, 64, 67]
        assert not [m for m in track if m.type in ('control_change', 'pitchwheel')]

    def test_bent_notes_rotate_channels(self):
        values = [Fraction(2 * k + 1, 2) for k in range(16)]
        track = render_sets([NoteSet(tuple(values))]).tracks[0]
        channels = [m.channel for m in track if m.type == 'note_on']
        assert channels[:14] == [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15]
        assert channels[14:] == [1, 2]
        assert 9 not in channels

    def test_pitchwheel_precedes_note(self):
        track = render_sets([NoteSet((Fraction(1, 2),))]).tracks[0]
        messages = [m for m in track if not m.is_meta]
        assert [m.type for m in messages[-3:]] == ['pitchwheel', 'note_on', 'note_off']
        assert messages[-3].pitch == 2048

    def test_chord_timing(self):
        settings = MidiSettings(ticks_per_quarter=96, chord_ticks=192)
        midi_file = render_sets([NoteSet((0,)), NoteSet((2,))], settings)
        assert midi_file.ticks_per_beat == 96
        offs = [m for m in midi_file.tracks[0] if m.type == 'note_off']
        assert [m.time for m in offs] == [192, 192]
        assert all(m.velocity == 0 for m in offs)

    def test_parses_back(self, transposition_algorithm, note_set, tmp_path):
        sets = run_algorithm(transposition_algorithm, note_set("{1, 7, 9, 16, 18}"))
        path = tmp_path / "chain.mid"
        path.write_bytes(export_midi(Score(sets=tuple(sets))))
        midi_file = mido.MidiFile(str(path))
        assert midi_file.type == 0
        assert len([m for m in midi_file.tracks[0] if m.type == 'note_on']) == 25

    def test_off_grid_set(self):
        with pytest.raises(OffGrid):
            render_sets([NoteSet((Fraction(1, 4),))])
