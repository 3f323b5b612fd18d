"""
Standard MIDI File export with quarter-tone pitch bends
"""

import math
from fractions import Fraction
from io import BytesIO
from typing import List, Optional, Tuple

import mido

from ..core.errors import ExportError, KeyOutOfRange, OffGrid
from ..core.models import NoteSet, Score, as_rational
from ..utils.config import MidiSettings
from ..utils.logger import get_logger

logger = get_logger(__name__)

# Channel 0 carries unbent notes; 9 is percussion
BEND_CHANNELS: Tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15)

# Registered parameter 0,0 is the pitch-bend sensitivity
RPN_MSB, RPN_LSB, DATA_ENTRY_MSB, DATA_ENTRY_LSB = 101, 100, 6, 38

PITCHWHEEL_CENTER = 8192


def split_value(value, settings: Optional[MidiSettings] = None) -> Tuple[int, int]:
    """Return (key, 14-bit bend) for a pitch value; halves round toward zero"""
    settings = settings or MidiSettings()
    v = as_rational(value)
    if v.denominator not in (1, 2):
        raise OffGrid(f"{v} is not on the half-semitone grid")

    m = math.floor(v)
    if v - m == Fraction(1, 2) and v < 0:
        m += 1
    fraction = v - m

    key = settings.base_key + m
    if not 0 <= key <= 127:
        raise KeyOutOfRange(f"pitch {v} maps to MIDI key {key}, outside 0-127")

    bend = PITCHWHEEL_CENTER + fraction * PITCHWHEEL_CENTER / settings.bend_range
    if bend.denominator != 1:
        raise ExportError(f"a bend range of {settings.bend_range} cannot express {fraction} exactly")
    return key, int(bend)


def _bend_range_preamble(channel: int, bend_range: int) -> List[mido.Message]:
    return [
        mido.Message('control_change', channel=channel, control=RPN_MSB, value=0),
        mido.Message('control_change', channel=channel, control=RPN_LSB, value=0),
        mido.Message('control_change', channel=channel, control=DATA_ENTRY_MSB, value=bend_range),
        mido.Message('control_change', channel=channel, control=DATA_ENTRY_LSB, value=0),
    ]


def render_sets(sets: List[NoteSet], settings: Optional[MidiSettings] = None,
                track_name: Optional[str] = None) -> mido.MidiFile:
    """Each set becomes a block chord of chord_ticks, one after another"""
    settings = settings or MidiSettings()

    # (channel, key, bend or None) per note, bent notes rotating through BEND_CHANNELS
    chords: List[List[Tuple[int, int, Optional[int]]]] = []
    used_channels: List[int] = []
    rotation = 0
    for note_set in sets:
        chord = []
        for value in note_set.values:
            key, bend = split_value(value, settings)
            if bend == PITCHWHEEL_CENTER:
                chord.append((0, key, None))
                continue
            channel = BEND_CHANNELS[rotation % len(BEND_CHANNELS)]
            rotation += 1
            if channel not in used_channels:
                used_channels.append(channel)
            chord.append((channel, key, bend))
        chords.append(chord)

    # Absolute-time events; note-offs precede the next chord's note-ons at the same tick
    timeline: List[Tuple[int, mido.Message]] = []
    for index, chord in enumerate(chords):
        start = index * settings.chord_ticks
        for channel, key, bend in chord:
            if bend is not None:
                timeline.append((start, mido.Message('pitchwheel', channel=channel, pitch=bend - PITCHWHEEL_CENTER)))
            timeline.append((start, mido.Message('note_on', channel=channel, note=key, velocity=settings.velocity)))
        end = start + settings.chord_ticks
        for channel, key, _ in chord:
            timeline.append((end, mido.Message('note_off', channel=channel, note=key, velocity=0)))
    timeline.sort(key=lambda item: item[0])

    midi_file = mido.MidiFile(type=0, ticks_per_beat=settings.ticks_per_quarter)
    track = mido.MidiTrack()
    midi_file.tracks.append(track)

    if track_name:
        track.append(mido.MetaMessage('track_name', name=track_name, time=0))
    for channel in used_channels:
        track.extend(_bend_range_preamble(channel, settings.bend_range))

    now = 0
    for tick, message in timeline:
        track.append(message.copy(time=tick - now))
        now = tick
    track.append(mido.MetaMessage('end_of_track', time=0))

    logger.debug(f"Rendered {len(sets)} chords on channels {[0] + used_channels}")
    return midi_file


def export_midi(score: Score, settings: Optional[MidiSettings] = None) -> bytes:
    """Standard MIDI File (format 0) bytes for the score's sets in order"""
    track_name = score.sets[0].label if score.sets else None
    midi_file = render_sets(list(score.sets), settings, track_name)
    buffer = BytesIO()
    midi_file.save(file=buffer)
    return buffer.getvalue()
