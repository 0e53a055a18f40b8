import random

import pytest

from conftest import DECODE_DUDUDD, HEX_WALK, rand_antichain, rand_pit_gens
from tritile import (
    conj_contains,
    ConjUpSet,
    DeadEndError,
    NormPartitionError,
    NotOnSurfaceError,
    QPoint,
    Trajectory,
    chart_cover,
    closed_trajectories_of_roof,
    closed_trajectory_roofs,
    decode,
    encode,
    flatten,
    gradient,
    norm,
    on_surface,
    parse_tile,
    section_at,
    step,
    trace,
)
from tritile.cones import StdUpSet, conj_roof_generators
from tritile.surface import flat_tiles_in, seed_window
from tritile.tiles import Port, SlantTile, port_candidates, tile

HEX_TILES = tuple(parse_tile(t) for t in HEX_WALK)
OCTANT = ConjUpSet((QPoint(0, 0, 0),))


def assert_valid_trajectory(traj: Trajectory):
    """Check port adjacency and port/gradient alternation along the walk."""
    port = Port.UP
    seq = list(traj.tiles) + ([traj.tiles[0]] if traj.closed else [])
    for prev, cur in zip(seq, seq[1:]):
        pair = port_candidates(prev, port)
        assert cur in pair
        if cur == pair.flip:
            assert gradient(cur) != gradient(prev)
            port = port.other
        else:
            assert gradient(cur) == gradient(prev)
    if traj.closed:
        assert len(set(traj.tiles)) == len(traj.tiles)


def test_step_walks_the_hexagon(hexcone):
    assert step(hexcone, tile(1, 1, 0, 3, 1), Port.UP) == (tile(1, 0, 1, 2, 1), Port.DOWN)
    assert step(hexcone, tile(1, 0, 1, 2, 1), Port.DOWN) == (tile(1, 0, 1, 2, 3), Port.UP)


def test_step_on_straight_slope():
    nxt, port = step(OCTANT, tile(1, 0, 0, 1, 2), Port.UP)
    assert nxt == tile(2, 0, 0, 2, 1)
    assert port == Port.UP  # gradient kept
    assert on_surface(OCTANT, nxt)


def test_step_off_surface_dead_ends():
    with pytest.raises(DeadEndError):
        step(OCTANT, tile(0, 0, 5, 1, 2), Port.UP)


def test_trace_hexagon_golden(hexcone):
    traj = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    assert traj.closed
    assert traj.tiles == HEX_TILES
    assert_valid_trajectory(traj)


def test_trace_straight_strip_truncates():
    traj = trace(OCTANT, tile(1, 0, 0, 1, 2), max_steps=20)
    assert not traj.closed
    assert len(traj) == 20
    assert_valid_trajectory(traj)


def test_trace_rejects_bad_start(hexcone):
    with pytest.raises(NotOnSurfaceError):
        trace(hexcone, tile(0, 0, 0, 1, 2))


def test_trace_reverse_direction(hexcone):
    fwd = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    rev = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50, start_port=Port.DOWN)
    assert rev.closed
    assert rev.tiles == (fwd.tiles[0],) + tuple(reversed(fwd.tiles[1:]))


def test_encode_hexagon(hexcone):
    traj = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    assert encode(traj, "D") == "DUDUDU"
    assert encode(traj, "U") == "UDUDUD"


def test_encode_constant_on_gradient_preserving_walk():
    traj = trace(OCTANT, tile(1, 0, 0, 1, 2), max_steps=12)
    assert encode(traj, "D") == "D" * 12


def test_encode_validates_input(hexcone):
    traj = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    with pytest.raises(ValueError):
        encode(traj, "X")
    with pytest.raises(ValueError):
        encode(Trajectory((), False))


def test_decode_goldens():
    got = decode("DUDUDD", tile(1, 1, 0, 3, 1))
    assert tuple(s.text() for s in got) == DECODE_DUDUDD
    assert decode("DUDUDU", tile(1, 1, 0, 3, 1)) == list(HEX_TILES)
    assert decode("D", tile(1, 1, 0, 3, 1)) == [tile(1, 1, 0, 3, 1)]


def test_decode_validates_alphabet():
    with pytest.raises(ValueError):
        decode("DUX", tile(1, 1, 0, 3, 1))
    with pytest.raises(ValueError):
        decode("", tile(1, 1, 0, 3, 1))


def test_codec_round_trip_random():
    rng = random.Random(21)
    for _ in range(120):
        code = "".join(rng.choice("UD") for _ in range(rng.randint(1, 24)))
        start = SlantTile(
            QPoint(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9)),
            *rng.choice([(a, b) for a in (1, 2, 3) for b in (1, 2, 3) if a != b]),
        )
        tiles = decode(code, start)
        assert encode(Trajectory(tuple(tiles), False), code[0]) == code


def test_closed_code_rotates_with_start(hexcone):
    base = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    code = encode(base, "D")
    for k, s in enumerate(base.tiles):
        rotated = trace(hexcone, s, max_steps=50)
        rcode = encode(rotated, "D")
        shifted = code[k:] + code[:k]
        assert rcode in (shifted, shifted.translate(str.maketrans("UD", "DU")))


def test_chart_cover_goldens(hexcone):
    two = chart_cover(decode("DUDUDD", tile(1, 1, 0, 3, 1)))
    assert [(c.start, c.stop) for c in two] == [(0, 4), (1, 5)]
    assert two[0].cone == hexcone
    assert two[1].cone == ConjUpSet((QPoint(0, 1, 1), QPoint(1, 0, 1)))

    one = chart_cover(list(HEX_TILES))
    assert [(c.start, c.stop) for c in one] == [(0, 5)]
    assert one[0].cone == hexcone

    single = chart_cover([tile(3, -1, 2, 2, 3)])
    assert single[0].cone == ConjUpSet((QPoint(3, -1, 2),))


def test_chart_cover_is_sound_on_random_codes():
    rng = random.Random(22)
    for _ in range(40):
        code = "".join(rng.choice("UD") for _ in range(rng.randint(1, 18)))
        tiles = decode(code, tile(0, 0, 0, 1, 2))
        charts = chart_cover(tiles)
        assert charts[0].start == 0 and charts[-1].stop == len(tiles) - 1
        for prev, cur in zip(charts, charts[1:]):
            assert cur.start <= prev.stop  # overlap
            assert cur.stop > prev.stop
        for c in charts:
            for s in tiles[c.start : c.stop + 1]:
                assert on_surface(c.cone, s)


def test_closed_trajectory_roofs_hexagon(hexcone):
    traj = trace(hexcone, tile(1, 1, 0, 3, 1), max_steps=50)
    w1, w2 = closed_trajectory_roofs(hexcone, traj)
    assert w1.qpoints() == (QPoint(0, 0, 0),)
    assert w2 == StdUpSet()


def test_closed_trajectory_roofs_requires_closed(hexcone):
    open_traj = trace(OCTANT, tile(1, 0, 0, 1, 2), max_steps=5)
    with pytest.raises(ValueError):
        closed_trajectory_roofs(OCTANT, open_traj)


def test_closed_trajectory_roofs_on_random_pits():
    rng = random.Random(23)
    done = 0
    while done < 12:
        w = conj_roof_generators(rand_pit_gens(rng, rng.randint(0, 2)))
        try:
            flats = norm(w)
        except Exception:
            continue
        for t in flats[:1]:
            traj = trace(w, section_at(w, t), max_steps=300)
            if traj.closed:
                closed_trajectory_roofs(w, traj)  # raises on violation
                done += 1


def test_first_chart_of_closed_walk_sits_inside_its_cone():
    rng = random.Random(25)
    done = 0
    while done < 10:
        w = conj_roof_generators(rand_pit_gens(rng, rng.randint(0, 2)))
        try:
            flats = norm(w)
        except Exception:
            continue
        if not flats:
            continue
        traj = trace(w, section_at(w, flats[0]), max_steps=300)
        if not traj.closed:
            continue
        first = chart_cover(list(traj.tiles))[0]
        for g in first.cone.generators:
            assert conj_contains(w, g)
        done += 1


def test_closed_trajectories_of_roof(hexcone):
    trajs = closed_trajectories_of_roof(hexcone)
    assert [(len(t), t.closed) for t in trajs] == [(6, True)]
    assert {flatten(s) for s in trajs[0].tiles} == set(norm(hexcone))
    assert closed_trajectories_of_roof(OCTANT) == []


def test_norm_partition_violation_is_reported():
    # this roof's norm leaks into open trajectories; it must not pass silently
    w = ConjUpSet((QPoint(-3, -2, 0), QPoint(0, -3, -2), QPoint(2, 1, -3)))
    with pytest.raises(NormPartitionError):
        closed_trajectories_of_roof(w)


def test_step_determinism_on_random_cones():
    rng = random.Random(24)
    for _ in range(15):
        w = ConjUpSet(rand_antichain(rng, 3, rng.randint(1, 5)))
        for t in flat_tiles_in(seed_window(list(w.generators), 3)):
            s = section_at(w, t)
            for port in (Port.UP, Port.DOWN):
                step(w, s, port)  # would raise on fork or dead end
