import json
import math

import pytest

from lpbus.bus_sim import (
    BusParams,
    compare,
    count_switches,
    energy,
    synth_trace,
)
from lpbus.codec import CodecConfig
from lpbus.errors import InvalidArgumentError, InvalidTraceError
from lpbus.trace import Trace, parse_trace, read_trace, write_trace


def naive_switches(strings):
    return [sum(a != b for a, b in zip(u, v)) for u, v in zip(strings, strings[1:])]


def test_switch_count_examples():
    assert count_switches(parse_trace("00000\n11111\n00000\n")) == [5, 5]
    assert count_switches(parse_trace("0110\n0110\n0110\n")) == [0, 0]
    assert count_switches(parse_trace("000111\n111000\n")) == [6]
    assert count_switches(parse_trace("1010\n")) == []
    with pytest.raises(InvalidTraceError):
        count_switches(Trace(4, ()))


def test_switch_count_matches_characterwise_comparison():
    trace = synth_trace("random", 11, 300, seed=4)
    strings = [str(w) for w in trace.words]
    assert count_switches(trace) == naive_switches(strings)


def test_energy_example():
    trace = parse_trace("00000\n11111\n00000\n")
    report = energy(trace, BusParams(10e-12, 3.3))
    assert report.total_switches == 10
    assert math.isclose(report.energy_joules, 1.089e-9, rel_tol=1e-12)
    assert report.avg_power_watts is None
    assert "avg_power_watts" not in report.to_dict()


def test_average_power_is_energy_over_elapsed_time():
    trace = synth_trace("alternating", 8, 101)
    report = energy(trace, BusParams(2e-12, 1.2, 1e8))
    assert report.cycles == 100
    assert math.isclose(report.avg_power_watts, report.energy_joules * 1e8 / 100, rel_tol=1e-12)
    # every cycle toggles all 8 wires
    assert math.isclose(report.avg_power_watts, 8 * 2e-12 * 1.2**2 * 1e8, rel_tol=1e-12)


def test_alternating_trace_toggles_every_wire():
    for k in (1, 5, 8, 16):
        report = energy(synth_trace("alternating", k, 50), BusParams(1e-12, 1.0))
        assert report.per_cycle == [k] * 49
        assert report.total_switches == 49 * k


def test_synth_examples():
    assert synth_trace("counter", 3, 10).to_ints() == [0, 1, 2, 3, 4, 5, 6, 7, 0, 1]
    assert synth_trace("alternating", 4, 3).to_ints() == [0, 15, 0]
    a = synth_trace("random", 9, 40, seed=12)
    assert a == synth_trace("random", 9, 40, seed=12)
    assert a != synth_trace("random", 9, 40, seed=13)
    assert a.source == "synth:random:width=9:length=40:seed=12"


def test_synth_errors():
    with pytest.raises(InvalidArgumentError, match="seed"):
        synth_trace("random", 4, 10)
    with pytest.raises(InvalidArgumentError):
        synth_trace("zigzag", 4, 10)
    with pytest.raises(InvalidArgumentError):
        synth_trace("counter", 4, 0)


def test_bus_params_validation():
    for bad in [(0, 1.0), (1e-12, -1.0), (float("nan"), 1.0)]:
        with pytest.raises(InvalidArgumentError):
            BusParams(*bad)
    with pytest.raises(InvalidArgumentError):
        BusParams(1e-12, 1.0, 0)


def test_compare_bounds_encoded_switching():
    cfg = CodecConfig.create(5, 4)
    raw = synth_trace("alternating", 5, 20)
    result = compare(raw, cfg, BusParams(1e-12, 1.0))
    assert result.raw.max_switches == 5
    assert result.encoded.max_switches <= 4
    assert result.encoded.width == 8
    data = json.loads(json.dumps(result.to_dict()))
    assert data["delta_guarantee"] == 4
    with pytest.raises(InvalidTraceError):
        compare(synth_trace("counter", 4, 3), cfg, BusParams(1e-12, 1.0))


def test_trace_text_format(tmp_path):
    trace = parse_trace("# header\n0x5\n1000\n\n0xf\n", width=4)
    assert [str(w) for w in trace.words] == ["0101", "1000", "1111"]
    assert parse_trace("0011\n0x3\n").to_ints() == [3, 3]
    with pytest.raises(InvalidTraceError, match="line 2"):
        parse_trace("0011\n001\n")
    with pytest.raises(InvalidTraceError, match="line 1"):
        parse_trace("0x3\n")
    with pytest.raises(InvalidTraceError, match="line 3"):
        parse_trace("01\n10\n0x9\n")
    with pytest.raises(InvalidTraceError, match="line 1"):
        parse_trace("01x1\n")
    path = tmp_path / "t.trace"
    write_trace(path, trace)
    again = read_trace(path)
    assert again == trace and again.source == str(path)


def test_single_word_trace_has_zero_energy():
    report = energy(parse_trace("1011\n"), BusParams(1e-12, 1.0, 1e6))
    assert (report.cycles, report.energy_joules, report.avg_power_watts) == (0, 0.0, 0.0)


def test_constant_trace_compares_to_zero():
    cfg = CodecConfig.create(6, 4)
    result = compare(Trace.from_ints(6, [37] * 10), cfg, BusParams(1e-12, 1.0))
    assert result.raw.total_switches == result.encoded.total_switches == 0


@pytest.mark.parametrize("kind", ["random", "counter", "alternating"])
def test_total_switches_bounded_by_all_switch_count(kind):
    trace = synth_trace(kind, 6, 500, seed=1)
    report = energy(trace, BusParams(1e-12, 1.0))
    assert report.total_switches <= report.cycles * 6
    assert (report.total_switches == report.cycles * 6) == (kind == "alternating")
