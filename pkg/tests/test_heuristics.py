import csv
import io
import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from loopmesh import heuristics as h
from loopmesh.errors import InvalidDimensionError, InvalidInputError, UnknownConfigError

# kept away from 0 so large-N powers do not underflow
eta = st.floats(0.3, 0.999)


def test_spatial():
    assert h.eta_spatial(1.0, 10) == 1.0
    assert h.eta_spatial(0.987, 1) == 0.987
    assert h.eta_spatial(0.987, 50) == pytest.approx(0.5198, abs=5e-4)
    with pytest.raises(InvalidDimensionError):
        h.eta_spatial(0.9, 0)
    with pytest.raises(InvalidInputError):
        h.eta_spatial(1.1, 3)


def test_dual_loop():
    assert h.eta_dual_loop(1, 1, 1, 1, 7) == 1.0
    g, s, i = 0.8, 0.9, 0.7
    assert h.eta_dual_loop(g, s, i, 0.3, 2) == pytest.approx(g * g * s * s * i, rel=1e-14)
    assert h.eta_dual_loop(0.6, 0.75, 0.9, 0.8, 4) == pytest.approx(1.0156e-3, abs=1e-6)
    with pytest.raises(InvalidDimensionError):
        h.eta_dual_loop(0.9, 0.9, 0.9, 0.9, 1)


def test_chain_loop():
    assert h.eta_chain_loop(1, 1, 5) == 1.0
    assert h.eta_chain_loop(0.7, 0.8, 2) == pytest.approx(0.392, rel=1e-14)
    assert h.eta_chain_loop(0.9998, 0.9906, 50) == pytest.approx(0.617, abs=2e-3)
    with pytest.raises(InvalidDimensionError):
        h.eta_chain_loop(0.9, 0.9, 1)


def test_per_layer_ratio():
    assert h.per_layer_ratio(1, 1, 9) == 1
    assert h.per_layer_ratio(0.75, 0.8, 4) == pytest.approx(0.2304, rel=1e-14)


@settings(max_examples=100, deadline=None)
@given(eta, eta, eta, eta, st.integers(2, 40))
def test_dual_is_chain_times_excess(g, s, i, b, n):
    eta_o = b ** n
    lhs = h.eta_dual_loop(g, s, i, b, n)
    rhs = h.eta_chain_loop(g, i, n) * h.per_layer_ratio(s, b, n) ** (n - 1) / eta_o
    assert lhs == pytest.approx(rhs, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(eta, eta, eta, eta, st.integers(2, 30))
def test_monotone(g, s, i, b, n):
    bump = lambda x: x + (1 - x) / 2
    assert h.eta_chain_loop(bump(g), i, n) > h.eta_chain_loop(g, i, n)
    assert h.eta_chain_loop(g, bump(i), n) > h.eta_chain_loop(g, i, n)
    assert h.eta_chain_loop(g, i, n + 1) <= h.eta_chain_loop(g, i, n)
    base = h.eta_dual_loop(g, s, i, b, n)
    assume(base > 1e-250)
    assert h.eta_dual_loop(bump(g), s, i, b, n) > base
    assert h.eta_dual_loop(g, bump(s), i, b, n) > base
    assert h.eta_dual_loop(g, s, bump(i), b, n) > base
    if n > 2:
        assert h.eta_dual_loop(g, s, i, bump(b), n) > base
    assert h.eta_dual_loop(g, s, i, b, n + 1) <= base
    assert h.eta_spatial(bump(g), n) > h.eta_spatial(g, n)
    assert h.eta_spatial(g, n + 1) <= h.eta_spatial(g, n)


def test_threshold():
    assert h.chain_competitive_threshold(1, 1, 1, 1) == 1
    assert h.chain_competitive_threshold(0.93, 1.0, 0.8, 0.8) == pytest.approx(0.93, rel=1e-15)
    assert h.chain_competitive_threshold(0.9604, 0.9146, 0.9951, 0.9188) == pytest.approx(0.9141, abs=5e-4)
    with pytest.raises(InvalidInputError):
        h.chain_competitive_threshold(0.9, 0.9, 0.9, 0.0)


def test_transmission_from_loss():
    assert h.transmission_from_loss(123.0, 0) == 1
    assert h.transmission_from_loss(2.7, 0.13627) == pytest.approx(0.9188, abs=5e-4)
    assert h.transmission_from_loss(240, 235e-6) == pytest.approx(0.987, abs=5e-4)
    with pytest.raises(InvalidInputError):
        h.transmission_from_loss(-1, 1)


def test_loop_length():
    assert h.loop_length(0, 1.7) == 0
    assert h.loop_length(1e-9, 2.2) == pytest.approx(0.13627, abs=1e-5)
    assert h.loop_length(1e-8, 1.4) == pytest.approx(2.1414, abs=1e-4)


def test_catalog_contents():
    cat = {e.name: e for e in h.catalog()}
    assert list(cat) == ["DL_FS", "CL_FS", "CL_INT_CURRENT", "CL_INT_FUTURE", "SE_INT_CURRENT", "SE_INT_OPTIMISTIC"]
    assert cat["CL_INT_CURRENT"].eta_gate == 0.7943
    assert cat["DL_FS"].eta_switch == 0.9146
    assert cat["CL_INT_FUTURE"].eta_inner == 0.9906
    dl = cat["DL_FS"]
    assert (dl.eta_inner, dl.outer_base, dl.eta_gate, dl.tau) == (1.0, 0.9999, 0.9604, 1e-8)
    assert (cat["CL_FS"].eta_inner, cat["CL_FS"].eta_gate, cat["CL_FS"].tau) == (1.0, 0.9604, 1e-8)
    assert (cat["CL_INT_CURRENT"].eta_inner, cat["CL_INT_CURRENT"].tau) == (0.9188, 1e-9)
    assert (cat["CL_INT_FUTURE"].eta_gate, cat["CL_INT_FUTURE"].tau) == (0.9998, 1e-9)
    assert cat["SE_INT_CURRENT"].eta_gate == 0.987 and cat["SE_INT_OPTIMISTIC"].eta_gate == 0.998
    # inapplicable fields are absent, not silently 1
    assert cat["CL_FS"].eta_switch is None and cat["CL_FS"].outer_base is None
    assert cat["SE_INT_CURRENT"].eta_inner is None
    for e in cat.values():
        for v in (e.eta_gate, e.eta_switch, e.eta_inner, e.outer_base):
            assert v is None or 0 < v <= 1
        assert e.provenance


def test_catalog_unknown_name():
    with pytest.raises(UnknownConfigError, match="valid names: DL_FS"):
        h.catalog_entry("nope")


def test_catalog_csv():
    rows = list(csv.DictReader(io.StringIO(h.catalog_csv())))
    assert len(rows) == 6
    assert list(rows[0]) == list(h.CATALOG_COLUMNS)
    assert rows[1]["eta_switch"] == ""


def test_feasibility():
    assert h.bs_feasibility(0.75, 50) is h.Verdict.FEASIBLE
    assert h.bs_feasibility(0.617, 50) is h.Verdict.INFEASIBLE
    assert h.bs_feasibility(0.9, 30) is h.Verdict.UNKNOWN_N
    assert h.bs_feasibility(0.9, 30, {30: 0.8}) is h.Verdict.FEASIBLE


def test_physical_params():
    p = h.PhysicalParams(2.7, h.loop_length(1e-9, 2.2), 1e-9, 2.2)
    assert p.transmission() == pytest.approx(0.9188, abs=5e-4)
    with pytest.raises(InvalidInputError):
        h.PhysicalParams(1.0, 1.0, refractive_index=0.5)


def test_db_conversion():
    assert h.db_to_transmission(10) == pytest.approx(0.1)
    assert h.db_to_transmission(1.0) == pytest.approx(10 ** -0.1)
    assert math.isclose(h.db_to_transmission(0), 1)
