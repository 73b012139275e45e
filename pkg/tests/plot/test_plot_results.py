import pandas as pd
import plotly.graph_objects as go
import pytest

from convex_steiner.plot.plot_results import (
    _create_plot_layout,
    _create_summary_table,
    plot_domination_gap,
    plot_scaling,
)

SUMMARY = {
    "instances": 4,
    "gap_counts": {"0": 2, "1": 2},
    "max_gap": 1,
    "documented_stree_size": 3,
    "documented_oracle_size": 2,
}


@pytest.fixture
def measurements():
    return pd.DataFrame(
        {
            "m": [10, 10, 20, 20, 40, 40],
            "seconds": [1e-4, 1.2e-4, 8e-4, 9e-4, 6e-3, 7e-3],
        }
    )


@pytest.fixture
def audit():
    return pd.DataFrame({"trial": ["documented", "0", "1", "2"], "gap": [1, 0, 0, 1]})


# Tests for plot_scaling
def test_plot_scaling_traces(measurements):
    fit = {"intercept": -16.0, "exponent": 2.9}
    fig = plot_scaling(measurements, fit)
    assert isinstance(fig, go.Figure)
    assert [trace.name for trace in fig.data] == [
        "Measured",
        "Fit, exponent 2.90",
        "Cubic reference",
    ]
    assert fig.layout.xaxis.type == "log"


def test_plot_scaling_cubic_reference_starts_at_first_median(measurements):
    fig = plot_scaling(measurements, {"intercept": 0.0, "exponent": 3.0})
    cubic = fig.data[2].y
    assert cubic[0] == pytest.approx(1.1e-4)
    assert cubic[-1] == pytest.approx(1.1e-4 * 64)


# Tests for plot_domination_gap
def test_plot_domination_gap_bar_and_table(audit):
    fig = plot_domination_gap(audit, SUMMARY)
    bar, table = fig.data
    assert isinstance(bar, go.Bar)
    assert list(bar.x) == ["0", "1"]
    assert list(bar.y) == [2, 2]
    assert isinstance(table, go.Table)


# Tests for _create_summary_table
def test_create_summary_table_values():
    table = _create_summary_table(SUMMARY)
    assert list(table.cells.values[1]) == [4, 1, 3, 2]


# Tests for _create_plot_layout
def test_create_plot_layout():
    assert _create_plot_layout("Title", "x", "y") == {
        "title": "Title",
        "xaxis_title": "x",
        "yaxis_title": "y",
        "template": "plotly",
    }
