"""This script deploys functions to visualize the scaling check and the domination
audit."""

import numpy as np
import pandas as pd
import plotly.graph_objects as go
from plotly.subplots import make_subplots

pd.options.mode.copy_on_write = True
pd.options.future.infer_string = True
pd.options.plotting.backend = "plotly"


def plot_scaling(measurements, fit):
    """Plot the dynamic program wall times on log-log axes with the fitted line.

    Args:
        measurements (pd.DataFrame): Output of measure_scaling with columns m and
            seconds.
        fit (dict): Output of fit_scaling_exponent.

    Returns:
        (go.Figure) Figure with the timings, the fit and a cubic reference line.
    """
    sizes = np.array(sorted(measurements["m"].unique()), dtype=float)
    fitted = np.exp(fit["intercept"]) * sizes ** fit["exponent"]
    medians = measurements.groupby("m")["seconds"].median()
    cubic = medians.iloc[0] * (sizes / sizes[0]) ** 3

    fig = go.Figure()
    fig.add_trace(
        go.Scatter(
            x=measurements["m"],
            y=measurements["seconds"],
            mode="markers",
            name="Measured",
        )
    )
    fig.add_trace(
        go.Scatter(
            x=sizes,
            y=fitted,
            mode="lines",
            name=f"Fit, exponent {fit['exponent']:.2f}",
        )
    )
    fig.add_trace(
        go.Scatter(
            x=sizes,
            y=cubic,
            mode="lines",
            line={"dash": "dash"},
            name="Cubic reference",
        )
    )
    fig.update_layout(_create_plot_layout("Dynamic program wall time", "m", "Seconds"))
    fig.update_xaxes(type="log")
    fig.update_yaxes(type="log")
    return fig


def plot_domination_gap(audit, summary):
    """Plot the size gap histogram of the domination audit with a summary table.

    Args:
        audit (pd.DataFrame): Output of run_domination_audit.
        summary (dict): Output of summarize_domination_gap.

    Returns:
        (go.Figure) Figure with the gap counts and the documented instance.
    """
    fig = make_subplots(
        rows=2,
        cols=1,
        row_heights=[0.65, 0.35],
        vertical_spacing=0.15,
        specs=[[{"type": "xy"}], [{"type": "domain"}]],
    )
    counts = audit["gap"].value_counts().sort_index()
    fig.add_trace(
        go.Bar(x=counts.index.astype(str), y=counts.to_numpy(), name="Instances"),
        row=1,
        col=1,
    )
    fig.add_trace(_create_summary_table(summary), row=2, col=1)
    fig.update_layout(
        _create_plot_layout(
            "Dominating set from two Steiner sets versus the minimum",
            "Size gap",
            "Instances",
        )
    )
    return fig


def _create_summary_table(summary):
    """Create a Plotly table for the audit summary."""
    table = go.Table(
        header={
            "values": ["Metric", "Value"],
            "fill_color": "lightgrey",
            "align": "center",
        },
        cells={
            "values": [
                [
                    "Instances",
                    "Largest gap",
                    "Path on x1..x3, Steiner union size",
                    "Path on x1..x3, minimum size",
                ],
                [
                    summary["instances"],
                    summary["max_gap"],
                    summary["documented_stree_size"],
                    summary["documented_oracle_size"],
                ],
            ],
            "align": "left",
        },
    )
    return table


def _create_plot_layout(title, xaxis_title, yaxis_title):
    """Create the layout configuration for the Plotly figure."""
    layout = {
        "title": title,
        "xaxis_title": xaxis_title,
        "yaxis_title": yaxis_title,
        "template": "plotly",
    }
    return layout
