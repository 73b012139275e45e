"""This script deploys a task to plot the scaling check and the domination audit."""

import json

import pandas as pd

from convex_steiner.config import BLD, SRC
from convex_steiner.plot.plot_results import plot_domination_gap, plot_scaling

scripts = [
    SRC / "config.py",
    SRC / "plot" / "plot_results.py",
]


def task_plot_scaling(
    scripts=scripts,
    measurements_path=BLD / "experiments" / "scaling_measurements.pkl",
    fit_path=BLD / "experiments" / "scaling_fit.json",
    produces=BLD / "plot" / "plot_scaling.html",
):
    """Task to plot the dynamic program wall times."""
    measurements = pd.read_pickle(measurements_path)
    fit = json.loads(fit_path.read_text(encoding="utf-8"))
    fig = plot_scaling(measurements, fit)
    fig.write_html(produces)


def task_plot_domination_gap(
    scripts=scripts,
    audit_path=BLD / "experiments" / "domination_audit.pkl",
    summary_path=BLD / "experiments" / "domination_summary.json",
    produces=BLD / "plot" / "plot_domination_gap.html",
):
    """Task to plot the size gap of the domination audit."""
    audit = pd.read_pickle(audit_path)
    summary = json.loads(summary_path.read_text(encoding="utf-8"))
    fig = plot_domination_gap(audit, summary)
    fig.write_html(produces)
