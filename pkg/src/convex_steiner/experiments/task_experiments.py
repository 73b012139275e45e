"""This script deploys tasks to run the acceptance experiments and store their
reports."""

import json

import pandas as pd
import pytask

from convex_steiner.config import (
    BLD,
    FIXTURES,
    SCALING_MAX_EXPONENT,
    SCALING_REPEATS,
    SRC,
)
from convex_steiner.experiments.harness import (
    fit_scaling_exponent,
    measure_scaling,
    run_domination_audit,
    run_interval_pipeline,
    run_oracle_sweep,
    run_vc_equivalence,
    summarize_domination_gap,
    summarize_matches,
)
from convex_steiner.experiments.paper_traces import replay_paper_traces

scripts = [
    SRC / "config.py",
    SRC / "experiments" / "harness.py",
    SRC / "experiments" / "paper_traces.py",
]

EQUIVALENCE_RUNS = {
    "sweep": run_oracle_sweep,
    "mixed": run_oracle_sweep,
    "vc": run_vc_equivalence,
    "interval": run_interval_pipeline,
}


def task_replay_paper_traces(
    scripts=scripts,
    fixtures=sorted(FIXTURES.glob("*.*")),
    produces=BLD / "experiments" / "paper_traces.json",
):
    """Task to replay the worked instances and store the diff report."""
    report = replay_paper_traces(FIXTURES)
    produces.write_text(json.dumps(report, indent=2, sort_keys=True), encoding="utf-8")


for name in EQUIVALENCE_RUNS:
    instances_path = BLD / "data" / f"{name}_instances.pkl"
    produces = {
        "results": BLD / "experiments" / f"{name}_results.pkl",
        "summary": BLD / "experiments" / f"{name}_summary.json",
    }

    @pytask.task(id=name)
    def task_run_equivalence(
        scripts=scripts,
        instances_path=instances_path,
        produces=produces,
        name=name,
    ):
        """Task to compare a solver pipeline with its oracle on a family."""
        results = EQUIVALENCE_RUNS[name](pd.read_pickle(instances_path))
        results.to_pickle(produces["results"])
        summary = json.dumps(summarize_matches(results), indent=2)
        produces["summary"].write_text(summary, encoding="utf-8")


def task_run_domination_audit(
    scripts=scripts,
    instances_path=BLD / "data" / "domination_instances.pkl",
    produces={
        "audit": BLD / "experiments" / "domination_audit.pkl",
        "summary": BLD / "experiments" / "domination_summary.json",
    },
):
    """Task to audit the dominating sets and store the size gap report."""
    audit = run_domination_audit(pd.read_pickle(instances_path))
    audit.to_pickle(produces["audit"])
    summary = json.dumps(summarize_domination_gap(audit), indent=2)
    produces["summary"].write_text(summary, encoding="utf-8")


def task_measure_scaling(
    scripts=scripts,
    instances_path=BLD / "data" / "scaling_instances.pkl",
    produces={
        "measurements": BLD / "experiments" / "scaling_measurements.pkl",
        "fit": BLD / "experiments" / "scaling_fit.json",
    },
):
    """Task to time the dynamic program and fit its growth exponent."""
    measurements = measure_scaling(pd.read_pickle(instances_path), SCALING_REPEATS)
    measurements.to_pickle(produces["measurements"])
    fit = fit_scaling_exponent(measurements, SCALING_MAX_EXPONENT)
    produces["fit"].write_text(json.dumps(fit, indent=2), encoding="utf-8")
