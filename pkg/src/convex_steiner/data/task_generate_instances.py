"""This script deploys a task to generate the random instance families."""

import pytask

from convex_steiner.config import (
    BLD,
    DOMINATION_TRIALS,
    INTERVAL_MAX_N,
    INTERVAL_TRIALS,
    LIFT_TRIALS,
    SCALING_DENSITY,
    SCALING_SIZES,
    SEED,
    SRC,
    SWEEP_DENSITIES,
    SWEEP_MAX_M,
    SWEEP_MAX_N,
    SWEEP_TRIALS,
    TERMINAL_CASES,
    VC_MAX_EDGES,
    VC_MAX_VERTICES,
    VC_TRIALS,
)
from convex_steiner.data.families import (
    domination_family,
    interval_family,
    scaling_family,
    sweep_family,
    vc_family,
)

scripts = [
    SRC / "config.py",
    SRC / "data" / "generators.py",
    SRC / "data" / "families.py",
]

FAMILIES = {
    "sweep": lambda: sweep_family(
        SEED, SWEEP_TRIALS, SWEEP_MAX_M, SWEEP_MAX_N, SWEEP_DENSITIES, TERMINAL_CASES
    ),
    "mixed": lambda: sweep_family(
        SEED + 1, LIFT_TRIALS, SWEEP_MAX_M, SWEEP_MAX_N, SWEEP_DENSITIES, ["mixed"]
    ),
    "interval": lambda: interval_family(SEED + 2, INTERVAL_TRIALS, INTERVAL_MAX_N),
    "vc": lambda: vc_family(SEED + 3, VC_TRIALS, VC_MAX_VERTICES, VC_MAX_EDGES),
    "domination": lambda: domination_family(
        SEED + 4, DOMINATION_TRIALS, SWEEP_MAX_M, SWEEP_MAX_N
    ),
    "scaling": lambda: scaling_family(SEED + 5, SCALING_SIZES, SCALING_DENSITY),
}

for name in FAMILIES:
    produces = BLD / "data" / f"{name}_instances.pkl"

    @pytask.task(id=name)
    def task_generate_instances(scripts=scripts, produces=produces, name=name):
        """Task to generate an instance family and store it in the bld folder."""
        FAMILIES[name]().to_pickle(produces)
