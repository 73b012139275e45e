"""Configuration file for the Steiner experiments.

Parameters:
    SEED (int): Base seed of every random family. Can be overridden with the
        environment variable CONVEX_STEINER_SEED.
    TERMINAL_CASES (list of str): The five terminal cases drawn by the sweeps.
    SWEEP_TRIALS (int): Random instances in the oracle equivalence sweep.
    SWEEP_MAX_M (int): Largest X side in the oracle equivalence sweep.
    SWEEP_MAX_N (int): Largest Y side in the oracle equivalence sweep.
    SWEEP_DENSITIES (list of float): Mean interval length fractions drawn from.
    LIFT_TRIALS (int): Random mixed terminal instances checked against the oracle.
    VC_TRIALS (int): Random graphs in the vertex cover equivalence check.
    VC_MAX_VERTICES (int): Largest graph in the vertex cover equivalence check.
    VC_MAX_EDGES (int): Edge cap of the vertex cover graphs, which bounds the
        non-terminals of the reduced Steiner instance.
    INTERVAL_TRIALS (int): Random interval families in the interval pipeline check.
    INTERVAL_MAX_N (int): Largest interval family in the interval pipeline check.
    DOMINATION_TRIALS (int): Random instances in the domination audit.
    ORACLE_MAX_STEINER_CANDIDATES (int): Size guard of the Steiner oracle on the
        number of non-terminal vertices.
    ORACLE_MAX_COVER_VERTICES (int): Size guard of the vertex cover oracle.
    ORACLE_MAX_DOMINATING_VERTICES (int): Size guard of the dominating set oracle.
    SCALING_SIZES (list of int): X side sizes of the scaling families, each with as
        many Y vertices as X vertices.
    SCALING_REPEATS (int): Timed repetitions per scaling family member.
    SCALING_DENSITY (float): Mean interval length fraction of the scaling families.
    SCALING_MAX_EXPONENT (float): Largest accepted fitted log-log exponent.
"""

import os
from pathlib import Path

SRC = Path(__file__).parent.resolve()
ROOT = SRC.joinpath("..", "..").resolve()

BLD = ROOT.joinpath("bld").resolve()
FIXTURES = SRC.joinpath("fixtures").resolve()

# Reproducibility
SEED = int(os.environ.get("CONVEX_STEINER_SEED", "20240611"))

# Terminal cases
TERMINAL_CASES = ["all_x", "subset_x", "all_y", "subset_y", "mixed"]

# Acceptance sweeps
SWEEP_TRIALS = 1000
SWEEP_MAX_M = 8
SWEEP_MAX_N = 6
SWEEP_DENSITIES = [0.2, 0.35, 0.5]
LIFT_TRIALS = 500
VC_TRIALS = 200
VC_MAX_VERTICES = 7
VC_MAX_EDGES = 8
INTERVAL_TRIALS = 200
INTERVAL_MAX_N = 8
DOMINATION_TRIALS = 500

# Oracle size guards
ORACLE_MAX_STEINER_CANDIDATES = 24
ORACLE_MAX_COVER_VERTICES = 24
ORACLE_MAX_DOMINATING_VERTICES = 24

# Scaling check
SCALING_SIZES = [10, 20, 40, 80]
SCALING_REPEATS = 3
SCALING_DENSITY = 0.15
SCALING_MAX_EXPONENT = 3.5
