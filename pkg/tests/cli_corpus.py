"""Frozen CLI invocations over the static corpus in tests/data.

Each entry is (argv-template, expected-exit-code).  The placeholder OUT is
replaced with a per-run output path before execution; bare file names are
resolved against the data directory.  The list exercises every corpus file
at least once.
"""

from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

DATA_DIR = Path(__file__).parent / "data"

CORPUS_FILES = (
    "p2.og",
    "p5.ug",
    "c4_odd.og",
    "c4_elementary.og",
    "c6_elementary.og",
    "c6_r2.og",
    "c8_nonuniform.og",
    "k23_elementary.og",
    "q3_elementary.og",
    "k44.ug",
    "k4.ug",
    "k13_star.og",
)

CORPUS_COMMANDS = (
    (("spectrum", "p2.og"), 0),
    (("spectrum", "p5.ug"), 0),
    (("spectrum", "c4_odd.og"), 0),
    (("spectrum", "--adjacency", "k13_star.og"), 0),
    (("spectrum", "k44.ug"), 0),
    (("check", "c4_elementary.og"), 0),
    (("check", "c6_elementary.og"), 0),
    (("check", "c6_r2.og"), 1),
    (("check", "c8_nonuniform.og"), 1),
    (("check", "q3_elementary.og"), 0),
    (("check", "k23_elementary.og"), 0),
    (("equiv", "c4_odd.og", "c4_elementary.og"), 1),
    (("equiv", "c6_elementary.og", "c6_r2.og"), 1),
    (("switch", "c4_elementary.og", "OUT", "--set", "0,2"), 0),
    (("product", "p2.og", "c4_odd.og", "OUT", "--verify"), 0),
    (("search", "k44.ug"), 0),
    (("search", "k4.ug"), 0),
    (("family", "OUT", "--base", "k44", "--r", "1"), 0),
    (("family", "OUT", "--base", "c4", "--r", "2"), 0),
)


def resolve_command(template, out_path):
    """Expand a template into concrete argv, substituting paths."""
    argv = []
    for token in template:
        if token == "OUT":
            argv.append(str(out_path))
        elif token.endswith(".og") or token.endswith(".ug"):
            argv.append(str(DATA_DIR / token))
        else:
            argv.append(token)
    return argv


def run_command(argv):
    """Run the CLI in a subprocess with a clean tolerance environment."""
    env = dict(os.environ)
    env.pop("SKEWSPEC_TOL", None)
    return subprocess.run(
        [sys.executable, "-m", "skewspec", *argv],
        capture_output=True,
        env=env,
    )
