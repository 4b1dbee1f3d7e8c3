#!/usr/bin/env python

"""
Zagier Sweep Script for Markoff.

Counts the Markoff numbers up to 10^k for a range of exponents k, writes the deviations of M(10^k)
from C (log n)^2 and C (log 3n)^2 to a sweep file and prints the least-squares fit of the first one.

Usage:

```bash
python scripts/zagier_sweep.py --stop 300 --step 10 --output ./zagier.csv
```

Settings are read from ./configs/zagier.yaml when it exists; flags override the file.
Various configuration options are available:
╭───────────────────────────────────────────────────────────────────────────────────────────────────────────╮
| Options       | Description                                   | Type   | Default                          |
|---------------|-----------------------------------------------|--------|----------------------------------|
| --start       | Smallest exponent k.                          | int    | 0                                |
| --stop        | Largest exponent k, included.                 | int    | 300                              |
| --step        | Distance between consecutive exponents.       | int    | 10                               |
| --precision   | Decimal digits for the logarithms.            | int    | 64                               |
| --threads     | Worker processes for the enumeration.         | int    | 1                                |
| --output      | Sweep file to write.                          | str    | ./zagier.csv                     |
| --format      | Format of the sweep file.                     | str    | csv                              |
| --fit         | Print the least-squares fit.                  | bool   | True                             |
| --quiet       | Suppress status lines and progress bars.      | bool   | False                            |
| --yaml-path   | YAML file overriding the defaults.            | str    | ./configs/zagier.yaml            |
╰───────────────────────────────────────────────────────────────────────────────────────────────────────────╯
"""

import sys

from markoff.census import SWEEP_COLUMNS, regression, zagier_sweep
from markoff.configs import SweepConfig
from markoff.errors import InputError, MarkoffError
from markoff.utils import log_utils
from markoff.utils.config_utils import cli_with_yaml
from markoff.utils.format_utils import render_mapping, render_rows


def sweep(cfg: SweepConfig) -> None:
    if cfg.step < 1 or cfg.start > cfg.stop:
        raise InputError(f"empty exponent range {cfg.start}..{cfg.stop} step {cfg.step}")
    ks = range(cfg.start, cfg.stop + 1, cfg.step)
    log_utils.info(f"Counting Markoff numbers up to 10^{ks[-1]} with {cfg.threads} worker(s)...")
    rows = zagier_sweep(ks, cfg.precision, cfg.threads, progress=not cfg.quiet)

    with open(cfg.output, "w", newline="\n") as f:
        f.write(render_rows((row.cells() for row in rows), SWEEP_COLUMNS, cfg.format))
    log_utils.info(f"Saved {len(rows)} rows to {cfg.output}.")

    if cfg.fit:
        if len(rows) < 3:
            log_utils.warn("fewer than three exponents, skipping the fit")
        else:
            sys.stdout.write(render_mapping(regression(rows).summary(), "tsv"))


def main():
    try:
        cfg = cli_with_yaml(SweepConfig, fallback=SweepConfig.yaml_path)
        log_utils.set_quiet(cfg.quiet)
        sweep(cfg)
    except (MarkoffError, OSError) as exc:
        log_utils.error(str(exc))
        sys.exit(2)


if __name__ == "__main__":
    main()
