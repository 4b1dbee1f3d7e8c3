#!/usr/bin/env python

"""
Figure Script for Markoff.

Prints the tables behind the regenerated figures: the decorated tree, Frobenius expansions and
snakes, LEs with square expansions, the periodic R- and T-spectra, interval covers, the decorated
number table and the Zagier deviations. With --output-dir every table is written to its own file,
ready for plotting elsewhere.

Usage:

```bash
python scripts/render_figures.py --names tree les --depth 3
python scripts/render_figures.py --output-dir ./figures --format csv
```

Various configuration options are available:
╭───────────────────────────────────────────────────────────────────────────────────────────────────────────╮
| Options       | Description                                   | Type   | Default                          |
|---------------|-----------------------------------------------|--------|----------------------------------|
| --names       | Figures to print; all when empty.             | str    | ()                               |
| --depth       | Deepest tree level.                           | int    | 3                                |
| --precision   | Decimal digits of printed irrationals.        | int    | 12                               |
| --ks          | Exponents of the deviation table.             | int    | 0 10 20 50 100                   |
| --rows        | Rows of the decorated number table.           | int    | 20                               |
| --format      | Output format of the tables.                  | str    | tsv                              |
| --output-dir  | Write one file per figure to this directory.  | str    | None                             |
| --quiet       | Suppress status lines.                        | bool   | False                            |
| --yaml-path   | YAML file overriding the defaults.            | str    | None                             |
╰───────────────────────────────────────────────────────────────────────────────────────────────────────────╯
"""

import os
import sys
from typing import List

from markoff.configs import FiguresConfig
from markoff.errors import MarkoffError
from markoff.figures import FigureSettings, FigureTable, figure_tables
from markoff.utils import log_utils
from markoff.utils.config_utils import cli_with_yaml


def print_tables(tables: List[FigureTable], fmt: str) -> None:
    for table in tables:
        sys.stdout.write(f"# {table.title}\n")
        if table.name == "snake":
            for index, reading, diagram in table.rows:
                sys.stdout.write(f"{index}  [{reading}]\n{diagram}\n")
        else:
            sys.stdout.write(table.render(fmt))
        sys.stdout.write("\n")


def save_tables(tables: List[FigureTable], fmt: str, output_dir: str) -> None:
    os.makedirs(output_dir, exist_ok=True)
    for table in tables:
        path = os.path.join(output_dir, f"{table.name}.{fmt}")
        with open(path, "w", newline="\n") as f:
            f.write(table.render(fmt))
        log_utils.info(f"Saved {table.name} to {path}.")


def main():
    try:
        cfg = cli_with_yaml(FiguresConfig)
        log_utils.set_quiet(cfg.quiet)
        settings = FigureSettings(depth=cfg.depth, precision=cfg.precision, ks=cfg.ks, rows=cfg.rows)
        tables = figure_tables(cfg.names, settings)
        if cfg.output_dir is None:
            print_tables(tables, cfg.format)
        else:
            save_tables(tables, cfg.format, cfg.output_dir)
    except (MarkoffError, OSError) as exc:
        log_utils.error(str(exc))
        sys.exit(2)


if __name__ == "__main__":
    main()
