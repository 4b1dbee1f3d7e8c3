"""
Markoff CLI

Usage:

To print the decorated tree down to level 3, use the following command:

```
markoff tree --depth 3
```

Subcommands:
╭───────────────────────────────────────────────────────────────────────────────────────────────────────────╮
| Command       | Description                                                                               |
|---------------|-------------------------------------------------------------------------------------------|
| tree          | Decorated Markoff tree, single nodes, branches, growth and integer sequences.             |
| frobenius     | Frobenius expansions m/r = [2, S(mu, nu), 2], snakes, complements and reconstruction.     |
| tsing         | T-singularities: LEs, square expansions, HJ chains, related expansions and juxtaposition. |
| cantor        | Limit points, interval covers, gap sums, measure certificates and d-ratios.               |
| census        | Markoff numbers below a bound, uniqueness, Zagier deviations and decorated tables.        |
| verify        | Exact identity and certificate suites.                                                    |
| regression    | Least-squares fit of a deviation sweep file.                                              |
╰───────────────────────────────────────────────────────────────────────────────────────────────────────────╯

Common options:
╭───────────────────────────────────────────────────────────────────────────────────────────────────────────╮
| Options       | Description                                   | Type   | Default                          |
|---------------|-----------------------------------------------|--------|----------------------------------|
| --depth       | Deepest tree level.                           | int    | 3                                |
| --bound       | Census bound (1e100, 10^100, 10**100).        | str    | 1e100                            |
| --precision   | Decimal digits of printed or computed values. | int    | 30 (cantor), 64 (census)         |
| --format      | Output format.                                | str    | tsv (csv for census)             |
| --threads     | Worker processes for the census.              | int    | 1                                |
| --quiet       | Suppress status lines and progress bars.      | bool   | False                            |
| --yaml-path   | YAML file overriding the defaults.            | str    | None                             |
╰───────────────────────────────────────────────────────────────────────────────────────────────────────────╯

Exit status: 0 on success, 1 when a verification fails, 2 on invalid input or arguments.
"""

import sys
from typing import Annotated, Any, Dict, List, Optional, Sequence, Union

import tyro

from markoff.cli.commands import HANDLERS
from markoff.configs import (
    CantorConfig,
    CensusConfig,
    FrobeniusConfig,
    RegressionConfig,
    TreeConfig,
    TSingConfig,
    VerifyConfig,
)
from markoff.errors import InputError, ResourceLimit, VerificationError
from markoff.utils import log_utils
from markoff.utils.config_utils import defaults_with_yaml

COMMANDS = {
    "tree": TreeConfig,
    "frobenius": FrobeniusConfig,
    "tsing": TSingConfig,
    "cantor": CantorConfig,
    "census": CensusConfig,
    "verify": VerifyConfig,
    "regression": RegressionConfig,
}

DESCRIPTIONS = {
    "tree": "Decorated Markoff tree.",
    "frobenius": "Frobenius expansions and snake diagrams.",
    "tsing": "T-singularities and square continued fractions.",
    "cantor": "Limit points and the Cantor sets of slopes.",
    "census": "Markoff numbers below a bound.",
    "verify": "Exact identity and certificate suites.",
    "regression": "Fit a deviation sweep file.",
}


def command_defaults(argv: Sequence[str]) -> Dict[str, Any]:
    """
    Default config of every subcommand, with the YAML file of the chosen one applied.

    Args:
        argv (Sequence[str]): Arguments after the program name.

    Returns:
        Dict[str, Any]: Config instance per subcommand name.
    """

    defaults = {name: cls() for name, cls in COMMANDS.items()}
    name = argv[0] if argv else None
    if name in defaults:
        defaults[name] = defaults_with_yaml(COMMANDS[name], argv)
    return defaults


def _subcommands(defaults: Dict[str, Any]) -> Any:
    options = tuple(
        Annotated[
            type(cfg),
            tyro.conf.subcommand(name, default=cfg, description=DESCRIPTIONS[name]),
        ]
        for name, cfg in defaults.items()
    )
    return Union[options]


def parse_args(argv: Sequence[str]) -> Any:
    return tyro.cli(_subcommands(command_defaults(argv)), args=list(argv), prog="markoff")


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    except InputError as exc:
        log_utils.error(str(exc))
        return 2

    log_utils.set_quiet(cfg.quiet)
    try:
        return HANDLERS[type(cfg)](cfg)
    except VerificationError as exc:
        log_utils.error(str(exc))
        return 1
    except (InputError, ResourceLimit) as exc:
        log_utils.error(str(exc))
        return 2
