"""
Utility functions for loading YAML settings into the command dataclasses.
"""

import dataclasses
import os
import sys
from typing import Any, Dict, Optional, Sequence

import tyro
import yaml

from markoff.errors import InputError


def load_yaml(path: str) -> Dict[str, Any]:
    """
    Read a YAML mapping.

    Args:
        path (str): The file.

    Returns:
        Dict[str, Any]: The mapping; empty for an empty file.
    """

    try:
        with open(path, "r") as f:
            data = yaml.load(f.read(), Loader=yaml.Loader)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise InputError(f"{path} is not valid YAML: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InputError(f"{path} must hold a mapping, got {type(data).__name__}")
    return data


def apply_overrides(cfg: Any, overrides: Dict[str, Any], where: str = "") -> Any:
    """
    Copy of a dataclass with the given fields replaced; nested mappings update nested dataclasses.

    Raises:
        InputError: For a key that is not a field.
    """

    names = {f.name: f for f in dataclasses.fields(cfg)}
    changes = {}
    for key, value in overrides.items():
        name = str(key).replace("-", "_")
        if name not in names:
            raise InputError(f"unknown setting {where}{key!r}")
        current = getattr(cfg, name)
        if dataclasses.is_dataclass(current) and isinstance(value, dict):
            changes[name] = apply_overrides(current, value, f"{where}{name}.")
        elif isinstance(current, tuple) and isinstance(value, list):
            changes[name] = tuple(value)
        else:
            changes[name] = value
    return dataclasses.replace(cfg, **changes)


def peek_option(argv: Sequence[str], option: str) -> Optional[str]:
    """Value of ``--option value`` or ``--option=value`` in argv, if present."""
    for i, arg in enumerate(argv):
        if arg == option and i + 1 < len(argv):
            return argv[i + 1]
        if arg.startswith(option + "="):
            return arg.split("=", 1)[1]
    return None


def defaults_with_yaml(cls: Any, argv: Sequence[str], fallback: Optional[str] = None) -> Any:
    """
    Default instance of a config class with the YAML file named by ``--yaml-path`` applied.

    Args:
        cls (Any): A config dataclass with a ``yaml_path`` field.
        argv (Sequence[str]): Command-line arguments.
        fallback (Optional[str]): File used when ``--yaml-path`` is absent, skipped if missing.

    Returns:
        Any: The config instance.
    """

    yaml_path = peek_option(argv, "--yaml-path")
    if yaml_path is None and fallback is not None and os.path.isfile(fallback):
        yaml_path = fallback
    if yaml_path is None:
        return cls()
    overrides = load_yaml(yaml_path)
    overrides["yaml_path"] = yaml_path
    return apply_overrides(cls(), overrides)


def cli_with_yaml(cls: Any, argv: Optional[Sequence[str]] = None, fallback: Optional[str] = None) -> Any:
    """Parse ``argv`` with tyro on top of the YAML-adjusted defaults; flags win over YAML keys."""
    argv = list(sys.argv[1:] if argv is None else argv)
    return tyro.cli(cls, default=defaults_with_yaml(cls, argv, fallback), args=argv)
