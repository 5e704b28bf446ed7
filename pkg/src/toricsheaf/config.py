"""Loading of variety and sheaf descriptions from JSON configuration files.

A job configuration looks like::

    {
      "variety": {"family": "hirzebruch", "a": 3},
      "sheaf": {
        "rank": 3,
        "filtrations": [
          {"jumps": [-3, -1, 0],
           "spaces": [[[3, 3, 1]], [[3, 3, 1], [4, 0, 2]]]},
          ...
        ]
      }
    }

One filtration entry per ray, in fan ray order.  Each entry of ``spaces`` is
a generator list for one filtration step; vector entries are integers or
exact fraction strings like "1/3".  The final space may be omitted, in which
case it is the full ambient space.  Generator lists need not be echelonized;
canonicalization happens on load.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import ConfigError
from .filtration import EquivariantReflexiveSheaf, KlyachkoFiltration
from .rational_linalg import Subspace
from .toric import ToricVariety, build_variety


@dataclass(frozen=True)
class JobConfig:
    variety: ToricVariety
    sheaf: EquivariantReflexiveSheaf


def _parse_entry(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ConfigError(f"{where}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{where}: cannot parse {value!r} as an exact rational") from None
    raise ConfigError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")


def _parse_space(generators, rank: int, where: str) -> Subspace:
    if not isinstance(generators, list):
        raise ConfigError(f"{where}: expected a list of generator vectors")
    rows = []
    for gi, gen in enumerate(generators):
        if not isinstance(gen, list):
            raise ConfigError(f"{where}, generator {gi}: expected a vector")
        if len(gen) != rank:
            raise ConfigError(
                f"{where}, generator {gi}: expected length {rank}, got {len(gen)}"
            )
        rows.append([_parse_entry(x, f"{where}, generator {gi}") for x in gen])
    return Subspace(rank, rows)


def parse_sheaf(variety: ToricVariety, data: dict) -> EquivariantReflexiveSheaf:
    try:
        rank = int(data["rank"])
        entries = data["filtrations"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"sheaf section needs 'rank' and 'filtrations': {exc}") from None
    if rank < 1:
        raise ConfigError("sheaf rank must be at least 1")
    if not isinstance(entries, list) or len(entries) != variety.ray_count:
        raise ConfigError(
            f"need one filtration per ray ({variety.ray_count}), got "
            f"{len(entries) if isinstance(entries, list) else type(entries).__name__}"
        )
    filtrations = []
    for k, entry in enumerate(entries):
        where = f"filtration for ray {variety.ray_names[k]}"
        if not isinstance(entry, dict) or "jumps" not in entry:
            raise ConfigError(f"{where}: expected an object with 'jumps'")
        jumps = entry["jumps"]
        if not isinstance(jumps, list) or len(jumps) != rank:
            raise ConfigError(f"{where}: 'jumps' must list {rank} integers")
        try:
            jumps = tuple(int(j) for j in jumps)
        except (TypeError, ValueError):
            raise ConfigError(f"{where}: jumps must be integers") from None
        raw_spaces = entry.get("spaces", [])
        if not isinstance(raw_spaces, list) or len(raw_spaces) > rank:
            raise ConfigError(f"{where}: 'spaces' must list at most {rank} generator lists")
        spaces = [
            _parse_space(gens, rank, f"{where}, space {i + 1}")
            for i, gens in enumerate(raw_spaces)
        ]
        while len(spaces) < rank:
            spaces.append(Subspace.full(rank))
        filtrations.append(KlyachkoFiltration(jumps, tuple(spaces)))
    try:
        return EquivariantReflexiveSheaf(variety, rank, tuple(filtrations))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def parse_config(data: dict) -> JobConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    if "variety" not in data or "sheaf" not in data:
        raise ConfigError("configuration needs 'variety' and 'sheaf' sections")
    variety = build_variety(data["variety"])
    sheaf = parse_sheaf(variety, data["sheaf"])
    return JobConfig(variety, sheaf)


def load_config(path: str | Path) -> JobConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    return parse_config(data)
