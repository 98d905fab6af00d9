"""Centralized resource bounds and run configuration."""

from __future__ import annotations

from dataclasses import dataclass, replace, fields


@dataclass(frozen=True)
class Bounds:
    """Resource guards; operations raise BoundExceeded past these."""

    element_enum: int = 100_000        # max group order for explicit element lists
    class_all_pairs: int = 10_000      # max class size for all-pairs edge scan
    class_pruned: int = 100_000        # max class size with centralizer pruning
    coset_index: int = 10_000          # max index for coset actions
    exhaustive_omega: int = 12         # max |Omega| for exhaustive RC search
    exhaustive_hard_omega: int = 64    # ceiling for budgeted witness fallback
    exhaustive_states: int = 2_000_000  # state budget for the critical search
    subgroup_order: int = 1_000        # max |G| for subgroup enumeration
    triple_transversal: int = 2_000    # conjugator transversal cap in triple search
    triple_pairs: int = 1_000_000      # element-pair budget per conjugate pair
    path_moves: int = 10_000           # safety cap in involution normalization
    pair_table: int = 2_000            # max |Omega| for the pair-orbit label table


DEFAULT_BOUNDS = Bounds()


class BoundExceeded(RuntimeError):
    """A configured resource bound was exceeded."""


@dataclass
class RunConfig:
    """CLI-facing configuration: bounds plus run parameters."""

    bounds: Bounds = DEFAULT_BOUNDS
    seed: int = 20240601
    workers: int = 1
    output_format: str = "json"        # json | text
    output_path: str = ""              # empty = stdout

    def with_overrides(self, **kv) -> "RunConfig":
        bound_names = {f.name for f in fields(Bounds)}
        bkv = {k: int(v) for k, v in kv.items() if k in bound_names}
        rest = {k: v for k, v in kv.items() if k not in bound_names}
        cfg = replace(self, **rest) if rest else self
        if bkv:
            cfg = replace(cfg, bounds=replace(cfg.bounds, **bkv))
        return cfg


def load_config_file(path: str) -> dict:
    """Parse a key=value config file; '#' starts a comment."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out
