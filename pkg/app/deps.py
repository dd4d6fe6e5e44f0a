from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv

ROOT = Path(__file__).resolve().parent.parent

logger = logging.getLogger(__name__)


def _load_yaml(path: Path) -> Dict:
    if not path.exists():
        return {}
    with path.open("r", encoding="utf-8") as handle:
        return yaml.safe_load(handle) or {}


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", name, raw)
        return default


@dataclass(frozen=True)
class Settings:
    subset_cap: int = 1 << 20
    pair_cap: int = 1 << 22
    determinize_cap: int = 1 << 20
    enumeration_budget: int = 1 << 42
    rc_default_limit: int = 3
    log_level: str = "WARNING"
    letter_order: str = "y z <sigma> x"
    binary_letters: Tuple[str, str] = ("mu", "lambda")
    json_indent: int = 2

    def with_caps(self, subset_cap: Optional[int] = None, pair_cap: Optional[int] = None) -> "Settings":
        """Per-invocation overrides from command-line flags."""
        return replace(
            self,
            subset_cap=self.subset_cap if subset_cap is None else subset_cap,
            pair_cap=self.pair_cap if pair_cap is None else pair_cap,
        )


def load_settings(config_dir: Path = ROOT / "config") -> Settings:
    """YAML defaults from ``config_dir``, then ``SYNCIDEAL_*`` environment overrides."""
    limits = _load_yaml(config_dir / "limits.yaml")
    gadgets = _load_yaml(config_dir / "gadgets.yaml")
    caps = limits.get("caps", {})
    rc_cfg = limits.get("rc", {})
    base = Settings()

    binary = tuple(str(gadgets.get("binary_letters", " ".join(base.binary_letters))).split())
    if len(binary) != 2:
        logger.warning("binary_letters must name two letters, using %s", base.binary_letters)
        binary = base.binary_letters

    return Settings(
        subset_cap=_env_int("SYNCIDEAL_SUBSET_CAP", int(caps.get("subset_cap", base.subset_cap))),
        pair_cap=_env_int("SYNCIDEAL_PAIR_CAP", int(caps.get("pair_cap", base.pair_cap))),
        determinize_cap=int(caps.get("determinize_cap", base.determinize_cap)),
        enumeration_budget=_env_int(
            "SYNCIDEAL_ENUM_BUDGET", int(rc_cfg.get("enumeration_budget", base.enumeration_budget))
        ),
        rc_default_limit=int(rc_cfg.get("default_limit", base.rc_default_limit)),
        log_level=os.getenv("SYNCIDEAL_LOG_LEVEL") or limits.get("logging", {}).get("level", base.log_level),
        letter_order=str(gadgets.get("letter_order", base.letter_order)),
        binary_letters=binary,
        json_indent=int(limits.get("output", {}).get("json_indent", base.json_indent)),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv(ROOT / ".env")
    return load_settings()
