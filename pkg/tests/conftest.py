from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

os.environ.setdefault("SYNCIDEAL_LOG_LEVEL", "WARNING")

SAMPLES = ROOT / "data" / "samples"


@pytest.fixture
def samples() -> Path:
    return SAMPLES


@pytest.fixture
def gadget_b():
    from core.gadgets.builders import build_gadget_B

    return build_gadget_B(("a", "b"))


@pytest.fixture
def empty_instance():
    """ends-with-a ∩ ends-with-b = ∅"""
    from core.gadgets.instance import load_instance

    return load_instance(SAMPLES / "instance_empty.txt")


@pytest.fixture
def nonempty_instance():
    """ends-with-a ∩ contains-a, shortest common word ``a``"""
    from core.gadgets.instance import load_instance

    return load_instance(SAMPLES / "instance_nonempty.txt")
