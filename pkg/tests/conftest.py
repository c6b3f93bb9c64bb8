import os
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"

# let the suite run from a fresh checkout, installed or not
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def subprocess_env() -> dict:
    """Environment for CLI subprocesses with the package importable."""
    env = os.environ.copy()
    existing = env.get("PYTHONPATH")
    env["PYTHONPATH"] = str(SRC) if not existing else f"{SRC}{os.pathsep}{existing}"
    return env
