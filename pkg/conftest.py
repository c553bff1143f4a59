# Lets the test suite run from a fresh checkout without installing.
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))
