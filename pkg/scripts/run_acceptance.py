"""Run the acceptance suite and print one PASS/FAIL line per criterion.

Run: python scripts/run_acceptance.py
"""

import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
sys.exit(subprocess.call([sys.executable, "-m", "pytest", "-q", str(root / "tests" / "test_acceptance.py")], cwd=root))
