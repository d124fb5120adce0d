# Collection shim so that pytest runs the script-style test suite. All
# assertions live in testsuite.py, which exits non-zero on any failure.

import os
import subprocess
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def test_testsuite():
    res = subprocess.run([sys.executable, "testsuite.py"], cwd=ROOT,
                         stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
                         universal_newlines=True)
    print(res.stdout)
    assert res.returncode == 0, res.stdout[-4000:]
