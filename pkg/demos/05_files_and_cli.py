# The text formats and the command-line interface.
#
# Tensors, Kruskal forms, and Tucker forms each have a plain-text format
# whose values are printed as shortest round-tripping decimals, so write
# followed by read is bitwise exact.  Every library operation is also
# reachable through the `tenperm` command; this script drives the command
# entry point in-process.

import io
import tempfile
from pathlib import Path

import numpy as np

import tenperm as tp
from tenperm.cli import run

# ---------------------------------------------------------------------------
# The dense format is four logical blocks: magic, order, shape, values.

x = tp.build((2, 2, 2), range(1, 9))
text = tp.serialize_tensor(x)
print(text)
print("round trip bitwise:", np.array_equal(tp.parse_tensor(text), x))
print("0.1 survives exactly:", tp.parse_tensor(tp.serialize_tensor(np.array([0.1])))[0] == 0.1)

# ---------------------------------------------------------------------------
# Driving the CLI.  run() takes argv plus optional stdout/stderr streams and
# returns the exit code (0 ok, 1 usage, 2 format, 3 mismatch, 4 no
# convergence).

work = Path(tempfile.mkdtemp())
src = work / "x.ten"
src.write_text(text)

out = io.StringIO()
run(["derangements", "3"], stdout=out)
print("derangements 3 ->", out.getvalue().strip())

dst = work / "xt.ten"
code = run(["transpose", "--perm", "2,3,1", str(src), str(dst)])
print("transpose exit code:", code)
print(dst.read_text())

out = io.StringIO()
run(["inner", str(src), str(src)], stdout=out)
print("inner x x ->", out.getvalue().strip())

out = io.StringIO()
run(["eig", "--mode", "1", "--p", "2", str(src)], stdout=out)
print("eig output:")
print(out.getvalue())

# Errors are reported on stderr with a matching exit code.
err = io.StringIO()
code = run(["classify", "--perm", "1,2,3"], stdout=io.StringIO(), stderr=err)
print("classify identity -> exit", code, "|", err.getvalue().strip())
