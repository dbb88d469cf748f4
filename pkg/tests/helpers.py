"""Small assertion helpers shared by the test modules."""

import numpy as np


def assert_bitwise(a, b):
    """Same shape and identical bytes; the right check for pure data movement."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    assert a.shape == b.shape, f"shape mismatch: {a.shape} != {b.shape}"
    assert a.tobytes() == b.tobytes()


def rel_err(a, b):
    """Max elementwise difference relative to the larger magnitude scale."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    assert a.shape == b.shape, f"shape mismatch: {a.shape} != {b.shape}"
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b))) / scale
