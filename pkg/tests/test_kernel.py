"""The compiled kernel and the numpy fallback must agree exactly."""

import numpy as np
import pytest

from growthlab import _kernel_py
from growthlab import kernel, symmetric, deleted_semidirect

try:
    from growthlab import _kernel
    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def _universe_arrays(G):
    u = G.universe()
    return (np.ascontiguousarray(u.E), u.base_cols, u.weights,
            u.keys_sorted, u.key_order, u.n)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel unavailable")
def test_mult_table_agreement():
    for G in (symmetric(4), symmetric(5), deleted_semidirect(2, 4)):
        E, cols, w, ks, ko, n = _universe_arrays(G)
        t_c = _kernel.build_mult_table(E, cols, w, ks, ko)
        t_p = _kernel_py.build_mult_table(E, cols, w, ks, ko)
        assert np.array_equal(t_c, t_p)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel unavailable")
def test_close_ids_agreement():
    G = symmetric(5)
    E, cols, w, ks, ko, n = _universe_arrays(G)
    table = _kernel_py.build_mult_table(E, cols, w, ks, ko)
    rng = np.random.default_rng(7)
    for _ in range(50):
        gens = rng.integers(0, n, size=rng.integers(1, 4)).tolist()
        a = _kernel.close_ids(table, gens, n)
        b = _kernel_py.close_ids(table, gens, n)
        assert np.array_equal(a, b)


def test_close_ids_is_subgroup():
    G = symmetric(4)
    E, cols, w, ks, ko, n = _universe_arrays(G)
    table = _kernel_py.build_mult_table(E, cols, w, ks, ko)
    ids = _kernel_py.close_ids(table, [1, 5], n)
    members = set(int(x) for x in ids)
    assert 0 in members  # identity (lex-minimal element)
    for a in members:
        for b in members:
            assert int(table[a, b]) in members


def test_selected_kernel_reports_name():
    assert kernel.KERNEL in ("compiled", "python")


def test_pure_env_forces_fallback():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c",
         "from growthlab import kernel; print(kernel.KERNEL)"],
        env={"GROWTHLAB_PURE": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True, text=True)
    assert out.stdout.strip() == "python"
