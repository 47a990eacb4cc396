import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from slce_lab import kernels

needs_numba = pytest.mark.skipif(kernels.numba_impl is None, reason="numba not installed")


@st.composite
def term_arrays(draw):
    M = draw(st.integers(2, 7))
    v = draw(st.integers(1, 40))
    a = np.array(draw(st.lists(st.integers(0, M - 1), min_size=v, max_size=v)))
    b = np.array(draw(st.lists(st.integers(0, M - 1), min_size=v, max_size=v)))
    return M, a, b


def _call(impl, name, *args):
    return getattr(impl, name)(*args)


@needs_numba
@given(term_arrays())
def test_diff_histogram_backends_agree(data):
    M, a, b = data
    np_h = kernels.numpy_impl.diff_histogram(a, b, M)
    nb_h = kernels.numba_impl.diff_histogram(a, b, M)
    assert np.array_equal(np_h, nb_h)
    assert (np_h.sum(axis=1) == len(a)).all()


@needs_numba
@given(term_arrays(), st.integers(0, 60))
def test_least_translate_backends_agree(data, g):
    _, a, b = data
    rolled = np.roll(a, g % len(a))
    for dst in (rolled, b):
        assert kernels.numpy_impl.least_translate(a, dst) == kernels.numba_impl.least_translate(a, dst)


@needs_numba
def test_pair_max_magnitude_backends_agree():
    rng = np.random.default_rng(3)
    M = 5
    terms = rng.integers(0, M, size=(12, 30))
    rows, cols = np.triu_indices(12, 1)
    rows = np.concatenate([rows, [4]])
    cols = np.concatenate([cols, [4]])
    ang = 2 * np.pi * np.arange(M) / M
    args = (terms, M, np.cos(ang), np.sin(ang), rows.astype(np.int64), cols.astype(np.int64))
    assert np.allclose(kernels.numpy_impl.pair_max_magnitude(*args),
                       kernels.numba_impl.pair_max_magnitude(*args))


@needs_numba
def test_exp_table_backends_agree():
    from slce_lab.gf import make_field
    F = make_field(3, 4)
    assert sorted(F.exp_table.tolist()) == list(range(1, 81))


def test_backend_selected_from_environment():
    code = "from slce_lab import kernels; print(kernels.backend is kernels.numpy_impl)"
    env = dict(os.environ, SLCE_LAB_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "True"
    env["SLCE_LAB_BACKEND"] = "fortran"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "SLCE_LAB_BACKEND" in out.stderr


def test_numpy_backend_end_to_end():
    code = ("from slce_lab import corr, seq, gf; s = seq.gen_slce(gf.make_field(13)); "
            "print(corr.correlation(s, s).integer_values().tolist())")
    env = dict(os.environ, SLCE_LAB_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    import oracles
    terms = oracles.slce_prime_euler(13)
    want = [round(z.real) for z in oracles.correlation(terms, terms, 2)]
    assert out.stdout.strip() == str(want)
