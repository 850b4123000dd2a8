"""Property-based tests of the invariants every evaluation must respect."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opineq.catalog import Verdict, evaluate, evaluate_scalar, refinement_chain, registry, lookup
from opineq.gen import GeneratorSpec, sample, sample_params
from opineq.matcore import abs_op, adjoint, operator_norm
from opineq.radius import numerical_radius


seeds = st.integers(min_value=0, max_value=2**32 - 1)

dims = st.integers(min_value=1, max_value=5)

operators = st.builds(lambda family, dim, seed: sample(GeneratorSpec(family, dim, seed=seed)),
                      st.sampled_from(['GINIBRE', 'GUE', 'HAAR_UNITARY', 'NORMAL', 'RANK_ONE', 'NILPOTENT_SHIFT']),
                      dims, seeds)

positive = st.floats(min_value=1e-2, max_value=1e2, allow_nan=False, allow_infinity=False)

parametric_ids = sorted({record.id for record in registry() if record.sound and record.parametric})


@settings(max_examples=30, deadline=None)
@given(operators)
def test_radius_is_sandwiched(t):
    w = numerical_radius(t)
    norm = operator_norm(t)

    assert w.lo <= norm * (1 + 1e-9) + 1e-12
    assert w.hi >= norm / 2 * (1 - 1e-9) - 1e-12
    assert evaluate('NORM_SANDWICH_1_6', t).verdict is not Verdict.VIOLATED


@settings(max_examples=30, deadline=None)
@given(operators)
def test_abs_and_coabs_share_spectrum(t):
    values = abs_op(t).eigenvalues
    co_values = abs_op(adjoint(t)).eigenvalues

    assert np.allclose(np.sort(values), np.sort(co_values), rtol=0, atol=1e-9 * max(1., operator_norm(t)))


@settings(max_examples=200, deadline=None)
@given(positive, positive, st.floats(min_value=1.1, max_value=4.))
def test_young_never_violated(a, b, p):
    assert evaluate_scalar('YOUNG_REF_2_3', a, b, dict(p=p)).verdict is Verdict.HOLDS


@settings(max_examples=20, deadline=None)
@given(operators)
def test_refinement_chain_is_monotone(t):
    assert refinement_chain(t).holds


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(min_value=0, max_value=1000), st.sampled_from(parametric_ids))
def test_sampled_params_satisfy_row(seed, index, ineq_id):
    record = lookup(ineq_id)
    params = sample_params(seed, record, index=index)

    assert record.params_ok(params)
    assert 1 / params.p + 1 / params.q == pytest.approx(1.)
