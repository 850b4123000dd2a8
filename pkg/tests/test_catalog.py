import zlib

import numpy as np
import pytest

from opineq.errors import HypothesisViolated, UnknownId, ParseError, DimensionMismatch
from opineq.catalog import (Variant, Verdict, Kind, ExponentParams, Operands, IneqResult, evaluate, lookup, list_registry,
                            registry, select_records, ineq_ids)
from opineq.matcore import ComplexMatrix, EQUALITY_ABS
from opineq.gen import GeneratorSpec, sample, sample_params
from opineq.sphereopt import FormPair, inf_power_diff

from conftest import ginibre, unit_vector


def test_registry_listing():
    rows = list_registry()
    ids = [row[0] for row in rows]

    assert len(rows) >= 28
    assert 'KITT2005_UPPER' in ids
    assert ('DRAGOMIR', 'AS_PRINTED') in [(row[0], row[2]) for row in rows]
    assert ('DRAGOMIR', 'CORRECTED') in [(row[0], row[2]) for row in rows]
    assert rows == list_registry()


def test_registry_rows_are_unique():
    keys = [(record.id, record.variant) for record in registry()]
    assert len(keys) == len(set(keys))

    for ineq_id in ineq_ids():
        assert lookup(ineq_id).sound


def test_lookup():
    assert lookup('DRAGOMIR').variant is Variant.CORRECTED
    assert lookup('DRAGOMIR', 'as-printed').variant is Variant.AS_PRINTED
    assert not lookup('DRAGOMIR', Variant.AS_PRINTED).sound

    # displays that are valid as printed answer for their corrected variant
    assert lookup('KITT2005_UPPER', 'corrected').variant is Variant.AS_PRINTED

    with pytest.raises(UnknownId):
        lookup('NO_SUCH_ID')

    with pytest.raises(ParseError):
        lookup('DRAGOMIR', 'misprinted')


def test_select_records():
    printed = select_records(['DRAGOMIR'], 'as_printed')
    assert [record.variant for record in printed] == [Variant.AS_PRINTED]

    corrected = select_records(['DRAGOMIR', 'KITT2005_UPPER'], 'corrected')
    assert all(record.sound for record in corrected)
    assert len(corrected) == 2

    scalars = select_records('all', 'both', kinds=[Kind.SCALAR])
    assert {record.id for record in scalars} == {'YOUNG_REF_2_3', 'SMS_2_4'}

    with pytest.raises(UnknownId):
        select_records(['NO_SUCH_ID'])


def test_kittaneh_lower_is_sharp(shift):
    result = evaluate('KITT2005_LOWER', shift)

    assert result.verdict is Verdict.HOLDS
    assert result.lhs.contains(0.25, tol=1e-8)
    assert result.rhs.contains(0.25, tol=1e-8)
    assert result.is_equality(EQUALITY_ABS)


def test_kittaneh_upper_on_normal():
    t = ComplexMatrix(np.diag([2., -1j, 0.5]))
    result = evaluate('KITT2005_UPPER', t)

    assert result.verdict is Verdict.HOLDS
    assert result.rhs.contains(4., tol=1e-8)
    assert abs(result.slack) <= 1e-7 * 4


def test_kittaneh_2003_and_yamazaki_on_shift(shift):
    result = evaluate('KITT2003_1_7', shift)
    assert result.verdict is Verdict.HOLDS
    assert result.rhs.contains(0.5, tol=1e-8)
    assert result.is_equality(EQUALITY_ABS)

    result = evaluate('YAMAZAKI', shift)
    assert result.verdict is Verdict.HOLDS
    assert len(result.legs) == 2
    assert result.legs[0].rhs.contains(0.5, tol=1e-8)


def test_young_refinement_on_normal():
    result = evaluate('REM_2_14', np.diag([1., 1j]))

    assert result.verdict is Verdict.HOLDS
    assert result.lhs.contains(1., tol=1e-8)
    assert result.rhs.contains(1., tol=1e-8)
    assert result.is_equality(EQUALITY_ABS)


def test_dragomir_as_printed_fails_on_scaled_identity():
    t = 3 * ComplexMatrix.identity(2)

    printed = evaluate('DRAGOMIR', t, variant='AS_PRINTED')
    assert printed.verdict is Verdict.VIOLATED
    assert printed.lhs.contains(9., tol=1e-6)
    assert printed.rhs.contains(6., tol=1e-6)
    assert printed.slack < 0

    corrected = evaluate('DRAGOMIR', t)
    assert corrected.verdict is Verdict.HOLDS


def test_mixed_power_on_shift(shift):
    result = evaluate('THM2_4_2_5', shift, params=dict(alpha=1., beta=1., m=1., r=1.))

    assert result.variant is Variant.CORRECTED
    assert result.verdict is Verdict.HOLDS
    assert result.lhs.contains(0.25, tol=1e-8)
    assert result.rhs.contains(0.25, tol=1e-8)
    assert result.is_equality(EQUALITY_ABS)


def test_furuta_on_random_operator(rng):
    t = ginibre(rng, 4)
    x, y = unit_vector(rng, 4), unit_vector(rng, 4)

    result = evaluate('FURUTA_1_5', t, params=dict(alpha=0.7, beta=0.6), x=x, y=y)
    assert result.verdict is Verdict.HOLDS


def test_furuta_as_printed_fails_on_shift(shift):
    x, y = np.array([0., 1.]), np.array([1., 0.])

    printed = evaluate('FURUTA_1_5', shift, variant='AS_PRINTED', x=x, y=y)
    assert printed.verdict is Verdict.VIOLATED

    corrected = evaluate('FURUTA_1_5', shift, x=x, y=y)
    assert corrected.verdict is Verdict.HOLDS
    assert corrected.is_equality(EQUALITY_ABS)


def test_vector_forms_on_random_operator(rng):
    t = ginibre(rng, 3)
    x, y = unit_vector(rng, 3), unit_vector(rng, 3)

    for ineq_id in ('SCHWARZ_1_1', 'KATO_1_3', 'JENSEN_2_1', 'JENSEN_2_2'):
        params = dict(r=2.) if ineq_id == 'JENSEN_2_1' else dict(r=0.5)
        assert evaluate(ineq_id, t, params=params, x=x, y=y).verdict is Verdict.HOLDS


def test_reid_pair():
    pair = sample(GeneratorSpec('REID_PAIR', 4, seed=5))
    x = unit_vector(np.random.default_rng(5), 4)

    result = evaluate('REID_1_2', pair.a, b=pair.b, x=x, coeffs=pair.coeffs)
    assert result.verdict is Verdict.HOLDS

    with pytest.raises(HypothesisViolated) as exc:
        evaluate('REID_1_2', ginibre(np.random.default_rng(6), 4), b=pair.b, x=x)
    assert exc.value.predicate == 'a_positive'


def test_kittaneh_fg_gate():
    rng = np.random.default_rng(8)
    pair = sample(GeneratorSpec('FG_PAIR', 3, seed=8))
    x, y = unit_vector(rng, 3), unit_vector(rng, 3)

    result = evaluate('KITTANEH_FG_1_4', pair.a, b=pair.b, x=x, y=y, coeffs=pair.coeffs)
    assert result.verdict is Verdict.HOLDS

    with pytest.raises(HypothesisViolated) as exc:
        evaluate('KITTANEH_FG_1_4', pair.a, b=ginibre(rng, 3), x=x, y=y)
    assert exc.value.predicate == 'abs_commutes'


def test_hypotheses_are_named(rng):
    t = ginibre(rng, 2)
    x, y = unit_vector(rng, 2), unit_vector(rng, 2)

    with pytest.raises(HypothesisViolated) as exc:
        evaluate('FURUTA_1_5', t, params=dict(alpha=0.2, beta=0.3), x=x, y=y)
    assert exc.value.predicate == 'alpha_beta_sum'

    with pytest.raises(HypothesisViolated) as exc:
        evaluate('THM2_15_2_15', t)
    assert exc.value.predicate == 'requires_s'

    with pytest.raises(HypothesisViolated) as exc:
        evaluate('JENSEN_2_1', t, x=2*x, params=dict(r=2.))
    assert exc.value.predicate == 'x_unit'

    with pytest.raises(HypothesisViolated):
        evaluate('YOUNG_REF_2_3', t)

    with pytest.raises(HypothesisViolated):
        evaluate('KITT2005_UPPER', None)


def test_pinned_parameters_override(shift):
    result = evaluate('REM_2_14', shift, params=dict(alpha=2., beta=2., p=3.))

    assert result.params.alpha == 0.5
    assert result.params.p == 2.
    assert result.rhs.contains(0.5, tol=1e-8)


def test_sum_of_composites(shift, rng):
    result = evaluate('REM_SUM_HALF', shift)
    assert result.verdict is Verdict.HOLDS
    assert result.rhs.contains(1., tol=1e-8)

    s = ginibre(rng, 2)
    result = evaluate('THM2_15_2_15', ginibre(rng, 2), s=s, params=dict(alpha=0.8, beta=0.7, gamma=1., delta=0.5))
    assert result.verdict is Verdict.HOLDS

    with pytest.raises(DimensionMismatch):
        evaluate('COR_2_16', shift, s=ComplexMatrix.identity(3))


def test_mismatched_correction_is_positive():
    t = 2 * ComplexMatrix.identity(2)
    params = ExponentParams(alpha=0.9, beta=0.3)

    operands = Operands(t)
    correction = operands.correction(operands.terms.power(2*params.alpha), operands.terms.star_power(2*params.beta))
    assert correction.lo > 1e-3

    result = evaluate('COR2_5_2_6', t, params=params)
    assert result.verdict is not Verdict.VIOLATED


def test_mismatched_correction_found_among_2x2_draws():
    params = ExponentParams(alpha=0.9, beta=0.3)

    hit = None
    for index in range(1000):
        t = sample(GeneratorSpec('PARAM_2X2', 2, seed=index))
        terms = Operands(t).terms
        pair = FormPair(terms.power(2*params.alpha), terms.star_power(2*params.beta))
        correction = inf_power_diff(pair).value
        if correction.lo > 1e-3:
            hit = index, t, correction
            break

    assert hit is not None

    index, t, correction = hit
    assert correction.lo > 1e-3
    assert evaluate('COR2_5_2_6', t, params=params).verdict is not Verdict.VIOLATED


def test_result_needs_a_comparison():
    with pytest.raises(ValueError):
        IneqResult(lookup('KITT2005_LOWER'), [], 1e-9)


def test_result_document(shift):
    doc = evaluate('NORM_SANDWICH_1_6', shift).to_json()

    assert doc['id'] == 'NORM_SANDWICH_1_6'
    assert doc['variant'] == 'AS_PRINTED'
    assert doc['verdict'] == 'HOLDS'
    assert len(doc['legs']) == 2
    assert doc['witness']['n'] == 2
    assert doc['params'] == ExponentParams().to_json()


@pytest.mark.parametrize('ineq_id', [record.id for record in registry()
                                     if record.kind is Kind.OPERATOR and record.sound])
def test_sound_operator_rows_hold_on_random_operator(ineq_id):
    rng = np.random.default_rng(zlib.crc32(ineq_id.encode()))
    t = ginibre(rng, 3)

    record = lookup(ineq_id)
    params = sample_params(17, record)

    assert evaluate(ineq_id, t, params=params).verdict is not Verdict.VIOLATED
