import json

import numpy as np
import pytest

import opineq.harness.campaign as campaign_module
from opineq.errors import ConfigInvalid, IoFailure, ParseError, CampaignFailure
from opineq.catalog import Kind, Verdict, lookup, registry
from opineq.gen import Family, GeneratorSpec
from opineq.matcore import ComplexMatrix
from opineq.radius import RangeBoundary
from opineq.harness import (CampaignConfig, load_config, run_campaign, Instance, draw_instance,
                            instance_families, Shrinker, search, eval_single, export_range, SCHEMA)
from opineq.harness.shrink.round_entries import RoundEntries


shift_doc = {'n': 2, 're': [[0., 1.], [0., 0.]], 'im': [[0., 0.], [0., 0.]]}


def config(**kwargs):
    values = dict(dims=[2], samples_per_dim=2, threads=2)
    values.update(kwargs)
    return CampaignConfig(**values)


# configuration

def test_config_defaults():
    cfg = CampaignConfig(dims=[2, 3], samples_per_dim=4)

    assert cfg.seed == 0
    assert cfg.ineq_ids == 'all'
    assert cfg.variants == 'both'
    assert cfg.families == [Family.GINIBRE]
    assert cfg.params_per_sample == 1
    assert cfg.tolerances == {'verdict_rel': 1e-9, 'equality_abs': 1e-8, 'width_rel': 1e-8}


@pytest.mark.parametrize('kwargs', [
    dict(dims=[], samples_per_dim=1),
    dict(dims=[0], samples_per_dim=1),
    dict(dims=[300], samples_per_dim=1),
    dict(dims=[2], samples_per_dim=0),
    dict(dims=[2], samples_per_dim=1, seed=-1),
    dict(dims=[2], samples_per_dim=1, ineq_ids=['NOPE']),
    dict(dims=[2], samples_per_dim=1, ineq_ids='KATO_1_3'),
    dict(dims=[2], samples_per_dim=1, variants='some'),
    dict(dims=[2], samples_per_dim=1, families=['WISHART']),
    dict(dims=[2], samples_per_dim=1, tolerances={'verdict_rel': -1.}),
    dict(dims=[2], samples_per_dim=1, tolerances={'slack': 1.}),
    dict(dims=[2], samples_per_dim=1, colour='red'),
])
def test_config_invalid(kwargs):
    with pytest.raises(ConfigInvalid):
        CampaignConfig(**kwargs)


def test_load_yaml_config(tmp_path):
    path = tmp_path / 'campaign.yaml'
    path.write_text('dims: [2, 3]\n'
                    'samples_per_dim: 5\n'
                    'seed: 7\n'
                    'ineq_ids: [KITT2005_UPPER, DRAGOMIR]\n'
                    'variants: as-printed\n'
                    'families: [GINIBRE, nilpotent_shift]\n'
                    'tolerances:\n'
                    '  verdict_rel: 1.0e-10\n')

    cfg = load_config(str(path))

    assert cfg.dims == [2, 3]
    assert cfg.seed == 7
    assert cfg.ineq_ids == ['KITT2005_UPPER', 'DRAGOMIR']
    assert cfg.variants == 'as_printed'
    assert cfg.families == [Family.GINIBRE, Family.NILPOTENT_SHIFT]
    assert cfg.verdict_rel == 1e-10


def test_load_json_config(tmp_path):
    path = tmp_path / 'campaign.json'
    path.write_text(json.dumps({'dims': [4], 'samples_per_dim': 1, 'output': 'report.json'}))

    cfg = load_config(str(path))
    assert cfg.dims == [4]
    assert cfg.output == 'report.json'


def test_load_config_errors(tmp_path):
    with pytest.raises(IoFailure):
        load_config(str(tmp_path / 'missing.json'))

    path = tmp_path / 'broken.json'
    path.write_text('{"dims": [2')
    with pytest.raises(ConfigInvalid):
        load_config(str(path))

    path = tmp_path / 'list.yml'
    path.write_text('- 2\n- 3\n')
    with pytest.raises(ConfigInvalid):
        load_config(str(path))


# instances

def test_instance_families():
    families = [Family.PARAM_2X2, Family.GUE, Family.REID_PAIR]

    assert instance_families(lookup('KITTANEH_FG_1_4'), families, 3) == [Family.FG_PAIR]
    assert instance_families(lookup('REID_1_2'), families, 3) == [Family.REID_PAIR]
    assert instance_families(lookup('DRAGOMIR'), families, 2) == [Family.PARAM_2X2, Family.GUE]
    assert instance_families(lookup('DRAGOMIR'), families, 3) == [Family.GUE]
    assert instance_families(lookup('DRAGOMIR'), [Family.PARAM_2X2], 4) == [Family.GINIBRE]


def test_draw_instance_operands():
    pair = draw_instance(lookup('KITTANEH_FG_1_4'), Family.FG_PAIR, 3, 0, 0)
    assert pair.b is not None and pair.coeffs is not None
    assert pair.x.shape == (3,) and pair.y.shape == (3,)
    assert pair.generator == GeneratorSpec('FG_PAIR', 3)

    summed = draw_instance(lookup('THM2_15_2_15'), Family.GINIBRE, 3, 0, 1, samples_per_dim=4)
    assert summed.s is not None and summed.s != summed.t
    assert summed.generator.index == 1

    scalar = draw_instance(lookup('YOUNG_REF_2_3'), Family.GINIBRE, 2, 0, 0)
    assert all(np.exp(-3) <= value <= np.exp(3) for value in scalar.scalars)
    assert scalar.t is None and scalar.dim == 0


def test_draw_instance_is_deterministic():
    record = lookup('FURUTA_1_5', 'corrected')
    first = draw_instance(record, Family.GINIBRE, 3, 5, 2, params_index=4)
    second = draw_instance(record, Family.GINIBRE, 3, 5, 2, params_index=4)

    assert first.to_json() == second.to_json()


# campaigns

def test_nilpotent_equalities():
    report = run_campaign(config(ineq_ids=['KITT2003_1_7'], families=['NILPOTENT_SHIFT']))
    row = report.row('KITT2003_1_7', dim=2)

    assert row.count == row.holds == 2
    assert len(row.equality_witnesses) == 2
    assert row.min_slack_witness['witness']['generator']['family'] == 'NILPOTENT_SHIFT'


def test_campaign_is_deterministic():
    cfg = config(dims=[2, 3], ineq_ids=['KITT2005_UPPER', 'FURUTA_1_5', 'YOUNG_REF_2_3', 'THM2_15_2_15'])

    first = run_campaign(cfg).to_json()
    second = run_campaign(config(dims=[2, 3], threads=1,
                                 ineq_ids=['KITT2005_UPPER', 'FURUTA_1_5', 'YOUNG_REF_2_3', 'THM2_15_2_15']))
    second = second.to_json()

    first.pop('timestamp')
    second.pop('timestamp')
    first['config'].pop('threads', None)
    second['config'].pop('threads', None)

    assert first == second


def test_printed_dragomir_is_violated():
    report = run_campaign(config(samples_per_dim=30, ineq_ids=['DRAGOMIR'], variants='as_printed',
                                 families=['PARAM_2X2']))
    row = report.row('DRAGOMIR', 'AS_PRINTED', 2)

    assert row.violated > 0
    assert not row.record.sound
    assert report.sound_violations == 0
    assert row.violations[0]['verdict'] == 'VIOLATED'


def test_corrected_rows_hold():
    report = run_campaign(config(dims=[2, 3], variants='corrected',
                                 families=['GINIBRE', 'NILPOTENT_SHIFT']))

    assert report.sound_violations == 0
    assert report.total == sum(row.count for row in report.rows)
    assert all(row.record.sound for row in report.rows)


@pytest.mark.slow
def test_acceptance_campaign():
    cfg = CampaignConfig(dims=[2, 3, 4, 5, 8], samples_per_dim=20, seed=0,
                         families=['GINIBRE', 'GUE', 'HAAR_UNITARY', 'NORMAL', 'NILPOTENT_SHIFT',
                                   'RANK_ONE', 'PARAM_2X2'])
    report = run_campaign(cfg)

    assert report.sound_violations == 0
    assert report.row('DRAGOMIR', 'AS_PRINTED', 2).violated > 0


@pytest.mark.slow
def test_corrected_operator_rows_sound_on_ginibre():
    operator_ids = sorted({record.id for record in registry() if record.kind is Kind.OPERATOR})
    dims = list(range(2, 9))

    cfg = CampaignConfig(dims=dims, samples_per_dim=500, seed=0, ineq_ids=operator_ids,
                         variants='corrected', families=['GINIBRE'], params_per_sample=3)
    report = run_campaign(cfg)

    assert report.sound_violations == 0
    assert sorted({row.dim for row in report.rows}) == dims
    assert all(row.record.sound for row in report.rows)
    assert all(row.record.kind is Kind.OPERATOR for row in report.rows)
    assert report.total > 0


def test_report_document(tmp_path):
    output = tmp_path / 'report.json'
    report = run_campaign(config(ineq_ids=['NORM_SANDWICH_1_6'], output=str(output)))
    doc = json.loads(output.read_text())

    assert doc['schema'] == SCHEMA
    assert doc['seed'] == 0
    assert set(doc['totals']) == {'count', 'holds', 'violated', 'inconclusive', 'skipped', 'sound_violations'}
    assert doc['totals']['count'] == report.total == 2

    row = doc['rows'][0]
    assert (row['id'], row['variant'], row['dim']) == ('NORM_SANDWICH_1_6', 'AS_PRINTED', 2)
    assert len(row['min_slack_witness']['legs']) == 2


def test_witness_replays(write_doc):
    report = run_campaign(config(dims=[3], ineq_ids=['COR2_5_2_6', 'FURUTA_1_5'], variants='corrected'))

    for row in report.rows:
        entry = row.min_slack_witness
        result = eval_single(write_doc(entry['witness']), row.record.id, variant=row.record.variant)

        assert result.verdict.value == entry['verdict']
        assert result.slack == pytest.approx(entry['slack'], rel=1e-9, abs=1e-12)


def test_worker_errors_are_collected(monkeypatch):
    def broken(task, cfg):
        raise RuntimeError('worker %d failed' % task.index)

    monkeypatch.setattr(campaign_module, '_run_task', broken)

    with pytest.raises(CampaignFailure) as info:
        run_campaign(config(ineq_ids=['KITT2005_UPPER']))

    assert len(info.value.errors) == 2


# shrinking and search

def test_shrinker_drops_coordinates():
    record = lookup('NORM_SANDWICH_1_6')
    instance = Instance(record, None, t=ComplexMatrix(3 * np.eye(3)))

    def fails(candidate):
        return 'failing' if candidate.t.data[0, 0] == 3 else None

    shrunk, result, history, used = Shrinker().shrink(instance, fails, budget=100)

    assert history == [3, 2, 1]
    assert shrunk.dim == 1
    assert result == 'failing'
    assert used == 2


def test_shrinker_budget():
    instance = Instance(lookup('NORM_SANDWICH_1_6'), None, t=ComplexMatrix(np.eye(4)))
    shrunk, result, history, used = Shrinker().shrink(instance, lambda candidate: None, budget=3)

    assert used == 3
    assert result is None
    assert history == [4]


def test_round_entries():
    step = RoundEntries()
    instance = Instance(lookup('NORM_SANDWICH_1_6'), None, t=ComplexMatrix([[0.123, 1.26], [0., 0.]]))

    candidates = list(step.candidates(instance))
    assert len(candidates) == 1
    assert candidates[0].t == ComplexMatrix([[0.1, 1.3], [0., 0.]])

    assert list(step.candidates(candidates[0])) == []

    scalars = Instance(lookup('YOUNG_REF_2_3'), None, scalars=(1.234, 2.06))
    assert list(step.candidates(scalars))[0].scalars == (1.2, 2.1)

    vanishing = Instance(lookup('YOUNG_REF_2_3'), None, scalars=(1.234, 0.04))
    assert list(step.candidates(vanishing)) == []


def test_search_finds_printed_dragomir_violation(write_doc):
    outcome = search('DRAGOMIR', variant='as_printed', dims=[2], budget=50, families=['PARAM_2X2'])

    assert outcome.confirmed
    assert outcome.result.verdict is Verdict.VIOLATED
    assert outcome.dims_history[0] == 2
    assert outcome.dims_history == sorted(outcome.dims_history, reverse=True)

    replay = eval_single(write_doc(outcome.witness), 'DRAGOMIR', variant='as_printed')
    assert replay.verdict is Verdict.VIOLATED

    doc = outcome.to_json()
    assert doc['status'] == 'CONFIRMED_VIOLATION'
    assert doc['result']['witness'] == outcome.witness


def test_search_without_violation():
    outcome = search('KITT2005_LOWER', dims=[2, 3], budget=40, seed=3)

    assert not outcome.confirmed
    assert outcome.evaluations == 40
    assert outcome.result.verdict is not Verdict.VIOLATED
    assert outcome.to_json()['status'] == 'NO_VIOLATION'


def test_search_budget():
    with pytest.raises(ValueError):
        search('KITT2005_LOWER', budget=0)


# single evaluations

def test_eval_single_shift(write_doc):
    result = eval_single(write_doc(shift_doc), 'REM_2_14')

    assert result.rhs.contains(0.5, tol=1e-8)
    assert result.verdict is Verdict.HOLDS


def test_eval_single_params_precedence(write_doc):
    doc = dict(shift_doc, params={'alpha': 0.7, 'beta': 0.6, 'p': 3.})
    result = eval_single(write_doc(doc), 'THM2_5B_2_12', params={'p': 2.})

    assert result.params.alpha == 0.7
    assert result.params.p == 2.
    assert result.params.q == 2.


def test_eval_single_identity(write_doc):
    doc = {'n': 2, 're': [[1., 0.], [0., 1.]], 'im': [[0., 0.], [0., 0.]]}
    result = eval_single(write_doc(doc), 'NORM_SANDWICH_1_6')

    assert result.verdict is Verdict.HOLDS
    assert len(result.legs) == 2


def test_eval_single_scalar(write_doc):
    result = eval_single(write_doc({'a': 1., 'b': 1.}), 'YOUNG_REF_2_3')
    assert result.record.kind is Kind.SCALAR
    assert result.verdict is Verdict.HOLDS


@pytest.mark.parametrize('doc, ineq_id', [
    ({'n': 2, 're': [[0., 1.]], 'im': [[0., 0.]]}, 'KITT2005_UPPER'),
    ({'n': 2, 're': [[0., 1.], [0., 0.]], 'im': [[0., 0.], [0., 0.]], 'z': 1}, 'KITT2005_UPPER'),
    ({'a': 1., 'b': 2.}, 'KITT2005_UPPER'),
    (shift_doc, 'YOUNG_REF_2_3'),
    ([1, 2], 'KITT2005_UPPER'),
])
def test_eval_single_malformed(write_doc, doc, ineq_id):
    with pytest.raises(ParseError):
        eval_single(write_doc(doc), ineq_id)


def test_eval_single_not_json(tmp_path):
    path = tmp_path / 'matrix.json'
    path.write_text('not json')

    with pytest.raises(ParseError):
        eval_single(str(path), 'KITT2005_UPPER')

    with pytest.raises(IoFailure):
        eval_single(str(tmp_path / 'missing.json'), 'KITT2005_UPPER')


def test_export_range(write_doc, tmp_path):
    out = tmp_path / 'boundary.csv'
    boundary = export_range(write_doc(shift_doc), 36, str(out))

    assert len(boundary) == 36
    assert np.allclose(np.abs(boundary.complex_points), 0.5)

    again = RangeBoundary.from_csv(str(out))
    assert np.allclose(again.points, boundary.points)

    with pytest.raises(ConfigInvalid):
        export_range(write_doc(shift_doc), 2, str(out))
