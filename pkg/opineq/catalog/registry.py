from ..errors import UnknownId
from .records import IneqRecord, Variant, Kind
from . import vector_forms, operator_forms, scalar_forms, refinements


__all__ = ['registry', 'list_registry', 'lookup', 'select_records', 'ineq_ids']


AS_PRINTED = Variant.AS_PRINTED
CORRECTED = Variant.CORRECTED


_half = dict(alpha=0.5, beta=0.5)
_one = dict(alpha=1., beta=1.)


_records = (
    # pointwise forms
    IneqRecord('SCHWARZ_1_1', '(1.1)', AS_PRINTED, Kind.VECTOR, vector_forms.schwarz,
               ('requires_vectors',),
               description='|<Ax,y>|^2 <= <Ax,x><Ay,y> for A = |T|'),
    IneqRecord('REID_1_2', '(1.2)', AS_PRINTED, Kind.PAIR_VECTOR, vector_forms.reid_printed,
               ('requires_pair', 'requires_vectors', 'a_positive', 'ab_selfadjoint'),
               description='|<ABx,y>| <= ||B|| <Ax,x>', sound=False,
               notes='printed with a free y on the left while quantified over x only'),
    IneqRecord('REID_1_2', '(1.2)', CORRECTED, Kind.PAIR_VECTOR, vector_forms.reid_halmos,
               ('requires_pair', 'requires_x', 'a_positive', 'ab_selfadjoint'),
               description='|<ABx,x>| <= r(B) <Ax,x>',
               notes='Halmos form of the Reid inequality'),
    IneqRecord('KATO_1_3', '(1.3)', AS_PRINTED, Kind.VECTOR, vector_forms.kato,
               ('requires_vectors', 'alpha_unit'),
               description='|<Tx,y>|^2 <= <|T|^(2a)x,x><|T*|^(2(1-a))y,y>'),
    IneqRecord('KITTANEH_FG_1_4', '(1.4)', AS_PRINTED, Kind.PAIR_VECTOR, vector_forms.kittaneh_fg,
               ('requires_pair', 'requires_vectors', 'alpha_unit', 'abs_commutes'),
               description='|<ABx,y>| <= r(B) ||f(|A|)x|| ||g(|A*|)y||, f = t^a, g = t^(1-a)',
               notes='power family only'),
    IneqRecord('FURUTA_1_5', '(1.5)', AS_PRINTED, Kind.VECTOR, vector_forms.furuta_printed,
               ('requires_vectors', 'alpha_beta_sum'),
               description='|<T|T|^(a+b-1)x,y>|^2 <= <|T|^(2a)x,x><|T|^(2b)y,y>', sound=False,
               notes='printed with |T| on the y form; fails for the nilpotent shift'),
    IneqRecord('FURUTA_1_5', '(1.5)', CORRECTED, Kind.VECTOR, vector_forms.furuta,
               ('requires_vectors', 'alpha_beta_sum'),
               description='|<T|T|^(a+b-1)x,y>|^2 <= <|T|^(2a)x,x><|T*|^(2b)y,y>'),
    IneqRecord('JENSEN_2_1', '(2.1)', AS_PRINTED, Kind.VECTOR, vector_forms.jensen_convex,
               ('requires_x', 'x_unit', 'r_at_least_one'),
               description='<Sx,x>^r <= <S^r x,x> for S = |T|'),
    IneqRecord('JENSEN_2_2', '(2.2)', AS_PRINTED, Kind.VECTOR, vector_forms.jensen_concave,
               ('requires_x', 'x_unit', 'r_unit'),
               description='<S^r x,x> <= <Sx,x>^r for S = |T|'),

    # classical norm bounds
    IneqRecord('NORM_SANDWICH_1_6', '(1.6)', AS_PRINTED, Kind.OPERATOR, operator_forms.norm_sandwich,
               description='||T||/2 <= w(T) <= ||T||'),
    IneqRecord('KITT2003_1_7', '(1.7)', AS_PRINTED, Kind.OPERATOR, operator_forms.kittaneh_2003,
               description='w(T) <= (||T|| + ||T^2||^(1/2))/2'),
    IneqRecord('KITT2005_LOWER', '(1.8)', AS_PRINTED, Kind.OPERATOR, operator_forms.kittaneh_2005_lower,
               description='||T*T + TT*||/4 <= w^2(T)'),
    IneqRecord('KITT2005_UPPER', '(1.8)', AS_PRINTED, Kind.OPERATOR, operator_forms.kittaneh_2005_upper,
               description='w^2(T) <= ||T*T + TT*||/2'),
    IneqRecord('YAMAZAKI', 'Yamazaki bound', AS_PRINTED, Kind.OPERATOR, operator_forms.yamazaki,
               description='w(T) <= (||T|| + w(T~))/2 <= (||T|| + ||T^2||^(1/2))/2'),
    IneqRecord('DRAGOMIR', 'Dragomir bound', AS_PRINTED, Kind.OPERATOR, operator_forms.dragomir_printed,
               description='w^2(T) <= (||T|| + w(T^2))/2', sound=False,
               notes='not homogeneous; fails for 3 I'),
    IneqRecord('DRAGOMIR', 'Dragomir bound', CORRECTED, Kind.OPERATOR, operator_forms.dragomir,
               description='w^2(T) <= (||T||^2 + w(T^2))/2'),

    # scalar lemmas
    IneqRecord('YOUNG_REF_2_3', '(2.3)', AS_PRINTED, Kind.SCALAR, scalar_forms.young,
               ('positive_scalars',),
               description='ab + r0 (a^(p/2) - b^(q/2))^2 <= a^p/p + b^q/q'),
    IneqRecord('SMS_2_4', '(2.4)', AS_PRINTED, Kind.SCALAR, scalar_forms.young_power,
               ('positive_scalars', 'm_integer', 'r_at_least_one'),
               description='(a^(1/p) b^(1/q))^m + r0^m (a^(m/2) - b^(m/2))^2 <= (a^r/p + b^r/q)^(m/r)'),

    # refinements through the mixed Schwarz and Young-type lemmas
    IneqRecord('THM2_4_2_5', '(2.5)', AS_PRINTED, Kind.OPERATOR, refinements.mixed_power_printed,
               ('alpha_beta_sum', 'm_at_least_one', 'r_at_least_one'),
               description='w^m(K) <= 2^(-m/r)||A_2ra + B_2rb||^(m/r) - 2^(-m) C(A_2a, B_2b, m/2, m/2)',
               sound=False,
               notes='holds for integer m; the m = 1 reading of the next display needs doubled exponents'),
    IneqRecord('THM2_4_2_5', '(2.5)', CORRECTED, Kind.OPERATOR, refinements.mixed_power,
               ('alpha_beta_sum', 'm_integer', 'r_at_least_one'),
               description='w^2m(K) <= 2^(-2m/r)||A_2ra + B_2rb||^(2m/r) - 2^(-2m) C(A_2a, B_2b, m, m)'),
    IneqRecord('COR2_5_2_6', '(2.6)', AS_PRINTED, Kind.OPERATOR, refinements.mixed_power,
               ('alpha_beta_sum', 'r_at_least_one'), fixed=dict(m=1.),
               description='w^2(K) <= 2^(-2/r)||A_2ra + B_2rb||^(2/r) - C(A_2a, B_2b, 1, 1)/4',
               notes='equal to the m = 2 instance of the printed general display'),
    IneqRecord('REM_HALF', '(2.6), alpha = beta = 1/2, r = 1', AS_PRINTED, Kind.OPERATOR, refinements.mixed_power,
               fixed=dict(_half, m=1., r=1.),
               description='w^2(T) <= ||(|T| + |T*|)||^2/4 - C(|T|, |T*|, 1, 1)/4'),
    IneqRecord('REM_TTABS', '(2.6), alpha = beta = 1, r = 1', AS_PRINTED, Kind.OPERATOR, refinements.mixed_power,
               fixed=dict(_one, m=1., r=1.),
               description='w^2(T|T|) <= ||T*T + TT*||^2/4 - C(|T|^2, |T*|^2, 1, 1)/4'),

    IneqRecord('THM2_7_2_7', '(2.7)', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_printed,
               ('alpha_beta_sum', 'r_at_least_one', 's_at_least_one'), sound=False,
               description='w^2s(K) <= 2^(-2/r)||A_2rsa + B_2rsb||^(2/r) - inf <(A_2rsa - B_2rsb)x,x>/4',
               notes='unsquared bracket with mixed x, y as printed; evaluated with y = x'),
    IneqRecord('THM2_7_2_7', '(2.7)', CORRECTED, Kind.OPERATOR, refinements.sharpened,
               ('alpha_beta_sum', 'r_at_least_one', 's_at_least_one'),
               description='w^2s(K) <= 2^(-2/r)||A_2rsa + B_2rsb||^(2/r) - C(A_2sa, B_2sb, 1, 1)/4'),
    IneqRecord('COR2_8_2_8', '(2.8)', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_printed,
               ('alpha_beta_sum', 's_at_least_one'), fixed=dict(r=1.), sound=False,
               description='w^2s(K) <= ||A_2sa + B_2sb||^2/4 - inf <(A_2sa - B_2sb)x,x>/4'),
    IneqRecord('COR2_8_2_8', '(2.8)', CORRECTED, Kind.OPERATOR, refinements.sharpened,
               ('alpha_beta_sum', 's_at_least_one'), fixed=dict(r=1.),
               description='w^2s(K) <= ||A_2sa + B_2sb||^2/4 - C(A_2sa, B_2sb, 1, 1)/4'),
    IneqRecord('REM_2_8_HALF', '(2.8), alpha = beta = 1/2', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_printed,
               ('s_at_least_one',), fixed=dict(_half, r=1.), sound=False,
               description='w^2s(T) <= ||(|T|^s + |T*|^s)||^2/4 - inf <(|T|^s - |T*|^s)x,x>/4'),
    IneqRecord('REM_2_8_HALF', '(2.8), alpha = beta = 1/2', CORRECTED, Kind.OPERATOR, refinements.sharpened,
               ('s_at_least_one',), fixed=dict(_half, r=1.),
               description='w^2s(T) <= ||(|T|^s + |T*|^s)||^2/4 - C(|T|^s, |T*|^s, 1, 1)/4'),
    IneqRecord('REM_2_9', '(2.9)', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_reciprocal_printed,
               ('s_at_most_two',), sound=False,
               description='w^2s(T|T|^(2/s-1)) <= ||T*T + TT*||^2/4 - inf <(|T|^2 - |T*|^2)x,x>/4'),
    IneqRecord('REM_2_9', '(2.9)', CORRECTED, Kind.OPERATOR, refinements.sharpened_reciprocal,
               ('s_at_most_two',),
               description='w^2s(T|T|^(2/s-1)) <= ||T*T + TT*||^2/4 - C(|T|^2, |T*|^2, 1, 1)/4'),
    IneqRecord('REM_2_10', '(2.10)', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_printed,
               fixed=dict(_one, s=1., r=1.), sound=False,
               description='w^2(T|T|) <= ||T*T + TT*||^2/4 - inf <(|T|^2 - |T*|^2)x,x>/4'),
    IneqRecord('REM_2_10', '(2.10)', CORRECTED, Kind.OPERATOR, refinements.sharpened,
               fixed=dict(_one, s=1., r=1.),
               description='w^2(T|T|) <= ||T*T + TT*||^2/4 - C(|T|^2, |T*|^2, 1, 1)/4'),
    IneqRecord('REM_2_11', '(2.11)', AS_PRINTED, Kind.OPERATOR, refinements.sharpened_printed,
               fixed=dict(_half, s=1., r=2.), sound=False,
               description='w^2(T) <= ||T*T + TT*||/2 - inf <(|T|^2 - |T*|^2)x,x>/4'),
    IneqRecord('REM_2_11', '(2.11)', CORRECTED, Kind.OPERATOR, refinements.sharpened,
               fixed=dict(_half, s=1., r=2.),
               description='w^2(T) <= ||T*T + TT*||/2 - C(|T|, |T*|, 1, 1)/4'),

    IneqRecord('THM2_5B_2_12', '(2.12)', AS_PRINTED, Kind.OPERATOR, refinements.young_refinement,
               ('alpha_beta_sum', 's_at_least_one'),
               description='w^2s(K) <= ||A_2spa/p + B_2sqb/q|| - r0 C(A_2sa, B_2sb, p/2, q/2)'),
    IneqRecord('THM2_5B_2_13', '(2.13)', AS_PRINTED, Kind.OPERATOR, refinements.young_refinement,
               ('alpha_beta_sum', 's_at_least_one'), fixed=dict(p=2.),
               description='w^2s(K) <= ||A_4sa + B_4sb||/2 - C(A_2sa, B_2sb, 1, 1)/2'),
    IneqRecord('REM_2_13_HALF', '(2.13), alpha = beta = 1/2', AS_PRINTED, Kind.OPERATOR,
               refinements.young_refinement, ('s_at_least_one',), fixed=dict(_half, p=2.),
               description='w^2s(T) <= ||(|T|^2s + |T*|^2s)||/2 - C(|T|^s, |T*|^s, 1, 1)/2'),
    IneqRecord('REM_2_14', '(2.14)', AS_PRINTED, Kind.OPERATOR, refinements.young_refinement,
               fixed=dict(_half, p=2., s=1.),
               description='w^2(T) <= ||T*T + TT*||/2 - C(|T|, |T*|, 1, 1)/2'),
    IneqRecord('REM_2_12_ONE', '(2.12), alpha = beta = 1', AS_PRINTED, Kind.OPERATOR,
               refinements.young_refinement, ('s_at_least_one',), fixed=_one,
               description='w^2s(T|T|) <= ||(|T|^2sp/p + |T*|^2sq/q)|| - r0 C(|T|^2s, |T*|^2s, p/2, q/2)'),

    # sums of two composites
    IneqRecord('THM2_15_2_15', '(2.15)', AS_PRINTED, Kind.OPERATOR_PAIR, refinements.sum_refinement,
               ('requires_s', 'alpha_beta_sum', 'gamma_delta_sum', 'r_at_least_one'),
               description='w(K_T + K_S) <= 2^(-1/r)(||A_2ra + B_2rb||^(1/r) + ||S_2rc + S*_2rd||^(1/r)) - (C_T + C_S)/2',
               notes='introduced for commutators but bounds the sum; implemented as the sum statement'),
    IneqRecord('COR_2_16', '(2.16)', AS_PRINTED, Kind.OPERATOR_PAIR, refinements.sum_refinement_merged,
               ('requires_s', 'alpha_beta_sum', 'gamma_delta_sum'),
               description='w(K_T + K_S) <= ||A_2a + B_2b + S_2c + S*_2d||/2 - (C_T + C_S)/2'),
    IneqRecord('REM_SUM_HALF', '(2.16), all exponents 1/2', AS_PRINTED, Kind.OPERATOR_PAIR,
               refinements.sum_refinement_merged, fixed=dict(_half, gamma=0.5, delta=0.5),
               description='w(T + S) <= ||(|T| + |T*| + |S| + |S*|)||/2 - (C_T + C_S)/2',
               notes='S defaults to T'),
    IneqRecord('REM_SUM_ONE', '(2.16), all exponents 1', AS_PRINTED, Kind.OPERATOR_PAIR,
               refinements.sum_refinement_merged, fixed=dict(_one, gamma=1., delta=1.),
               description='w(T|T| + S|S|) <= ||T*T + TT* + S*S + SS*||/2 - (C_T + C_S)/2',
               notes='S defaults to T'),
)


def registry():
    """
    Every registry row, in a stable order.

    Returns
    -------
    tuple of IneqRecord

    """
    return _records


def ineq_ids():
    """
    Distinct inequality ids in registry order.

    """
    ids = []
    for record in _records:
        if record.id not in ids:
            ids.append(record.id)

    return ids


def list_registry():
    """
    Summary of the registry as ``(id, equation, variant, hypotheses)`` rows in a stable order.

    Returns
    -------
    list of tuple

    """
    return [(record.id, record.equation, record.variant.value, record.describe_hypotheses())
            for record in _records]


def lookup(ineq_id, variant=None):
    """
    Find a registry row.

    Rows whose printed display is valid exist only as ``AS_PRINTED``, and
    asking for their ``CORRECTED`` variant returns that row. Without a
    variant the sound row of the id is returned.

    Parameters
    ----------
    ineq_id : str
    variant : Variant or str, optional

    Returns
    -------
    IneqRecord

    Raises
    ------
    UnknownId
        When no row matches.

    """
    variant = Variant.parse(variant)
    rows = [record for record in _records if record.id == ineq_id]

    if not rows:
        raise UnknownId('Unknown inequality id %r' % ineq_id)

    if variant is None or variant is CORRECTED:
        for record in rows:
            if record.sound:
                return record

    for record in rows:
        if record.variant is variant:
            return record

    raise UnknownId('Inequality %s has no %s variant' % (ineq_id, variant.value))


def select_records(ids='all', variants='both', kinds=None):
    """
    Rows selected by a campaign.

    Parameters
    ----------
    ids : str or list
        ``"all"`` or a list of ids.
    variants : str
        ``"as_printed"`` selects printed displays, ``"corrected"`` selects the
        sound row of every id and ``"both"`` selects every row.
    kinds : iterable of Kind, optional
        Restrict to these kinds.

    Returns
    -------
    list of IneqRecord

    """
    if ids == 'all':
        wanted = ineq_ids()
    else:
        wanted = list(ids)
        known = ineq_ids()
        for ineq_id in wanted:
            if ineq_id not in known:
                raise UnknownId('Unknown inequality id %r' % ineq_id)

    variants = str(variants).lower().replace('-', '_')

    selected = []
    for record in _records:
        if record.id not in wanted:
            continue

        if kinds is not None and record.kind not in kinds:
            continue

        if variants == 'as_printed' and record.variant is not AS_PRINTED:
            continue

        if variants == 'corrected' and not record.sound:
            continue

        selected.append(record)

    return selected
