
from types import MappingProxyType


__all__ = ['tolerances', 'HERMITIAN_TOL', 'PSD_TOL', 'UNITARY_TOL', 'GRAM_FLOOR', 'RANK_TOL',
           'EIGEN_SLACK', 'NORM_REL', 'HINT_TOL', 'NORMAL_TOL', 'SPECTRAL_WIDTH_REL',
           'GELFAND_MAX_K', 'COMMUTATION_GATE', 'SELFADJOINT_GATE', 'WIDTH_REL',
           'VERDICT_REL', 'SCALAR_VERDICT_REL', 'EQUALITY_ABS']


# relative defect ||M - M*||_F / ||M||_F accepted as Hermitian
HERMITIAN_TOL = 1e-12

# eigenvalues in [-PSD_TOL ||a||, 0) are clipped to zero
PSD_TOL = 1e-10

UNITARY_TOL = 1e-10

# eigenvalues of T*T below GRAM_FLOOR * ||T||^2 are treated as exact zeros
GRAM_FLOOR = 1e-13

# singular values below RANK_TOL * ||T|| span the kernel in the polar decomposition
RANK_TOL = 1e-12

# backward error of one Hermitian eigenvalue, per unit of dimension and norm
EIGEN_SLACK = 4e-16

NORM_REL = 1e-12

HINT_TOL = 1e-10

NORMAL_TOL = 1e-10

SPECTRAL_WIDTH_REL = 1e-6

GELFAND_MAX_K = 20

COMMUTATION_GATE = 1e-8

SELFADJOINT_GATE = 1e-8

WIDTH_REL = 1e-8

VERDICT_REL = 1e-9

SCALAR_VERDICT_REL = 1e-12

EQUALITY_ABS = 1e-8


tolerances = MappingProxyType({
    'hermitian': HERMITIAN_TOL,
    'psd': PSD_TOL,
    'unitary': UNITARY_TOL,
    'gram_floor': GRAM_FLOOR,
    'rank': RANK_TOL,
    'eigen_slack': EIGEN_SLACK,
    'norm_rel': NORM_REL,
    'hint': HINT_TOL,
    'normal': NORMAL_TOL,
    'spectral_width_rel': SPECTRAL_WIDTH_REL,
    'gelfand_max_k': GELFAND_MAX_K,
    'commutation_gate': COMMUTATION_GATE,
    'selfadjoint_gate': SELFADJOINT_GATE,
    'width_rel': WIDTH_REL,
    'verdict_rel': VERDICT_REL,
    'scalar_verdict_rel': SCALAR_VERDICT_REL,
    'equality_abs': EQUALITY_ABS,
})
