from .distributions import (
    Distribution,
    OP_PANEL_NAMES,
    clear_caches,
    distribution_op,
    distribution_p,
    family_size,
    op_stat_panel,
    op_stat_panel_naive,
    p_stat_panel,
    sjt_swaps,
)
from .checks import (
    CHECK_NAMES,
    CeilingExceeded,
    CheckReport,
    DEFAULT_CEILING,
    LONG_CEILING,
    REGISTRY,
    check_bmajmil,
    check_classical,
    check_conj_lsb,
    check_conj_omak,
    check_conj_strip,
    check_conjectures,
    check_desmak,
    check_desmak_equidistribution,
    check_duality,
    check_identities,
    check_identity_qsa,
    check_newzz,
    check_qbino,
    check_theorem_ros,
    euler_mahonian_target,
    newzz_rhs,
    qsa_rhs,
    run_checks,
    strip_rhs,
)

__all__ = [
    "Distribution",
    "OP_PANEL_NAMES",
    "clear_caches",
    "distribution_op",
    "distribution_p",
    "family_size",
    "op_stat_panel",
    "op_stat_panel_naive",
    "p_stat_panel",
    "sjt_swaps",
    "CHECK_NAMES",
    "CeilingExceeded",
    "CheckReport",
    "DEFAULT_CEILING",
    "LONG_CEILING",
    "REGISTRY",
    "check_bmajmil",
    "check_classical",
    "check_conj_lsb",
    "check_conj_omak",
    "check_conj_strip",
    "check_conjectures",
    "check_desmak",
    "check_desmak_equidistribution",
    "check_duality",
    "check_identities",
    "check_identity_qsa",
    "check_newzz",
    "check_qbino",
    "check_theorem_ros",
    "euler_mahonian_target",
    "newzz_rhs",
    "qsa_rhs",
    "run_checks",
    "strip_rhs",
]
