"""Orbits of finite group actions, counted directly and by averaging fixed points,
with an exact check of the probabilistic counting argument and a seeded
Monte Carlo estimator of the same quantities."""

from .action import (
    ActionSpace,
    FixSet,
    GroupAction,
    InvalidActionError,
    OrbitPartition,
    coloring_action,
    fix_set,
    natural_action,
    orbit,
    orbit_partition,
    stabilizer,
    table_action,
    transporter,
)
from .counting import (
    ConsistencyError,
    OrbitCountReport,
    count_orbits_burnside,
    count_orbits_direct,
    count_report,
    fixed_pairs,
)
from .montecarlo import estimate_event, estimate_orbit_count, sample_once
from .perm import (
    FiniteGroup,
    Permutation,
    compose,
    format_cycles,
    generate_group,
    identity,
    inverse,
    parse_cycles,
    perm,
)
from .proof import (
    IdentityReport,
    ProbabilityModel,
    build_model,
    prob_gx_eq_x,
    prob_gy_eq,
    prob_gy_eq_given_orb,
    prob_y_in_orb,
    verify_bijection,
    verify_proof,
)
