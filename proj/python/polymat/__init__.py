"""Exact polymatroid and subspace-rank toolkit (C++ core)."""

from polymat._core import (  # noqa: F401
    Arrangement,
    Field,
    GeneratorSet,
    InputError,
    RankVector,
    SizeError,
    VerificationError,
    circuits,
    cond_entropy,
    cone_member,
    dfz_ratio,
    direct_sum,
    enumerate_generators,
    epsilon_perturb,
    equalities,
    equality_set_check,
    fano,
    induce,
    ingleton_scan,
    ingleton_score,
    integer_perturb,
    is_connected,
    is_matroid,
    is_polymatroid,
    merge_generators,
    mutual_info,
    perturbation_case,
    phi,
    phi_eps,
    polymatroid_violation,
    proportionality,
    rank,
    scale,
    x2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
