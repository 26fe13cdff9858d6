"""Numerics for weighted-mean (Lambda) sequence spaces: certified norm and
modular evaluation, the block-space isometric embedding, geometric constants
of the two-dimensional sections, and extreme-point diagnostics."""

from .constants import (ConstantEstimate, OptimizerConfig, TwoDimPoint,
                        cnj2_exact, cnj2_numeric, cnj_from_psi,
                        james2_exact, james2_numeric, james_inf_pair,
                        james_pair_construction, jns_construction, jns_inf,
                        norm2d, psi, psi2)
from .embedding import BlockVector, embed, isometry_residual, nakano_luxemburg
from .errors import (BracketingFailedError, DomainError, IndexOutOfRangeError,
                     InvalidWeightsError, LambdaSpaceError, NoTailBoundError,
                     NonconvergentError, NotOnSphereError,
                     WitnessUnavailableError)
from .extreme import (ExtremeVerdict, affine_interval_card, extreme_check,
                      non_extreme_witness, superadditivity_check, ukk_delta)
from .norms import (Bracket, ExponentSeq, ModularValue, luxemburg, modular,
                    pnorm, supnorm, tail_sum_bracket)
from .weights import (FiniteSequence, LambdaWeights, TailGrowth,
                      lambda_transform, weighted_sum)

__all__ = [
    "Bracket", "BlockVector", "ConstantEstimate", "ExponentSeq",
    "ExtremeVerdict", "FiniteSequence", "LambdaWeights", "ModularValue",
    "OptimizerConfig", "TailGrowth", "TwoDimPoint",
    "affine_interval_card", "cnj2_exact", "cnj2_numeric", "cnj_from_psi",
    "embed", "extreme_check", "isometry_residual", "james2_exact",
    "james2_numeric", "james_inf_pair", "james_pair_construction",
    "jns_construction", "jns_inf", "lambda_transform", "luxemburg",
    "modular", "nakano_luxemburg", "non_extreme_witness", "norm2d",
    "pnorm", "psi", "psi2", "supnorm", "superadditivity_check",
    "tail_sum_bracket", "ukk_delta", "weighted_sum",
    "LambdaSpaceError", "InvalidWeightsError", "IndexOutOfRangeError",
    "NoTailBoundError", "NonconvergentError", "BracketingFailedError",
    "DomainError", "NotOnSphereError", "WitnessUnavailableError",
]

__version__ = "0.1.0"
