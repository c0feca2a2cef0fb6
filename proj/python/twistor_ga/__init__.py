"""Geometric algebra of twistors."""

import json

from ._core import (
    CircleDiagnostics,
    CongruenceCircle,
    FourSpinor,
    Multivector,
    NullRay,
    Rotor,
    Signature,
    Twistor,
    _verify_json,
    conformal,
    congruence_circle,
    example_twistor,
    field_twist,
    max_abs_diff,
    null_ray,
    null_twistor,
    rotor_exp,
    run_cli,
    scalar_product,
    sta,
    tangent_field,
    torus_family,
)


def verify(suite: str = "all", seed: int = 42) -> dict:
    """Run a verification suite and return its report."""
    return json.loads(_verify_json(suite, seed))


__all__ = [
    "CircleDiagnostics",
    "CongruenceCircle",
    "FourSpinor",
    "Multivector",
    "NullRay",
    "Rotor",
    "Signature",
    "Twistor",
    "conformal",
    "congruence_circle",
    "example_twistor",
    "field_twist",
    "max_abs_diff",
    "null_ray",
    "null_twistor",
    "rotor_exp",
    "run_cli",
    "scalar_product",
    "sta",
    "tangent_field",
    "torus_family",
    "verify",
]
