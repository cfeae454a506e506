"""Exact dual bin packing solvers and the online advice protocol."""

try:
    from dualbin import _dualbin  # installed wheel layout
except ImportError:  # development: extension on PYTHONPATH next to a build
    import _dualbin

import sys

sys.modules[__name__ + "._dualbin"] = _dualbin

from dualbin._dualbin import (  # noqa: F401,E402
    Instance,
    Packing,
    ParseError,
    ProtocolError,
    ResourceLimitError,
    VerifyReport,
    Weight,
    brute_force_opt,
    entropy_lower_bound,
    f_map,
    first_fit,
    first_fit_increasing,
    generate_instance,
    parse_instance,
    ptas_solve,
    reduce_and_run,
    rsff,
    simulate,
    solve_exact,
    verify_packing,
)

__all__ = [
    "Instance",
    "Packing",
    "ParseError",
    "ProtocolError",
    "ResourceLimitError",
    "VerifyReport",
    "Weight",
    "brute_force_opt",
    "entropy_lower_bound",
    "f_map",
    "first_fit",
    "first_fit_increasing",
    "generate_instance",
    "parse_instance",
    "ptas_solve",
    "reduce_and_run",
    "rsff",
    "simulate",
    "solve_exact",
    "verify_packing",
]
