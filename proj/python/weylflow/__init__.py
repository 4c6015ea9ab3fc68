"""Exact symbolic engine for the rank-one Weyl vertex algebra under
conformal flow.

All numeric arguments are exact rational strings ("1/3", "1/4+1/2i");
decimals are rejected so nothing is ever silently approximated.
"""

import json as _json

from ._core import (
    DomainError,
    StateParseError,
    TruncationOverflowError,
    apply_modes,
    basis,
    canonical_state,
    canonical_tensor_state,
    central_charge,
    classify,
    flow_image,
    omega_check,
    region_map_svg,
    run_suite_json,
    state_weight,
    tensor_central_charge,
    tensor_classify,
    zhu_certificate_json,
)

__all__ = [
    "DomainError",
    "StateParseError",
    "TruncationOverflowError",
    "apply_modes",
    "basis",
    "canonical_state",
    "canonical_tensor_state",
    "central_charge",
    "classify",
    "flow_image",
    "omega_check",
    "region_map_svg",
    "run_suite",
    "state_weight",
    "tensor_central_charge",
    "tensor_classify",
    "zhu_certificate",
]


def zhu_certificate(mu, degcap="4", reportcap="2", pairbudget="", window_lo=-4, window_hi=4,
                    checks=False):
    """Truncated Zhu-quotient certificate as a dict.

    Captured relations are a subset of O(V), so ``dimUpperBound`` is an
    upper-bound certificate for the restriction of A(V) to the reported
    degrees.
    """
    return _json.loads(
        zhu_certificate_json(mu, degcap, reportcap, pairbudget, window_lo, window_hi, checks)
    )


def run_suite(suite, mu, degcap="3", window_lo=-3, window_hi=3, scan_len=3, reportcap=""):
    """Run one of the exact verification suites and return its report."""
    return _json.loads(
        run_suite_json(suite, mu, degcap, window_lo, window_hi, scan_len, reportcap)
    )
