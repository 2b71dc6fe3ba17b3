"""Exact syntomic cohomology Z_p(i)(F_q[x]/x^e) and relative K-groups of truncated polynomial rings."""

import json

from ._core import (
    HomologyGroup,
    SyntomicError,
    closed_form_h1,
    relative_k_group,
    verify,
    zp_i_point,
)
from ._core import tc_json as _tc_json
from ._core import zp_i_json as _zp_i_json

__all__ = [
    "HomologyGroup",
    "SyntomicError",
    "closed_form_h1",
    "relative_k_group",
    "tc_homotopy",
    "verify",
    "zp_i",
    "zp_i_point",
]


def zp_i(p, e, i, f=1, precision=None, max_weight=None, jobs=1):
    """Result document for Z_p(i)(F_q[x]/x^e), q = p^f, as a dict."""
    return json.loads(_zp_i_json(p, e, i, f, precision, max_weight, jobs))


def tc_homotopy(p, f=1, n_min=-6, n_max=12, precision=8):
    return json.loads(_tc_json(p, f, n_min, n_max, precision))
