"""Superextensions of small finite groups.

The heavy lifting happens in the compiled ``_core`` module; the report
functions here decode its JSON output into dictionaries.
"""

import json

from ._core import (
    CapacityError,
    ConsistencyError,
    DomainError,
    Error,
    ParseError,
    c5_render,
    c5_resolve,
    catalog,
    count_mls,
    group_table,
    invariant_systems,
    is_self_linked,
    lambda_table,
    maximal_linked_systems,
    orbit_count,
    sim_class_count,
    sl,
)
from . import _core

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "DomainError",
    "Error",
    "ParseError",
    "c5_render",
    "c5_resolve",
    "c5_t17",
    "catalog",
    "count_mls",
    "explore_sl",
    "group_table",
    "invariant",
    "invariant_systems",
    "is_self_linked",
    "lambda_report",
    "lambda_table",
    "maximal_linked_systems",
    "orbit_count",
    "sim_class_count",
    "sl",
    "sl_table",
    "verify",
]


def sl_table(max_order=13):
    return json.loads(_core.report_sl_table(max_order))


def lambda_report(group, what="count", allow_large=False, cache_dir=None):
    return json.loads(_core.report_lambda(group, what, allow_large, cache_dir))


def invariant(group, allow_large=False):
    return json.loads(_core.report_invariant(group, allow_large))


def c5_t17():
    return json.loads(_core.report_c5_t17())


def explore_sl(max_n=16):
    return json.loads(_core.report_explore_sl(max_n))


def verify(scope="fast", cache_dir=None):
    return json.loads(_core.report_verify(scope, cache_dir))
