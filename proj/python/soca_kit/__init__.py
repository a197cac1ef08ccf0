# Copyright 2026 The soca-kit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for soca-kit."""

import json

from . import _core
from ._core import (
    ScaleGuardError,
    cayley_table_linear,
    cayley_table_wolfram,
    is_irreducible,
    is_self_orthogonal,
    oca_pair,
    pbca_invertible,
    poly_gcd,
    run_cli,
)

__all__ = [
    "ScaleGuardError",
    "audit",
    "cayley_table_linear",
    "cayley_table_wolfram",
    "check",
    "count_linear",
    "is_irreducible",
    "is_self_orthogonal",
    "oca_pair",
    "pbca_invertible",
    "poly_gcd",
    "run_cli",
    "scan",
]


def check(*, wolfram=None, linear=None, diameter=None, field="GF(2)", method=None):
    """Self-orthogonality verdict for a Wolfram-coded or linear rule, as a dict."""
    if (wolfram is None) == (linear is None):
        raise ValueError("pass exactly one of wolfram= or linear=")
    if wolfram is not None:
        if diameter is None:
            raise ValueError("wolfram= needs diameter=")
        return json.loads(_core.check_wolfram(str(wolfram), diameter, method or "bruteforce"))
    return json.loads(_core.check_linear(list(linear), field, method or "gcd-general"))


def audit(*, wolfram=None, linear=None, diameter=None, field="GF(2)"):
    """Runs every applicable method and returns the combined report."""
    if (wolfram is None) == (linear is None):
        raise ValueError("pass exactly one of wolfram= or linear=")
    if wolfram is not None:
        if diameter is None:
            raise ValueError("wolfram= needs diameter=")
        return json.loads(_core.audit_wolfram(str(wolfram), diameter))
    return json.loads(_core.audit_linear(list(linear), field))


def scan(diameter, field="GF(2)", workers=1, i_know=False):
    return json.loads(_core.scan(diameter, field, workers, i_know))[0]


def count_linear(d_min, d_max, field="GF(2)", workers=1, i_know=False):
    return json.loads(_core.count_linear(d_min, d_max, field, workers, i_know))
