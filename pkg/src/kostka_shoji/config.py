"""Run configuration and budget caps.

Defaults can be overridden by environment variables so that scripted pipelines do not
need to pass flags:

    KOSTKA_SHOJI_MAX_GROUP_ORDER        closed-form character table bound on l^m m!
    KOSTKA_SHOJI_MAX_BRUTE_FORCE_ORDER  explicit group enumeration bound
    KOSTKA_SHOJI_MAX_MONOMIALS          monomial-space cap for Macdonald kernels
"""

import os
from dataclasses import dataclass, field
from math import factorial

from .errors import BudgetExceeded, InvalidInput

SCHEMA_VERSION = 1


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"environment variable {name} must be an integer", value=raw)


@dataclass(frozen=True)
class Budgets:
    max_group_order: int = field(
        default_factory=lambda: _env_int("KOSTKA_SHOJI_MAX_GROUP_ORDER", 10**6))
    max_brute_force_order: int = field(
        default_factory=lambda: _env_int("KOSTKA_SHOJI_MAX_BRUTE_FORCE_ORDER", 10**5))
    max_monomials: int = field(
        default_factory=lambda: _env_int("KOSTKA_SHOJI_MAX_MONOMIALS", 2 * 10**6))

    def check_group(self, m, ell, brute_force=False):
        order = ell**m * factorial(m)
        cap = self.max_brute_force_order if brute_force else self.max_group_order
        if order > cap:
            raise BudgetExceeded(
                f"|G({ell},1,{m})| = {order} exceeds budget {cap}",
                m=m, ell=ell, order=order, budget=cap)
        return order


def default_truncation(a_max):
    return 2 * a_max + 4


@dataclass(frozen=True)
class RunConfig:
    m: int
    ell: int
    n: int = None
    method: str = "ls"
    sign: str = "minus"
    truncation: int = None
    output_format: str = "json"
    output_path: str = None
    allow_degenerate: bool = False
    jobs: int = 1
    budgets: Budgets = field(default_factory=Budgets)

    def __post_init__(self):
        if self.n is None:
            object.__setattr__(self, "n", self.m)
        self.validate()

    def validate(self):
        if self.m < 1:
            raise InvalidInput("m must be >= 1", m=self.m)
        if self.ell < 1:
            raise InvalidInput("l must be >= 1", ell=self.ell)
        if self.ell == 1 and not self.allow_degenerate:
            raise InvalidInput("l = 1 is the degenerate classical mode; pass --allow-degenerate",
                               ell=self.ell)
        if self.n < self.m:
            raise InvalidInput("block width n must satisfy n >= m", n=self.n, m=self.m)
        if self.method not in ("ls", "demazure", "both"):
            raise InvalidInput("method must be ls, demazure or both", method=self.method)
        if self.sign not in ("plus", "minus", "both"):
            raise InvalidInput("sign must be plus, minus or both", sign=self.sign)
        if self.output_format not in ("json", "csv", "latex"):
            raise InvalidInput("format must be json, csv or latex", format=self.output_format)
        if self.jobs < 1:
            raise InvalidInput("jobs must be >= 1", jobs=self.jobs)
        self.budgets.check_group(self.m, self.ell)
