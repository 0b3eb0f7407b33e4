# Copyright 2026 The ncg Authors
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

"""Python bindings for the max-distance network creation game core.

Profiles are lists of purchase lists: ``buys[u]`` holds the vertices agent
``u`` buys edges to. ``alpha`` may be an int, a ``fractions.Fraction`` or a
string such as ``"19/2"``. Costs come back as ``Fraction`` or ``math.inf``.
"""

import math
from fractions import Fraction

from . import _ncg
from ._ncg import NcgError

__all__ = [
    "NcgError",
    "agent_cost",
    "audit",
    "best_response",
    "dynamics",
    "enumerate_equilibria",
    "is_nash",
    "optimum",
    "optimum_bruteforce",
    "parse_profile",
    "price_of_anarchy",
    "serialize_profile",
    "social_cost",
]


def _alpha(alpha):
  if isinstance(alpha, bool):
    raise TypeError("alpha must be a rational, not bool")
  if isinstance(alpha, (int, Fraction)):
    f = Fraction(alpha)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
  if isinstance(alpha, str):
    return alpha
  raise TypeError(f"unsupported alpha type {type(alpha).__name__}")


def _cost(pair):
  return math.inf if pair is None else Fraction(pair[0], pair[1])


def _buys(buys):
  return [list(b) for b in buys]


def agent_cost(alpha, buys, agent):
  return _cost(_ncg.agent_cost(len(buys), _alpha(alpha), _buys(buys), agent))


def social_cost(alpha, buys):
  return _cost(_ncg.social_cost(len(buys), _alpha(alpha), _buys(buys)))


def is_nash(alpha, buys):
  """Returns (is_nash, witness); the witness is a dict or None."""
  ok, witness = _ncg.is_nash(len(buys), _alpha(alpha), _buys(buys))
  if witness is not None:
    witness["old_cost"] = _cost(witness["old_cost"])
    witness["new_cost"] = _cost(witness["new_cost"])
  return ok, witness


def best_response(alpha, buys, agent):
  strategy, cost = _ncg.best_response(len(buys), _alpha(alpha), _buys(buys), agent)
  return strategy, _cost(cost)


def enumerate_equilibria(n, alpha, workers=1):
  """Returns (equilibria, tree_count, nontree_count)."""
  return _ncg.enumerate_equilibria(n, _alpha(alpha), workers)


def optimum(n, alpha):
  """Returns (cost, shape, witness buys) from the closed form."""
  cost, shape, witness = _ncg.optimum(n, _alpha(alpha))
  return _cost(cost), shape, witness


def optimum_bruteforce(n, alpha):
  return _cost(_ncg.optimum_bruteforce(n, _alpha(alpha)))


def price_of_anarchy(n, alpha, workers=1):
  """Exhaustive price of anarchy; None when no equilibrium exists."""
  r = _ncg.price_of_anarchy(n, _alpha(alpha), workers)
  return None if r is None else _cost(r)


def audit(alpha, buys):
  return _ncg.audit(len(buys), _alpha(alpha), _buys(buys))


def dynamics(alpha, buys, schedule="rr", seed=0, budget=1000):
  """Returns (outcome, final buys, number of moves)."""
  return _ncg.dynamics(len(buys), _alpha(alpha), _buys(buys), schedule, seed, budget)


def parse_profile(text):
  """Returns (n, alpha as Fraction, buys)."""
  n, alpha, buys = _ncg.parse_profile(text)
  return n, Fraction(alpha), buys


def serialize_profile(alpha, buys):
  return _ncg.serialize_profile(len(buys), _alpha(alpha), _buys(buys))
