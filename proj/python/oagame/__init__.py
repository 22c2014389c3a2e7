# Copyright 2026 The oagame Authors.
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

"""Python bindings for the oagame workbench.

Structured results are the same trees the command line emits with
``--format json``; exact rationals are returned as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _oagame
from ._oagame import Game, ResolutionError, __version__, load_game, run_cli

__all__ = [
    "Game",
    "ResolutionError",
    "__version__",
    "bundled_game",
    "bundled_table5",
    "bundled_table6",
    "dominance",
    "enumerate",
    "expected_utility",
    "game_pure_nash",
    "load_game",
    "mixed_nash",
    "payoffs",
    "project",
    "pure_nash",
    "reproduce",
    "run_cli",
    "top",
]


def bundled_game(semantics="strict"):
    """The bundled open access game, validated."""
    return load_game(_oagame.bundled_game_text(), semantics)


def bundled_table5():
    return _oagame.bundled_table5_text()


def bundled_table6():
    return _oagame.bundled_table6_text()


def enumerate(game, semantics="strict", workers=1, dump=False):  # pylint: disable=redefined-builtin
    return json.loads(_oagame.enumerate_json(game, semantics, workers, dump))


def top(game, semantics="strict"):
    return json.loads(_oagame.top_json(game, semantics))


def payoffs(game, policy="max-gu", semantics="strict"):
    return json.loads(_oagame.payoffs_json(game, policy, semantics))


def project(game, row_player, col_player, policy="max-gu", semantics="strict"):
    """Bimatrix text of the projection onto two players."""
    return _oagame.project_text(game, row_player, col_player, policy, semantics)


def pure_nash(bimatrix_text):
    return json.loads(_oagame.pure_nash_json(bimatrix_text))


def game_pure_nash(game, policy="max-gu", semantics="strict"):
    return json.loads(_oagame.game_pure_nash_json(game, policy, semantics))


def mixed_nash(bimatrix_text):
    return json.loads(_oagame.mixed_nash_json(bimatrix_text))


def dominance(bimatrix_text, notion="strict", iterate=False):
    return json.loads(_oagame.dominance_json(bimatrix_text, notion, iterate))


def _exact(p):
    # Floats go through their shortest decimal form so 0.8 stays 4/5.
    return str(Fraction(repr(p)) if isinstance(p, float) else Fraction(p))


def expected_utility(bimatrix_text, row, col):
    """Exact expected utilities of both players under mixtures ``row``, ``col``."""
    u, v = _oagame.expected_utility_text(bimatrix_text, [_exact(p) for p in row], [_exact(p) for p in col])
    return Fraction(u), Fraction(v)


def reproduce(workers=1):
    return json.loads(_oagame.reproduce_json(workers))
