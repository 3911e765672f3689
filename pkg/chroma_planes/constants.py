# -*- coding: utf-8 -*-
# ------------------------------------------------------------------------------
#
#   Copyright 2024 Valory AG
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# ------------------------------------------------------------------------------

"""Constants."""

LOG_ENV_VAR = "CHROMA_PLANES_LOG"
DEFAULT_LOG_LEVEL = "INFO"

PLANE_CAPACITY = 4
# exact minor search is interactive up to ~12 vertices; dense 16-vertex hosts take minutes
HADWIGER_CEILING = 16
CHI_BUDGET = 2_000_000
SEED_CLIQUE = 4

T8_COLORS = 8
T8_PLANES = 2
T8_CONVERSE_MINOR = 9

MASK64 = (1 << 64) - 1
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB
FLOAT_SCALE = 2.0**-53

JSON_INDENT = 2

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2
EXIT_INCONCLUSIVE = 3
