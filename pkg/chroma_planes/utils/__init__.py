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

"""Helpers shared across the package."""

import logging
import os
import typing as t

from aea.helpers.logging import setup_logger

from chroma_planes.constants import DEFAULT_LOG_LEVEL, LOG_ENV_VAR


_LOGGERS: t.Dict[str, logging.Logger] = {}


def log_level() -> int:
    """Resolve the verbosity from the environment."""
    value = os.environ.get(LOG_ENV_VAR, DEFAULT_LOG_LEVEL).strip().upper()
    if value.isdigit():
        return int(value)
    level = logging.getLevelName(value)
    return level if isinstance(level, int) else logging.INFO


def get_logger(name: str) -> logging.Logger:
    """Get a package logger, creating its handler only once."""
    if name not in _LOGGERS:
        _LOGGERS[name] = setup_logger(name=name, level=log_level())
    return _LOGGERS[name]
