# Copyright 2024 Eurobios
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.#
"""
Settings are read from ``~/.ecrse/settings.cfg``, then ``./ecrse.cfg``, then
the file named by ``ECRSE_CONFIG``; later files override earlier ones.

Example of ``settings.cfg``:

.. code-block:: ini

    [embedding]
    max_attempts=128
    e_strategy=ascending

    [stats]
    workers=1

    [cache]
    enabled=false
"""
import configparser
import logging
import os
from os.path import abspath, expanduser
from typing import Dict, Optional

from ecrse.exceptions import ConfigurationError

LOGGER = logging.getLogger(__name__)

home = expanduser("~")
path_ecrse = f"{home}/.ecrse/"

SEED_VARIABLE = "ECRSE_SEED"
CONFIG_VARIABLE = "ECRSE_CONFIG"

DEFAULTS = {
    "embedding": {"max_attempts": "128", "e_strategy": "ascending"},
    "stats": {"workers": "1"},
    "cache": {"enabled": "false",
              "folder": f"{path_ecrse}cache",
              "volume_gio": "0.5"},
}

_converters = {
    ("embedding", "max_attempts"): int,
    ("stats", "workers"): int,
    ("cache", "volume_gio"): float,
}

_choices = {
    ("embedding", "e_strategy"): ("ascending", "random"),
}


def config_files() -> list:
    files = [f"{abspath(path_ecrse)}/settings.cfg", abspath("ecrse.cfg")]
    extra = os.environ.get(CONFIG_VARIABLE)
    if extra:
        files.append(abspath(expanduser(extra)))
    return files


def load_settings(files: Optional[list] = None) -> Dict[str, dict]:
    """
    Load the settings of the package

    Parameters
    ----------
    files: list of str
        Configuration files to read, in increasing priority. If None the
        default locations are used (see :func:`config_files`)

    Returns
    -------
        dict of sections ``{section: {key: typed value}}``
    """
    parser = configparser.ConfigParser()
    parser.read_dict(DEFAULTS)
    read = parser.read(config_files() if files is None else files)
    LOGGER.debug("configuration files read: %s", read)

    settings = {}
    for section in parser.sections():
        settings[section] = {}
        for key, value in parser.items(section):
            settings[section][key] = _convert(section, key, value)
    return settings


def _convert(section: str, key: str, value: str):
    if (section, key) in _choices and value not in _choices[(section, key)]:
        raise ConfigurationError(
            f"[{section}] {key}={value} is not one of "
            f"{_choices[(section, key)]}")
    if section == "cache" and key == "enabled":
        if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
            raise ConfigurationError(f"[cache] enabled={value} is not a boolean")
        return value.lower() in ("true", "1", "yes")
    if section == "cache" and key == "folder":
        return expanduser(value)
    converter = _converters.get((section, key))
    if converter is None:
        return value
    try:
        return converter(value)
    except ValueError as error:
        raise ConfigurationError(
            f"[{section}] {key}={value} cannot be read") from error


def seed_from_environment() -> Optional[int]:
    """
    Returns
    -------
        the integer in ``ECRSE_SEED`` or None when the variable is unset
    """
    value = os.environ.get(SEED_VARIABLE)
    if value is None or value.strip() == "":
        return None
    try:
        return int(value)
    except ValueError as error:
        raise ConfigurationError(
            f"{SEED_VARIABLE}={value} is not an integer") from error
