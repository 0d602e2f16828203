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
# limitations under the License.
"""
Pickled pandas objects of exhaustive scans, keyed by curve.
"""
import os
import os.path

import pandas as pd

from ecrse.utils import config

cache_folder = config.DEFAULTS["cache"]["folder"]
cache_volume_gio = float(config.DEFAULTS["cache"]["volume_gio"])
enabled = False


def configure(settings: dict) -> None:
    """
    Parameters
    ----------
    settings: dict
        the ``cache`` section of :func:`ecrse.utils.config.load_settings`
    """
    global cache_folder, cache_volume_gio, enabled
    cache_folder = settings.get("folder", cache_folder)
    cache_volume_gio = settings.get("volume_gio", cache_volume_gio)
    enabled = settings.get("enabled", enabled)


def name(table: str, p: int, a: int, b: int) -> str:
    return f"{table}_{p}_{a}_{b}.pkl"


def folder_size_gio():
    if not os.path.exists(cache_folder):
        return 0
    return sum(
        os.path.getsize(f"{cache_folder}/{f}")
        for f in os.listdir(cache_folder)) / 1e9


def set_cache_folder():
    if not os.path.exists(cache_folder):
        os.makedirs(cache_folder)


def write(data: pd.Series, table: str, **kwargs):
    set_cache_folder()
    if folder_size_gio() < cache_volume_gio:
        data.to_pickle(f"{cache_folder}/{name(table, **kwargs)}")


def read(table: str, **kwargs) -> pd.Series:
    name_ = name(table, **kwargs)
    if os.path.exists(cache_folder) and name_ in os.listdir(cache_folder):
        return pd.read_pickle(f'{cache_folder}/{name_}')
    return pd.Series(dtype=bool)


def clean_cache():
    if os.path.exists(cache_folder):
        for f in os.listdir(cache_folder):
            os.remove(f"{cache_folder}/{f}")
