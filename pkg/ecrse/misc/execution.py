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
Console helpers: colored printing and an optional time and memory report of
expensive functions.
"""
import datetime
import sys
import time
from functools import wraps

from memory_profiler import memory_usage

_state = {"active_execution_time": False}


class ColorsOut:
    OKGREEN = "\033[92m"
    FAIL = "\033[91m"
    ENDC = "\033[0m"
    BOLD = "\033[1m"
    DEFAULT = "\033[94m"
    TIME = "\033[90m"


def print_(output, color="DEFAULT", **kwargs):
    """ Print with the ANSI color named by a ColorsOut attribute """
    print(f"{getattr(ColorsOut, color)}{output}{ColorsOut.ENDC}", **kwargs)


def activate(active: bool = True) -> None:
    """
    Switch on (or off) the timing report of functions decorated with
    :func:`execution_time`.

    Parameters
    ----------
    active: bool
        whether decorated functions print their execution time and memory
    """
    _state["active_execution_time"] = active


def is_active() -> bool:
    return _state["active_execution_time"]


def execution_time(method):
    @wraps(method)
    def timed(*args, **kw):
        if not is_active() or sys.platform == "win32":
            return method(*args, **kw)
        starting_time = time.time()
        mem, result = memory_usage((method, args, kw), retval=True, timeout=200,
                                   interval=1e-7)
        stopping_time = time.time()

        msg = "[" + method.__name__ + "] execution time :"
        msg += "-" * (40 - len(msg)) + "  "
        msg += str(datetime.timedelta(milliseconds=(stopping_time - starting_time) * 1000))
        msg += "  " + f'Memory {int(max(mem) - min(mem))}' + " MiB"
        print_(msg, color="TIME", file=sys.stderr)
        return result

    return timed
