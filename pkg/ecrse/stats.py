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
Monte Carlo harness for the probabilistic behaviour of both embeddings.

Trials are split in a fixed number of lanes, each lane drawing from its own
child of the master seed. Running the lanes on several workers therefore gives
the same report as running them one after the other.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np
import pandas as pd

from ecrse import ec_group
from ecrse.ec_group import CurveParams
from ecrse.embedding import (DEFAULT_MAX_ATTEMPTS, AnyEmbedKey,
                             KoblitzParams, exponent_strategy, koblitz_embed,
                             rsa_embed)
from ecrse.exceptions import CurveTooLarge, EvenModulus, NoEmbeddingFound
from ecrse.misc import execution
from ecrse.utils import cache
from ecrse.utils.randomness import RandomSource

LOGGER = logging.getLogger(__name__)

LANES = 8

# one trial: (succeeded, attempts)
Outcome = Tuple[bool, int]


@dataclass
class TrialReport:
    trials: int = 0
    successes: int = 0
    mean_attempts: float = 0.0
    histogram: pd.Series = field(
        default_factory=lambda: pd.Series(dtype="int64", name="frequency"))

    @classmethod
    def from_outcomes(cls, outcomes: List[Outcome]) -> "TrialReport":
        if not outcomes:
            return cls()
        frame = pd.DataFrame(outcomes, columns=["success", "attempts"])
        histogram = frame["attempts"].value_counts().sort_index()
        histogram.index.name = "attempts"
        histogram.name = "frequency"
        succeeded = frame.loc[frame["success"], "attempts"]
        return cls(trials=len(frame),
                   successes=int(frame["success"].sum()),
                   mean_attempts=float(succeeded.mean()) if len(succeeded) else 0.0,
                   histogram=histogram.astype("int64"))

    @property
    def failure_rate(self) -> float:
        return 1 - self.successes / self.trials if self.trials else 0.0

    def to_frame(self) -> pd.DataFrame:
        """ Histogram as a two-column frame ``attempts, frequency`` """
        return self.histogram.rename_axis("attempts").reset_index(name="frequency")

    def to_csv(self) -> str:
        """
        One header row and one data row: trials, successes, mean_attempts,
        then ``attempts_i, frequency_i`` pairs of the histogram.
        """
        row = {"trials": self.trials, "successes": self.successes,
               "mean_attempts": round(self.mean_attempts, 6)}
        for i, (attempts, frequency) in enumerate(self.histogram.items(), start=1):
            row[f"attempts_{i}"] = int(attempts)
            row[f"frequency_{i}"] = int(frequency)
        return pd.DataFrame([row]).to_csv(index=False, lineterminator="\n")

    def to_table(self) -> str:
        lines = [f"trials        {self.trials}",
                 f"successes     {self.successes}",
                 f"failure rate  {self.failure_rate:.6f}",
                 f"mean attempts {self.mean_attempts:.6f}"]
        if len(self.histogram):
            lines.append(self.to_frame().to_string(index=False))
        return "\n".join(lines) + "\n"


# ===========================================================================
#                           EXACT SCANS
# ===========================================================================
@execution.execution_time
def qr_density(p: int) -> Tuple[int, int]:
    """
    Count residues and nonresidues of [1, p-1] with Euler's criterion.

    Parameters
    ----------
    p: int
        odd prime, at most 10^6

    Returns
    -------
        (residue count, nonresidue count)
    """
    if p == 2:
        raise EvenModulus("quadratic residuosity is only defined for odd p")
    if p > ec_group.ENUMERATION_GUARD:
        raise CurveTooLarge(
            f"p = {p} exceeds the enumeration guard {ec_group.ENUMERATION_GUARD}")
    values = np.arange(1, p, dtype=np.int64)
    criterion = ec_group.vector_pow(values, (p - 1) // 2, p)
    residues = int(np.count_nonzero(criterion == 1))
    return residues, p - 1 - residues


def valid_x_series(curve: CurveParams) -> pd.Series:
    """ :func:`ecrse.ec_group.valid_x_table` as a Series, cached on demand """
    if cache.enabled:
        table = cache.read("valid_x", p=curve.p, a=curve.a, b=curve.b)
        if len(table) > 0:
            return table
    table = pd.Series(ec_group.valid_x_table(curve), name="valid_x")
    if cache.enabled:
        cache.write(table, "valid_x", p=curve.p, a=curve.a, b=curve.b)
    return table


def valid_x_density(curve: CurveParams, n: int) -> float:
    """ Fraction of x in [0, n) that are abscissae of the curve """
    return float(valid_x_series(curve).iloc[:n].mean())


# ===========================================================================
#                           MONTE CARLO
# ===========================================================================
def _run_lanes(trials: int, rng: RandomSource, trial: Callable[[RandomSource], Outcome],
               workers: int = 1) -> List[Outcome]:
    lanes = rng.spawn(LANES)
    sizes = [trials // LANES + (1 if i < trials % LANES else 0) for i in range(LANES)]

    def run(lane: int) -> List[Outcome]:
        return [trial(lanes[lane]) for _ in range(sizes[lane])]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run, range(LANES)))
    else:
        results = [run(lane) for lane in range(LANES)]
    return [outcome for lane in results for outcome in lane]


@execution.execution_time
def embed_attempt_distribution(curve: CurveParams, key: AnyEmbedKey, trials: int,
                               rng: RandomSource, e_strategy: str = "ascending",
                               max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                               workers: int = 1) -> TrialReport:
    """
    Embed uniformly drawn messages of [2, n) and record the exponents tried.

    Parameters
    ----------
    curve: CurveParams
    key: RsaEmbedKey or RsaEmbedPublicKey
    trials: int
    rng: RandomSource
    e_strategy: str
        "ascending" or "random", the random policy draws from the lane source
    max_attempts: int
    workers: int
        threads running the lanes

    Returns
    -------
    :obj:`TrialReport`
    """
    def trial(lane_rng: RandomSource) -> Outcome:
        M = lane_rng.randrange(2, key.n)
        try:
            result = rsa_embed(curve, key, M,
                               e_strategy=exponent_strategy(e_strategy, lane_rng),
                               max_attempts=max_attempts)
        except NoEmbeddingFound as error:
            return False, error.attempts
        return True, result.attempts

    report = TrialReport.from_outcomes(_run_lanes(trials, rng, trial, workers))
    LOGGER.info("embedding distribution: %d/%d, mean %.4f",
                report.successes, report.trials, report.mean_attempts)
    return report


@execution.execution_time
def koblitz_failure_rate(curve: CurveParams, K: int, trials: int, rng: RandomSource,
                         vary_curve: bool = True, workers: int = 1) -> TrialReport:
    """
    Empirical frequency of Koblitz embedding failures.

    Parameters
    ----------
    curve: CurveParams
        curve of the trials, or only its prime when ``vary_curve``
    K: int
        expansion factor
    trials: int
    rng: RandomSource
    vary_curve: bool
        draw a fresh curve over the same prime for every trial
    workers: int

    Returns
    -------
    :obj:`TrialReport`
        attempts are the number of abscissae examined
    """
    params = KoblitzParams(K)
    capacity = params.capacity(curve.p)
    if capacity < 0:
        raise ValueError(f"K = {K} leaves no message below p = {curve.p}")

    def trial(lane_rng: RandomSource) -> Outcome:
        target = ec_group.random_curve(curve.p, lane_rng) if vary_curve else curve
        M = lane_rng.randrange(0, capacity + 1)
        try:
            point = koblitz_embed(target, params, M)
        except NoEmbeddingFound as error:
            return False, error.attempts
        return True, point.x - K * M

    report = TrialReport.from_outcomes(_run_lanes(trials, rng, trial, workers))
    LOGGER.info("koblitz K = %d: failure rate %.6f", K, report.failure_rate)
    return report
