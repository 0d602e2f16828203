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
Command line of the package::

    ecrse keygen --p 1009 --a 71 --b 602 --px 1 --py 237 --order 530 \\
                 --bound 500 --seed 1 --out key.pub --key key.priv
    ecrse encrypt --key key.pub --message "hello" --seed 2 --out message.ct
    ecrse decrypt --key key.priv --in message.ct
    ecrse demo
    ecrse stats qr-density --p 1009
    ecrse stats koblitz --K 2 --trials 10000 --seed 1

Exit codes: 0 success, 1 demo mismatch, 2 malformed input, 3 key search
failure, 4 embedding failure, 5 empty message, 6 point off the curve,
7 undecodable plaintext.
"""
import logging
import sys
from typing import List, Optional

import click

from ecrse import codec, ec_group, elgamal, stats
from ecrse.ec_group import BasePointInfo, CurveParams, ECPoint
from ecrse.embedding import RsaEmbedKey, exponent_strategy, rsa_embed
from ecrse.exceptions import (EcrseError, EmptyMessage, InvalidCurve,
                              MalformedBlock, PointAtInfinity)
from ecrse.misc import execution
from ecrse.utils import cache, checkpoints, config, keyfile
from ecrse.utils.randomness import RandomSource

LOGGER = logging.getLogger(__name__)
logging.basicConfig(format='%(levelname)s:%(message)s')

MALFORMED_INPUT = 2
MAX_MASK_DRAWS = 64


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        click.echo(text, nl=False)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="") as file:
        return file.read()


def _curve_options(function):
    for option in reversed([
            click.option("--p", "p", type=click.IntRange(min=5), required=True,
                         help="prime of the field"),
            click.option("--a", "a", type=click.IntRange(min=0), required=True),
            click.option("--b", "b", type=click.IntRange(min=0), required=True)]):
        function = option(function)
    return function


# ===========================================================================
#                           ROOT
# ===========================================================================
@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
@click.option("--timing", is_flag=True, help="report time and memory of scans")
@click.pass_context
def cli(ctx: click.Context, verbose: int, timing: bool):
    """ EC-RSA-ElGamal toolbox on desk-scale curves """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.getLogger().setLevel(level)
    execution.activate(timing)
    settings = config.load_settings()
    cache.configure(settings["cache"])
    ctx.obj = settings


@cli.command()
@_curve_options
@click.option("--px", type=click.IntRange(min=0), required=True)
@click.option("--py", type=click.IntRange(min=0), required=True)
@click.option("--order", type=click.IntRange(min=3), default=None,
              help="order of the base point, counted when omitted")
@click.option("--bound", type=click.IntRange(min=1), default=None,
              help="largest message value, p // 2 by default")
@click.option("--seed", type=int, default=None)
@click.option("--out", "public_path", type=click.Path(dir_okay=False),
              default="ecrse.pub", show_default=True, help="public key file")
@click.option("--key", "private_path", type=click.Path(dir_okay=False),
              default="ecrse.key", show_default=True, help="private key file")
def keygen(p, a, b, px, py, order, bound, seed, public_path, private_path):
    """ Draw a hybrid key pair on the given curve and base point """
    curve = ec_group.check_curve(CurveParams(p, a, b))
    point = ECPoint(px, py)
    if not ec_group.is_on_curve(curve, point):
        raise InvalidCurve(f"base point {point} is not on {curve}")
    if order is None:
        order = ec_group.brute_force_order(curve, point)
    elif not ec_group.is_point_order(curve, point, order):
        raise InvalidCurve(f"{order} is not the order of {point}")
    bound = curve.p // 2 if bound is None else bound

    keypair = elgamal.hybrid_keygen(curve, BasePointInfo(point, order), bound,
                                    RandomSource.from_seed(seed))
    _write(keyfile.dump_public(keypair.public()), public_path)
    _write(keyfile.dump_private(keypair), private_path)
    execution.print_(f"curve        {curve}")
    execution.print_(f"modulus n    {keypair.embed_modulus.n}")
    execution.print_(f"fingerprint  {keyfile.fingerprint(keypair.public())}")
    return 0


@cli.command()
@click.option("--key", "public_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="public key file")
@click.option("--message", type=str, default=None, help="message text")
@click.option("--in", "message_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="file holding the message")
@click.option("--seed", type=int, default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def encrypt(settings, public_path, message, message_path, seed, output_path):
    """ Encrypt a UTF-8 message block by block """
    if (message is None) == (message_path is None):
        raise click.UsageError("give exactly one of --message and --in")
    text = message if message is not None else _read(message_path)
    if text == "":
        raise EmptyMessage("nothing to encrypt")

    keypub = keyfile.load_public(_read(public_path))
    rng = RandomSource.from_seed(seed)
    strategy = exponent_strategy(settings["embedding"]["e_strategy"], rng)
    groups = []
    for block in codec.text_to_blocks(text, keypub.n):
        groups.append((_encrypt_block(keypub, block.value, rng, strategy,
                                      settings["embedding"]["max_attempts"]),
                       block.byte_length))
    LOGGER.info("%d blocks encrypted", len(groups))
    _write(keyfile.dump_ciphertext(groups), output_path)
    return 0


def _encrypt_block(keypub, M, rng, strategy, max_attempts) -> elgamal.HybridCiphertext:
    # the masked point has no text form at infinity
    for _ in range(MAX_MASK_DRAWS):
        b1 = rng.randrange(2, keypub.base.order)
        ciphertext = elgamal.hybrid_encrypt(keypub, M, b1, e_strategy=strategy,
                                            max_attempts=max_attempts)
        if not ciphertext.masked.is_infinity and not ciphertext.ephemeral.is_infinity:
            return ciphertext
        LOGGER.debug("b1 = %d masks to infinity, drawn again", b1)
    raise PointAtInfinity(f"no ephemeral scalar avoids infinity for M = {M}")


@cli.command()
@click.option("--key", "private_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="private key file")
@click.option("--in", "ciphertext_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="ciphertext file")
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
def decrypt(private_path, ciphertext_path, output_path):
    """ Decrypt a ciphertext file back to its text """
    keypair = keyfile.load_private(_read(private_path))
    blocks = []
    for ciphertext, byte_length in keyfile.load_ciphertext(_read(ciphertext_path)):
        try:
            M = elgamal.hybrid_decrypt(keypair, ciphertext)
        except PointAtInfinity as error:
            raise MalformedBlock(f"block unmasks to infinity: {error}") from error
        blocks.append(codec.MessageBlock(M, byte_length))
    _write(codec.blocks_to_text(blocks), output_path)
    return 0


@cli.command()
@_curve_options
@click.option("--q", type=click.IntRange(min=3), required=True)
@click.option("--r", type=click.IntRange(min=3), required=True)
@click.option("--message", "M", type=click.IntRange(min=0), required=True)
@click.pass_obj
def embed(settings, p, a, b, q, r, M):
    """ Map one integer onto the curve with the RSA embedding """
    curve = ec_group.check_curve(CurveParams(p, a, b))
    result = rsa_embed(curve, RsaEmbedKey(q, r), M,
                       e_strategy=exponent_strategy(settings["embedding"]["e_strategy"]),
                       max_attempts=settings["embedding"]["max_attempts"])
    execution.print_(f"point    {result.point}")
    execution.print_(f"exponent {result.exponent_used}")
    execution.print_(f"attempts {result.attempts}")
    return 0


@cli.command()
def demo():
    """ Replay the worked example and check every intermediate value """
    registry = checkpoints.demo_checkpoints()
    execution.print_(f"curve {checkpoints.EXAMPLE_CURVE}, P = {checkpoints.EXAMPLE_BASE}, "
                     f"q = {checkpoints.EXAMPLE_KEY.q}, r = {checkpoints.EXAMPLE_KEY.r}, "
                     f"M = {checkpoints.EXAMPLE_MESSAGE}", color="BOLD")
    passed = registry.run(verbose=True)
    n_passed = sum(result.passed for result in registry.results)
    execution.print_(f"{n_passed}/{len(registry)} checkpoints passed",
                     color="OKGREEN" if passed else "FAIL")
    return 0 if passed else 1


# ===========================================================================
#                           STATISTICS
# ===========================================================================
@cli.group("stats")
def stats_group():
    """ Exact scans and Monte Carlo estimates """


def _emit(report: stats.TrialReport, csv: bool) -> None:
    click.echo(report.to_csv() if csv else report.to_table(), nl=False)


@stats_group.command("qr-density")
@click.option("--p", "p", type=click.IntRange(min=3), required=True)
def qr_density(p):
    """ Residues and nonresidues of [1, p-1] """
    residues, nonresidues = stats.qr_density(p)
    click.echo(f"{residues} residues, {nonresidues} nonresidues")
    return 0


@stats_group.command("koblitz")
@click.option("--p", "p", type=click.IntRange(min=5), default=1009, show_default=True)
@click.option("--a", "a", type=click.IntRange(min=0), default=None,
              help="fixed curve coefficient, random curves when omitted")
@click.option("--b", "b", type=click.IntRange(min=0), default=None)
@click.option("--K", "K", type=click.IntRange(min=2), required=True)
@click.option("--trials", type=click.IntRange(min=1), default=10000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--csv", is_flag=True)
@click.pass_obj
def koblitz(settings, p, a, b, K, trials, seed, csv):
    """ Failure rate of the Koblitz embedding """
    if (a is None) != (b is None):
        raise click.UsageError("give both --a and --b, or neither")
    fixed = a is not None
    curve = CurveParams(p, a or 0, b or 0)
    if fixed:
        ec_group.check_curve(curve)
    else:
        curve = ec_group.random_curve(p, RandomSource.from_seed(0))
    report = stats.koblitz_failure_rate(curve, K, trials, RandomSource.from_seed(seed),
                                        vary_curve=not fixed,
                                        workers=settings["stats"]["workers"])
    _emit(report, csv)
    return 0


@stats_group.command("embed")
@_curve_options
@click.option("--q", type=click.IntRange(min=3), required=True)
@click.option("--r", type=click.IntRange(min=3), required=True)
@click.option("--trials", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--public", is_flag=True, help="exponents a sender knowing n only may use")
@click.option("--csv", is_flag=True)
@click.pass_obj
def embed_distribution(settings, p, a, b, q, r, trials, seed, public, csv):
    """ Distribution of the exponents tried by the RSA embedding """
    curve = ec_group.check_curve(CurveParams(p, a, b))
    key = RsaEmbedKey(q, r)
    report = stats.embed_attempt_distribution(
        curve, key.public() if public else key, trials, RandomSource.from_seed(seed),
        e_strategy=settings["embedding"]["e_strategy"],
        max_attempts=settings["embedding"]["max_attempts"],
        workers=settings["stats"]["workers"])
    if not csv:
        density = stats.valid_x_density(curve, key.n)
        execution.print_(f"valid abscissae below n: {density:.6f}, "
                         f"expected attempts {1 / density:.4f}")
    _emit(report, csv)
    return 0


# ===========================================================================
#                           ENTRY POINTS
# ===========================================================================
def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line and return its exit code instead of exiting.

    Parameters
    ----------
    argv: list of str
        arguments without the program name, ``sys.argv[1:]`` if None
    """
    try:
        result = cli.main(args=argv, prog_name="ecrse", standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return MALFORMED_INPUT
    except click.Abort:
        return 1
    except EcrseError as error:
        LOGGER.debug("command failed", exc_info=True)
        execution.print_(f"{type(error).__name__}: {error}", color="FAIL",
                         file=sys.stderr)
        return error.exit_code
    except (ValueError, OSError) as error:
        execution.print_(f"{type(error).__name__}: {error}", color="FAIL",
                         file=sys.stderr)
        return MALFORMED_INPUT
    return result if isinstance(result, int) else 0


def run():
    sys.exit(main())
