"""
Command-line verbs: parsing, dispatch and report emission.

Reports go to standard output as a single JSON line; log lines and
summaries go to standard error.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ValidationError

from ..config import get_log_level, get_max_cells, get_route, get_seed, get_workers
from ..core.errors import CellCapExceeded, HomcxError, InvalidInput
from ..core.graph import complete_graph, dismantle
from ..core.hom import enumerate_homs, hom_poset
from ..core.homology import betti_z2, euler_characteristic
from ..core.simplicial import f_vector, label_text
from ..core.universality import build_g_kx, choose_k, cover_nerve
from ..core.workflows import ROUTES, UniversalityWorkflow, conjecture_experiment, verify_universality
from ..models.domain import ComplexSpec, GraphSpec, HomPosetSpec
from ..models.requests import Command
from ..models.responses import (
    BettiResponse, BuildResponse, ConjectureResponse, DismantleResponse, ErrorDetail,
    ErrorResponse, HomResponse, NerveResponse, UniversalityReport,
)
from ..services.io_service import ParsedInputs, describe_validation_error, get_input_service
from ..services.lemma_service import LemmaService
from ..utils.helpers import check_environment, format_betti, load_environment, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


class CommandParser(argparse.ArgumentParser):
    """Raises instead of exiting so parse errors get the structured error report"""

    def error(self, message):
        raise InvalidInput(message, stage="parse")


def build_parser() -> argparse.ArgumentParser:
    common = CommandParser(add_help=False)
    common.add_argument("--max-cells", type=int, default=None,
                        help="cap on cells any construction may materialize (default 5000000)")
    common.add_argument("-s", "--seed", type=int, default=None,
                        help="seed for sampled property runs")
    common.add_argument("-o", "--out", default=None,
                        help="write the constructed graph or complex to this path")

    parser = CommandParser(prog="homcx", description="Hom complexes and the G_{k,X} universality construction")
    sub = parser.add_subparsers(dest="verb", parser_class=CommandParser)
    sub.required = True

    p = sub.add_parser("betti", parents=[common], help="Z/2 Betti numbers of a complex")
    p.add_argument("--x", action="append", help="complex JSON")

    p = sub.add_parser("hom", parents=[common], help="build Hom(T, G) and its Betti numbers")
    p.add_argument("--t", help="graph JSON for T")
    p.add_argument("--g", help="graph JSON for G")
    p.add_argument("--via", choices=ROUTES, default=None, help="Hom construction route")

    p = sub.add_parser("build", parents=[common], help="build G_{k,X}")
    p.add_argument("--x", action="append", help="complex JSON")
    p.add_argument("--t", help="graph JSON for T, used to choose k")
    p.add_argument("--k", type=int, default=None, help="subdivision depth")

    p = sub.add_parser("verify", parents=[common], help="check Betti(X) = Betti(Δ((G_{k,X})^T))")
    p.add_argument("--t", help="graph JSON for T")
    p.add_argument("--x", action="append", help="complex JSON")
    p.add_argument("--k", type=int, default=None, help="force a larger k")
    p.add_argument("--via", choices=ROUTES, default=None, help="Hom construction route")

    p = sub.add_parser("dismantle", parents=[common], help="fold a graph greedily")
    p.add_argument("--g", help="graph JSON")

    p = sub.add_parser("nerve", parents=[common], help="nerve of the ball cover of G_{k,X}")
    p.add_argument("--x", action="append", help="complex JSON")
    p.add_argument("--t", help="graph JSON for T, used to choose k")
    p.add_argument("--k", type=int, default=None, help="subdivision depth")

    p = sub.add_parser("conjecture41", parents=[common], help="compare Betti(X) with Hom(T, G_{1,X})")
    p.add_argument("--x", action="append", help="complex JSON, may be repeated")
    p.add_argument("--t", help="graph JSON for T (default K_2)")

    sub.add_parser("lemmas", parents=[common], help="run the seeded lemma suite")
    return parser


def parse_command(argv: Optional[List[str]] = None) -> Command:
    args = build_parser().parse_args(argv)
    try:
        return Command(
            verb=args.verb,
            t=getattr(args, "t", None),
            x=getattr(args, "x", None) or [],
            g=getattr(args, "g", None),
            k=getattr(args, "k", None),
            via=getattr(args, "via", None) or get_route(),
            max_cells=args.max_cells if args.max_cells is not None else get_max_cells(),
            seed=args.seed if args.seed is not None else get_seed(),
            out=args.out,
        )
    except ValidationError as e:
        raise InvalidInput(describe_validation_error("command line", e), stage="parse")


def _save(command: Command, build: Callable[[], BaseModel]) -> None:
    """Write --out; labels whose texts collide cannot be serialized"""
    if not command.out:
        return
    try:
        model = build()
    except ValidationError as e:
        raise InvalidInput(describe_validation_error(command.out, e), stage="save")
    get_input_service().save(command.out, model)


def _only_complex(inputs: ParsedInputs):
    return next(iter(inputs.complexes.values()))


def run_betti(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    X = _only_complex(inputs)
    betti = betti_z2(X, command.max_cells)
    logger.info("Betti numbers %s, f-vector %s", format_betti(betti), f_vector(X))
    return EXIT_OK, BettiResponse(betti=list(betti), euler=euler_characteristic(X))


def run_hom(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    T, G = inputs.graphs["t"], inputs.graphs["g"]
    workflow = UniversalityWorkflow(command.max_cells, command.via, get_workers())
    hom = workflow.hom_complex(T, G)
    betti = betti_z2(hom, command.max_cells)
    homs = len(enumerate_homs(T, G, command.max_cells))
    logger.info("[HOM] %d graph maps, f-vector %s, Betti %s", homs, f_vector(hom), format_betti(betti))
    if command.via == "poset":
        _save(command, lambda: HomPosetSpec.from_hom_poset(hom_poset(T, G, command.max_cells)))
    else:
        _save(command, lambda: ComplexSpec.from_complex(hom))
    return EXIT_OK, HomResponse(
        route=command.via, homs=homs, f_vector=f_vector(hom),
        betti=list(betti), euler=betti.euler,
    )


def _k_for(command: Command, inputs: ParsedInputs, default: Optional[int] = None) -> int:
    if inputs.params is not None:
        return inputs.params.k
    if command.k is not None:
        return command.k
    if default is not None:
        return default
    raise InvalidInput(f"{command.verb} requires --k or --t", stage="parse")


def run_build(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    X = _only_complex(inputs)
    k = _k_for(command, inputs)
    G = build_g_kx(X, k, command.max_cells)
    logger.info("[BUILD] G_{k,X} at k=%d: %d vertices, %d edges", k, len(G), G.edge_count())
    _save(command, lambda: GraphSpec.from_graph(G))
    return EXIT_OK, BuildResponse(k=k, vertices=len(G), edges=G.edge_count(), loops=G.loop_count(), out=command.out)


def run_verify(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    report = UniversalityReport(**verify_universality(
        inputs.graphs["t"], _only_complex(inputs), inputs.params.k,
        command.max_cells, command.via, get_workers(),
    ))
    passed = report.all_checks_pass()
    logger.info("[VERIFY] Betti X %s, Hom %s: %s", format_betti(report.betti_x),
                format_betti(report.betti_hom), "all checks pass" if passed else "checks FAIL")
    return (EXIT_OK if passed else EXIT_PROPERTY_FAILS), report


def run_dismantle(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    result = dismantle(inputs.graphs["g"])
    message = "dismantlable" if result.is_dismantlable else "not dismantlable"
    logger.info("%s after %d folds", message, len(result.witness))
    residual = GraphSpec.from_graph(result.residual)
    _save(command, lambda: residual)
    return (EXIT_OK if result.is_dismantlable else EXIT_PROPERTY_FAILS), DismantleResponse(
        dismantlable=result.is_dismantlable,
        message=message,
        folds=[[label_text(v), label_text(w)] for v, w in result.witness.steps],
        residual=residual,
    )


def run_nerve(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    X = _only_complex(inputs)
    k = _k_for(command, inputs, default=choose_k(complete_graph(2)).k)
    N, matches = cover_nerve(X, k, command.max_cells)
    logger.info("Nerve f-vector %s, matches X: %s", f_vector(N), matches)
    spec = ComplexSpec.from_complex(N)
    _save(command, lambda: spec)
    return (EXIT_OK if matches else EXIT_PROPERTY_FAILS), NerveResponse(k=k, nerve=spec.facets, matches=matches)


def run_conjecture(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    response = ConjectureResponse(**conjecture_experiment(
        inputs.complexes, inputs.graphs.get("t"), command.max_cells,
    ))
    _save(command, lambda: response)
    return EXIT_OK, response


def run_lemmas(command: Command, inputs: ParsedInputs) -> Tuple[int, BaseModel]:
    report = LemmaService(command.seed, command.max_cells).run()
    return (EXIT_OK if report.passed else EXIT_PROPERTY_FAILS), report


HANDLERS: Dict[str, Callable[[Command, ParsedInputs], Tuple[int, BaseModel]]] = {
    "betti": run_betti,
    "hom": run_hom,
    "build": run_build,
    "verify": run_verify,
    "dismantle": run_dismantle,
    "nerve": run_nerve,
    "conjecture41": run_conjecture,
    "lemmas": run_lemmas,
}


def run(command: Command) -> Tuple[int, BaseModel]:
    inputs = get_input_service().parse_inputs(command)
    return HANDLERS[command.verb](command, inputs)


def error_response(error: HomcxError) -> ErrorResponse:
    return ErrorResponse(error=ErrorDetail(
        type=type(error).__name__, message=str(error), stage=error.stage,
    ))


def main(argv: Optional[List[str]] = None) -> int:
    load_environment()
    setup_logging(get_log_level())
    try:
        if not check_environment():
            raise InvalidInput("invalid HOMCX_* environment settings", stage="config")
        code, response = run(parse_command(argv))
    except InvalidInput as e:
        logger.error("Input error: %s", e)
        code, response = EXIT_INPUT_ERROR, error_response(e)
    except CellCapExceeded as e:
        logger.error("Cell cap exceeded: %s", e)
        code, response = EXIT_CAP_EXCEEDED, error_response(e)
    sys.stdout.write(response.json() + "\n")
    sys.stdout.flush()
    return code
