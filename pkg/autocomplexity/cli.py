"""
Command line front end.

    autocomplexity an 00010000 --witness
    autocomplexity sf 1010020210 --class single-run
    autocomplexity pvalue 1010020210 --alphabet 3 --alpha 1/20 --format json
    autocomplexity runs 0011
    autocomplexity bounds --grid 101 --out bounds.csv
    autocomplexity verify --suite inequalities --max-n 6

Every result is wrapped in an envelope with the command, the tool version and the settings in
effect, so identical inputs and configuration give byte-identical output.
"""

import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from . import __version__
from .config import Settings, load_settings
from .exceptions import AutoComplexityError, InvariantViolation, SearchLimitExceeded
from .measures.entropy import bound_constants, bounds_table
from .statistics.pvalues import best_model
from .structure.conjectures import EVIDENCE_NOTE
from .structure.exact import automatic_complexity_with_witness, exact_h_with_witnesses, hyde_bound
from .structure.runs import multi_run_sf_with_witnesses, single_run_sf_with_witnesses
from .utils import parse_fraction
from .verification.suites import SUITES, run_suite
from .words import Word, every_valence, maximal_runs, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LIMIT = 2
EXIT_VIOLATION = 3

FORMATS = ("text", "json", "csv")
CLASSES = ("exact", "single-run", "multi-run")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_limit(text: str) -> Tuple[int, int]:
    """`b=n`, the longest word the exact search accepts over b symbols."""
    try:
        b, n = (int(part) for part in text.split("="))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected b=n with integers, got {text!r}")
    if b < 1 or n < 0:
        raise argparse.ArgumentTypeError(f"need b >= 1 and n >= 0, got {text!r}")
    return b, n


def read_words(args: argparse.Namespace) -> List[Word]:
    """Words from the command line followed by those in `--input` (one per line, `#` comments)."""
    texts = list(args.words)
    if args.input is not None:
        with open(args.input, "r") as fid:
            texts.extend(line.strip() for line in fid if line.strip() and not line.lstrip().startswith("#"))
    if not texts:
        raise ValueError("no word given; pass words as arguments or with --input")
    return [parse_word(text, args.alphabet) for text in texts]


def cmd_an(args: argparse.Namespace, settings: Settings) -> List[Dict[str, Any]]:
    results = []
    for word in read_words(args):
        complexity, witness = automatic_complexity_with_witness(word, settings)
        result: Dict[str, Any] = {
            "word": str(word),
            "n": len(word),
            "alphabet": word.alphabet_size,
            "automatic_complexity": complexity,
            "upper_bound": hyde_bound(len(word)),
            "deficiency": hyde_bound(len(word)) - complexity,
        }
        if args.witness:
            result["witness"] = witness.as_dict()
        results.append(result)
    return results


def cmd_sf(args: argparse.Namespace, settings: Settings) -> List[Dict[str, Any]]:
    results = []
    for word in read_words(args):
        if args.structure_class == "exact":
            sf, automata = exact_h_with_witnesses(word, settings)
            witnesses: Dict[str, Any] = {str(m): nfa.as_dict() for m, nfa in automata.items()}
        elif args.structure_class == "single-run":
            sf, selections = single_run_sf_with_witnesses(word)
            witnesses = {str(m): selection.as_list() for m, selection in selections.items()}
        else:
            sf, selections = multi_run_sf_with_witnesses(word)
            witnesses = {str(m): selection.as_list() for m, selection in selections.items()}
        result: Dict[str, Any] = {"word": str(word), "alphabet": word.alphabet_size, **sf.as_dict()}
        if args.witness:
            result["witnesses"] = witnesses
        results.append(result)
    return results


def cmd_pvalue(args: argparse.Namespace, settings: Settings) -> List[Dict[str, Any]]:
    digits = settings.significant_digits
    return [best_model(word, settings.alpha, settings).as_dict(digits) for word in read_words(args)]


def cmd_runs(args: argparse.Namespace, settings: Settings) -> List[Dict[str, Any]]:
    results = []
    for word in read_words(args):
        runs = []
        for valence in every_valence(word.alphabet_size):
            if valence.size == word.alphabet_size and word.alphabet_size > 1:
                continue
            runs.extend(run.as_dict() for run in maximal_runs(word, valence))
        results.append({"word": str(word), "alphabet": word.alphabet_size, "runs": runs})
    return results


def cmd_bounds(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    constants = bound_constants(args.b)
    return {"constants": constants.as_dict(), "table": bounds_table(args.grid, args.b)}


def cmd_verify(args: argparse.Namespace, settings: Settings) -> Dict[str, Any]:
    tracker = run_suite(args.suite, args.max_n, args.max_k, settings)
    summary = tracker.asdict(time_key=None)
    summary.update({"suite": args.suite, "max_n": args.max_n, "max_k": args.max_k, "note": EVIDENCE_NOTE})
    return summary


def _flatten(command: str, results: Any) -> pd.DataFrame:
    """One table per command for csv output."""
    if command == "an":
        return pd.DataFrame([{k: v for k, v in r.items() if k != "witness"} for r in results])
    if command == "sf":
        return pd.DataFrame(
            [
                {"word": r["word"], "class": r["class"], "m": m, "h": h}
                for r in results
                for m, h in enumerate(r["values"])
            ]
        )
    if command == "pvalue":
        return pd.DataFrame(
            [
                {"word": r["word"], **{k: v for k, v in c.items() if k != "valence"}, "valence": str(c["valence"])}
                for r in results
                for c in r["candidates"]
            ]
        )
    if command == "runs":
        return pd.DataFrame(
            [
                {"word": r["word"], "start": run["start"], "length": run["length"], "valence": str(run["valence"])}
                for r in results
                for run in r["runs"]
            ]
        )
    return pd.DataFrame(results["checks"])


def _render_text(command: str, results: Any) -> str:
    lines = []
    if command == "an":
        for r in results:
            lines.append(f"{r['word']}: A_N={r['automatic_complexity']} b(n)={r['upper_bound']} D={r['deficiency']}")
            if "witness" in r:
                lines.append(json.dumps(r["witness"], sort_keys=True))
    elif command == "sf":
        for r in results:
            lines.append(f"{r['word']} [{r['class']}]: {' '.join(str(v) for v in r['values'])}")
            for m, witness in r.get("witnesses", {}).items():
                lines.append(f"  m={m}: {json.dumps(witness, sort_keys=True)}")
    elif command == "pvalue":
        for r in results:
            best = r["best"]
            if best is None:
                lines.append(f"{r['word']}: no candidate run, keep the null model")
                continue
            lines.append(
                f"{r['word']}: best run of length {best['run_length']} over {best['valence']} at {best['start']}, "
                f"p = {best['adjusted_p']} ({best['decimal']}), {r['verdict']} at alpha = {r['alpha']}"
            )
            lines.append(f"  model: {json.dumps(r['model'], sort_keys=True)}")
    elif command == "runs":
        for r in results:
            lines.append(f"{r['word']}:")
            lines.extend(f"  {run['valence']} start={run['start']} length={run['length']}" for run in r["runs"])
    else:
        frame = _flatten(command, results)
        lines.append(frame.to_string(index=False) if len(frame) else "no checks")
        lines.append(f"{'passed' if results['passed'] else 'FAILED'} (conjectures: {results['note']})")
    return "\n".join(lines) + "\n"


def _bounds_csv(payload: Dict[str, Any]) -> str:
    buffer = io.StringIO()
    for key, value in payload["constants"].items():
        buffer.write(f"# {key} = {value!r}\n")
    payload["table"].to_csv(buffer, index=False, float_format="%.12g")
    return buffer.getvalue()


def render(command: str, results: Any, fmt: str, settings: Settings) -> str:
    """Render the results of `command` as text, json or csv."""
    if command == "bounds":
        if fmt == "json":
            results = {
                "constants": results["constants"],
                "rows": json.loads(results["table"].to_json(orient="records", double_precision=12)),
            }
        else:
            return _bounds_csv(results)
    if fmt == "json":
        envelope = {"command": command, "version": __version__, "settings": settings.echo(), "results": results}
        return json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return _flatten(command, results).to_csv(index=False)
    return _render_text(command, results)


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], Any]] = {
    "an": cmd_an,
    "sf": cmd_sf,
    "pvalue": cmd_pvalue,
    "runs": cmd_runs,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--alphabet", type=int, default=None, help="alphabet size b (default: largest symbol + 1)")
    common.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    common.add_argument("--config", type=Path, default=None, help="`key = value` settings file")
    common.add_argument("--out", type=Path, default=None, help="write the output to this file")
    common.add_argument(
        "--exact-max-n",
        type=parse_limit,
        action="append",
        metavar="B=N",
        help="longest word the exact search accepts over B symbols (repeatable)",
    )
    common.add_argument("--exhaustive-limit", type=int, default=None, help="largest b^n enumerated exhaustively")
    common.add_argument("-v", "--verbose", action="count", default=0)

    words = _Parser(add_help=False)
    words.add_argument("words", nargs="*", help="words as digit strings or comma separated symbols")
    words.add_argument("--input", type=Path, default=None, help="file with one word per line")

    parser = _Parser(prog="autocomplexity", description="Automatic complexity structure functions and run statistics")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    an = subparsers.add_parser("an", parents=[common, words], help="automatic complexity A_N and its deficiency")
    an.add_argument("--witness", action="store_true", help="include a minimal automaton")

    sf = subparsers.add_parser("sf", parents=[common, words], help="structure function h(0..n)")
    sf.add_argument("--class", choices=CLASSES, default="exact", dest="structure_class")
    sf.add_argument("--witness", action="store_true", help="include the witness of every m")

    pvalue = subparsers.add_parser("pvalue", parents=[common, words], help="best run model and its exact p-value")
    pvalue.add_argument("--alpha", type=parse_fraction, default=None, help="significance level, e.g. 1/20")

    subparsers.add_parser("runs", parents=[common, words], help="maximal runs over every proper valence")

    bounds = subparsers.add_parser("bounds", parents=[common], help="samples of the bound u and its inverse psi")
    bounds.add_argument("--grid", type=int, default=101)
    bounds.add_argument("--b", type=int, default=2)

    verify = subparsers.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES + ("all",), default="inequalities")
    verify.add_argument("--max-n", type=int, default=6)
    verify.add_argument("--max-k", type=int, default=2)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        settings = load_settings(
            args.config,
            alpha=getattr(args, "alpha", None),
            exact_max_n=dict(args.exact_max_n) if args.exact_max_n else None,
            exhaustive_limit=args.exhaustive_limit,
        )
        results = COMMANDS[args.command](args, settings)
        output = render(args.command, results, args.fmt, settings)
        if args.out is not None:
            args.out.write_text(output)
        else:
            sys.stdout.write(output)
    except SearchLimitExceeded as e:
        print(f"autocomplexity: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except InvariantViolation as e:
        print(f"autocomplexity: invariant violated: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (AutoComplexityError, ValueError, OSError) as e:
        print(f"autocomplexity: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "verify" and not results["passed"]:
        logger.warning("a proven statement failed; this indicates an implementation error")
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
