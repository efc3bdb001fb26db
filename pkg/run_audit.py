import argparse
import json
import logging
import sys
from typing import Dict, List, Literal, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, PositiveFloat, PositiveInt, ValidationError, model_validator

from audit import AuditReport, run_all
from classifiers import classify
from enumeration import ConcreteGroup, save_group
from families import FamilySpec, build, dump_corpus, load_corpus_dir, read_grp, standard_corpus
from kernel import all_subgroups
from presentation import format_presentation
from utils import AuditSettings, load_settings, save_report, setup_logging, summary_frame
from utils.errors import (
    CapExceededError, EmptyPresentationError, EnumerationBudgetExceeded, NoAdmissibleParameterError,
    ParameterRangeError, PresentationSyntaxError, UndefinedAbbreviationError, UnknownGeneratorError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PARAMETER = 4
EXIT_CAP = 5
EXIT_USAGE = 6

EXIT_CODES = [
    ((PresentationSyntaxError, UnknownGeneratorError, UndefinedAbbreviationError, EmptyPresentationError), EXIT_PARSE),
    ((EnumerationBudgetExceeded,), EXIT_BUDGET),
    ((ParameterRangeError, NoAdmissibleParameterError), EXIT_PARAMETER),
    ((CapExceededError,), EXIT_CAP),
]


class CliConfig(BaseModel):
    subcommand: Literal["build", "classify", "lattice", "verify"]
    input_path: Optional[str] = None
    family: Optional[FamilySpec] = None
    corpus_dir: Optional[str] = None
    output_format: Literal["text", "json"] = "text"
    out: Optional[str] = None
    dump_dir: Optional[str] = None
    suite: List[str] = []
    max_cosets: Optional[PositiveInt] = None
    max_order: Optional[PositiveInt] = None
    timeout_secs: Optional[PositiveFloat] = None
    jobs: Optional[PositiveInt] = None
    corpus_caps: Dict[int, PositiveInt] = {}

    @model_validator(mode="after")
    def one_input_source(self):
        sources = [s for s in (self.input_path, self.family, self.corpus_dir) if s is not None]
        if self.subcommand == "verify":
            if self.input_path is not None or self.family is not None:
                raise ValueError("verify reads the standard corpus or --corpus-dir, not a single group")
        elif len(sources) != 1 or self.corpus_dir is not None:
            raise ValueError(f"{self.subcommand} needs exactly one of a .grp file or --family")
        return self


def parse_config(args: argparse.Namespace) -> CliConfig:
    family = None
    if args.family:
        family = FamilySpec(
            family=args.family, p=args.p, m=args.m, n=args.n, r=args.r, s=args.s, t=args.t,
            variant=args.nu_variant,
        )
    caps = {p: cap for p, cap in ((2, args.max_order_2), (3, args.max_order_3), (5, args.max_order_5)) if cap}
    return CliConfig(
        subcommand=args.command,
        input_path=getattr(args, "input", None),
        family=family,
        corpus_dir=args.corpus_dir,
        output_format="json" if args.json else "text",
        out=args.out,
        dump_dir=args.dump_dir,
        suite=args.suite or [],
        max_cosets=args.max_cosets,
        max_order=args.max_order,
        timeout_secs=args.timeout_secs,
        jobs=args.jobs,
        corpus_caps=caps,
    )


def load_input(config: CliConfig, settings: AuditSettings) -> Tuple[ConcreteGroup, Optional[FamilySpec]]:
    """The group named on the command line, with its resolved family spec when built from one."""
    if config.family is not None:
        built = build(config.family, max_cosets=settings.max_cosets)
        derived = built.spec.derived()
        if derived:
            logger.info(f"[{built.group.label}] derived parameters: {derived}")
        return built.group, built.spec
    return read_grp(config.input_path, max_cosets=settings.max_cosets).group, None


def emit(config: CliConfig, payload: dict, text: str):
    print(json.dumps(payload, indent=2) if config.output_format == "json" else text)


def cmd_build(config: CliConfig, settings: AuditSettings) -> int:
    g, spec = load_input(config, settings)
    payload = {"label": g.label, "order": g.order}
    if spec is not None:
        payload["parameters"] = spec.parameters()
        payload["derived"] = spec.derived()
    if config.out:
        if config.out.endswith(".json"):
            save_group(g, config.out)
        else:
            with open(config.out, "w") as f:
                f.write(format_presentation(g.presentation, comment=g.label))
        logger.info(f"[{g.label}] saved to {config.out}")
    emit(config, payload, f"order {g.order}")
    return EXIT_OK


def cmd_classify(config: CliConfig, settings: AuditSettings) -> int:
    g, _ = load_input(config, settings)
    result = classify(g, settings.max_order)
    if config.output_format == "json":
        print(result.model_dump_json(indent=2))
        return EXIT_OK
    lines = [f"{key}: {value}" for key, value in result.model_dump(exclude={"flags"}).items()]
    lines += [f"{flag}: {value}" for flag, value in result.flags.items()]
    print("\n".join(lines))
    return EXIT_OK


def cmd_lattice(config: CliConfig, settings: AuditSettings) -> int:
    g, _ = load_input(config, settings)
    rows = [
        {
            "order": h.order,
            "normal": h.is_normal,
            "abelian": h.is_abelian,
            "generators": h.generator_words(),
        }
        for h in all_subgroups(g, settings.max_order)
    ]
    df = pd.DataFrame(rows, columns=["order", "normal", "abelian", "generators"])
    df["generators"] = df["generators"].apply(lambda words: ", ".join(words) or "1")
    emit(config, {"label": g.label, "subgroups": rows}, df.to_string(index=False))
    return EXIT_OK


def print_report(report: AuditReport):
    print("\n===== AUDIT RESULTS =====")
    print(f"Corpus size: {report.meta.corpus_size}")
    print("-----------------------------")
    if report.summary:
        print(summary_frame(report.summary).to_string(index=False))
    for r in report.reports:
        if r.verdict in ("fails", "error"):
            print(f"{r.theorem} {r.label}: {r.verdict} {r.message} {r.witness.model_dump_json() if r.witness else ''}")
    print("=============================\n")


def cmd_verify(config: CliConfig, settings: AuditSettings) -> int:
    if config.corpus_dir:
        corpus = load_corpus_dir(config.corpus_dir, max_cosets=settings.max_cosets)
        caps = {}
    else:
        caps = settings.corpus_caps
        corpus = standard_corpus(
            caps,
            max_cosets=settings.max_cosets,
            max_order=settings.max_order,
            isomorphism_cap=settings.isomorphism_cap,
        )
    if config.dump_dir:
        dump_corpus(corpus, config.dump_dir)
    logger.info(f"Auditing {len(corpus)} groups with {settings.jobs} job(s)")
    report = run_all(
        corpus,
        config.suite,
        settings.jobs,
        timeout=settings.timeout_secs,
        max_order=settings.max_order,
        batch_size=settings.batch_size,
        corpus_caps=caps,
    )
    save_report(report, config.out)
    if config.output_format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print_report(report)
    return EXIT_FAILURES if report.has_failures() else EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "classify": cmd_classify,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default="configs/config.json", help="Path to JSON config file with default caps")
    common.add_argument("--max-cosets", type=int, default=None, help="Live coset budget for enumeration")
    common.add_argument("--max-order", type=int, default=None, help="Largest order for subgroup lattices")
    common.add_argument("--timeout-secs", type=float, default=None, help="Per-group audit timeout")
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    common.add_argument("--out", default=None, help="Output file, or directory for verify reports")
    common.add_argument("--jobs", type=int, default=None, help="Parallel workers for verify")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("input", nargs="?", default=None, help="Presentation file (.grp)")
    source.add_argument("--family", default=None, help="Family id, e.g. MpMN or A2Type4")
    for name in ("p", "m", "n", "r", "s", "t"):
        source.add_argument(f"--{name}", type=int, default=None)
    source.add_argument("--nu-variant", choices=["one", "nonresidue"], default=None)

    parser = argparse.ArgumentParser(description="Build, classify and audit finite p-groups")
    commands = parser.add_subparsers(dest="command", required=True)
    for name in ("build", "classify", "lattice"):
        sub = commands.add_parser(name, parents=[common, source])
        sub.set_defaults(corpus_dir=None, dump_dir=None, suite=None,
                         max_order_2=None, max_order_3=None, max_order_5=None)
    verify = commands.add_parser("verify", parents=[common])
    verify.add_argument("--corpus-dir", default=None, help="Audit the .grp files in this directory")
    verify.add_argument("--suite", action="append", default=None, help="Theorem id to audit (repeatable)")
    verify.add_argument("--max-order-2", type=int, default=None)
    verify.add_argument("--max-order-3", type=int, default=None)
    verify.add_argument("--max-order-5", type=int, default=None)
    verify.add_argument("--dump-dir", default=None, help="Write the corpus as .grp files here")
    verify.set_defaults(family=None, p=None, m=None, n=None, r=None, s=None, t=None, nu_variant=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging()
    try:
        config = parse_config(args)
        settings = load_settings(
            args.config,
            max_cosets=config.max_cosets,
            max_order=config.max_order,
            timeout_secs=config.timeout_secs,
            jobs=config.jobs,
        )
        if config.corpus_caps:
            settings = settings.model_copy(update={"corpus_caps": {**settings.corpus_caps, **config.corpus_caps}})
    except ValidationError as e:
        logger.error(f"Invalid arguments or settings: {str(e)}")
        return EXIT_USAGE
    try:
        return COMMANDS[config.subcommand](config, settings)
    except Exception as e:
        for errors, code in EXIT_CODES:
            if isinstance(e, errors):
                logger.error(f"{type(e).__name__}: {str(e)}")
                return code
        logger.error(f"Error running {config.subcommand}: {str(e)}")
        return EXIT_FAILURES


if __name__ == "__main__":
    sys.exit(main())
