import argparse
import sys
from typing import List, Optional

from src.config import log_config, search_config
from src.core import RankingError
from src.cli.instance_file import parse_ranking_arg, read_instance, serialize_instance, write_instance
from src.cli.report import EXIT_AFFIRMATIVE, EXIT_NEGATIVE, Report
from src.experiments import SUITES, ExperimentRunner
from src.generators import (GENERATOR_NAME, appendix_b_instance, example1_instance, extended_condorcet,
                            fig1_instance, obs4_instance, random_instance, tight_c_instance)
from src.kemeny import improvement_chain, kemeny_consensus, kemeny_rank
from src.majority import (build_majority_graph, export_dot, is_acyclic, is_tournament, preserved_partition,
                          topological_sorts)
from src.popularity import Mode, compare, lift_simple_witness_to_absolute, verify_popular
from src.small_n import three_all_closer_ranking
from src.utils import setup_logger

logger = setup_logger(log_config.log_path("cli.log"), log_config.level)

NAMED_INSTANCES = {
    "fig1": fig1_instance,
    "example1": example1_instance,
    "obs4": obs4_instance,
    "appendixB": appendix_b_instance,
}


def cmd_verify(args, report: Report) -> Report:
    inst = read_instance(args.file)
    ranking = parse_ranking_arg(args.ranking, inst.m)
    verdict = verify_popular(inst, ranking, Mode(args.mode), args.budget, args.threads, progress=args.progress)

    result = verdict.to_dict()
    result.pop("status")
    return report.finish(verdict.status.value, EXIT_AFFIRMATIVE if verdict.is_popular else EXIT_NEGATIVE, **result)


def cmd_kemeny(args, report: Report) -> Report:
    inst = read_instance(args.file)

    if args.improve:
        chain = improvement_chain(inst, parse_ranking_arg(args.improve, inst.m), args.budget)
        return report.finish(
            "ok", EXIT_AFFIRMATIVE,
            chain=[ranking.to_list() for ranking in chain],
            ranks=[kemeny_rank(inst, ranking) for ranking in chain],
            iterations=len(chain) - 1,
            consensus=chain[-1].to_list(),
        )

    result = kemeny_consensus(inst, args.budget, args.cap)
    return report.finish("ok", EXIT_AFFIRMATIVE, **result.to_dict())


def cmd_majority(args, report: Report) -> Report:
    inst = read_instance(args.file)
    graph = build_majority_graph(inst)
    acyclic = is_acyclic(graph)

    limit = search_config.topsort_limit if args.limit is None else args.limit
    sorts = sum(1 for _ in topological_sorts(inst, limit + 1))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(export_dot(graph))
        logger.info(f"Majority graph written to {args.dot}")

    return report.finish(
        "acyclic" if acyclic else "cyclic",
        EXIT_AFFIRMATIVE if acyclic else EXIT_NEGATIVE,
        acyclic=acyclic,
        tournament=is_tournament(graph),
        arcs=len(graph.arcs),
        cycle=graph.find_cycle(),
        topological_sorts=min(sorts, limit),
        topological_sorts_capped=sorts > limit,
        preserved_partition=preserved_partition(inst).as_lists(),
        dot=args.dot,
    )


def cmd_generate(args, report: Optional[Report]) -> Optional[Report]:
    extra = {}
    if args.name in NAMED_INSTANCES:
        inst = NAMED_INSTANCES[args.name]()
        comment = f"{args.name} instance"
    elif args.name == "tightc":
        inst, pi, sigma = tight_c_instance(args.j)
        comment = f"tight-c instance, j = {args.j}\npi = {pi}\nsigma = {sigma}"
        extra = {"pi": pi.to_list(), "sigma": sigma.to_list()}
    elif args.name == "condorcet":
        inst = extended_condorcet(args.n)
        comment = f"extended Condorcet instance, n = {args.n}"
    else:
        inst = random_instance(args.n, args.m, args.seed)
        comment = f"random instance, n = {args.n}, m = {args.m}, seed = {args.seed} ({GENERATOR_NAME})"

    if not args.out:
        sys.stdout.write(serialize_instance(inst, comment))
        return None

    write_instance(args.out, inst, comment)
    logger.info(f"Wrote {args.name} instance ({inst.n} voters, {inst.m} candidates) to {args.out}")
    return report.finish("ok", EXIT_AFFIRMATIVE, path=args.out, n=inst.n, m=inst.m, **extra)


def cmd_acr3(args, report: Report) -> Report:
    inst = read_instance(args.file)
    outcome = three_all_closer_ranking(inst, parse_ranking_arg(args.ranking, inst.m))
    found = outcome.result is not None
    return report.finish("found" if found else "none", EXIT_NEGATIVE if found else EXIT_AFFIRMATIVE,
                         **outcome.to_dict())


def cmd_lift(args, report: Report) -> Report:
    inst = read_instance(args.file)
    pi = parse_ranking_arg(args.pi, inst.m)
    sigma1 = parse_ranking_arg(args.sigma1, inst.m)

    sigma2 = lift_simple_witness_to_absolute(inst, pi, sigma1, args.budget)
    return report.finish("ok", EXIT_AFFIRMATIVE, sigma2=sigma2.to_list(), tally=compare(inst, sigma2, pi).to_dict())


def cmd_experiments(args, report: Report) -> Report:
    suites = SUITES if "all" in args.suite else args.suite
    runner = ExperimentRunner(args.seed, progress=args.progress)
    df = runner.run(suites, args.count)
    path = runner.save_to_csv(df, args.out)

    summary = runner.summarize(df)
    violations = int(summary["violations"].sum())
    return report.finish(
        "ok" if violations == 0 else "violations",
        EXIT_AFFIRMATIVE if violations == 0 else EXIT_NEGATIVE,
        path=path,
        summary=[{"suite": row.suite, "checks": int(row.checks), "violations": int(row.violations)}
                 for row in summary.itertuples(index=False)],
        violations=violations,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None, help="maximum rankings / nodes to search")
    common.add_argument("--threads", type=int, default=None, help="worker threads (output does not depend on it)")

    parser = argparse.ArgumentParser(prog="rankpop", description="Popular rankings and Kemeny consensus toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="verify that a ranking is popular")
    verify.add_argument("file")
    verify.add_argument("ranking")
    verify.add_argument("--mode", choices=[mode.value for mode in Mode], default=Mode.ABSOLUTE.value)
    verify.add_argument("--progress", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    kemeny = sub.add_parser("kemeny", parents=[common], help="exact Kemeny consensus")
    kemeny.add_argument("file")
    kemeny.add_argument("--improve", metavar="START", help="improve from START until no smaller rank exists")
    kemeny.add_argument("--cap", type=int, default=None, help="maximum minimizers to list")
    kemeny.set_defaults(handler=cmd_kemeny)

    majority = sub.add_parser("majority", help="majority graph analysis")
    majority.add_argument("file")
    majority.add_argument("--dot", metavar="OUT", help="write the majority graph as DOT")
    majority.add_argument("--limit", type=int, default=None, help="cap on counted topological sorts")
    majority.set_defaults(handler=cmd_majority)

    generate = sub.add_parser("generate", help="write a named or random instance")
    generate.add_argument("name", choices=list(NAMED_INSTANCES) + ["tightc", "condorcet", "random"])
    generate.add_argument("--j", type=int, default=1)
    generate.add_argument("--n", type=int, default=3)
    generate.add_argument("--m", type=int, default=3)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--out", help="output file (stdout when omitted)")
    generate.set_defaults(handler=cmd_generate)

    acr3 = sub.add_parser("acr3", help="ranking preferred by all three voters")
    acr3.add_argument("file")
    acr3.add_argument("ranking")
    acr3.set_defaults(handler=cmd_acr3)

    lift = sub.add_parser("lift", parents=[common], help="turn a simple-majority witness into an absolute one")
    lift.add_argument("file")
    lift.add_argument("pi")
    lift.add_argument("sigma1")
    lift.set_defaults(handler=cmd_lift)

    experiments = sub.add_parser("experiments", help="run seeded property suites")
    experiments.add_argument("--suite", nargs="+", choices=SUITES + ["all"], default=["all"])
    experiments.add_argument("--count", type=int, default=100)
    experiments.add_argument("--seed", type=int, default=0)
    experiments.add_argument("--out", help="CSV path (data directory when omitted)")
    experiments.add_argument("--no-progress", dest="progress", action="store_false")
    experiments.set_defaults(handler=cmd_experiments)

    return parser


def _inputs(args) -> dict:
    hidden = {"handler", "command", "threads", "progress"}
    return {key: value for key, value in vars(args).items() if key not in hidden}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for the command line tool"""
    args = build_parser().parse_args(argv)
    report = Report(args.command, _inputs(args))

    try:
        report = args.handler(args, report)
    except (RankingError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        report.fail(e)
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        report.fail(e)

    if report is None:
        return EXIT_AFFIRMATIVE

    print(report.to_json())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
