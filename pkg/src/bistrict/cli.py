"""``biperm-check``: run the law suites against a concrete instance.

Exit codes: 0 when every suite passes, 1 on any law failure, 2 on a usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import (
    REPORT_SCHEMA,
    TOOL_VERSION,
    SamplerConfig,
    deserialize_inputs,
    evaluate,
    find_law,
    seed_from_env,
)
from .instances import SemiringLawError, instance_from_name
from .mutations import MUTATIONS
from .suites import SUITES, build_groups, run_suite


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biperm-check", description=__doc__.split("\n")[0])
    p.add_argument("suites", nargs="+", metavar="SUITE", help=f"one or more of: all, {', '.join(SUITES)}")
    p.add_argument("--instance", default="fsk", help="fsk, bool-semiring, mod<N>, sat<N> or table:PATH")
    p.add_argument("--seed", type=_nonneg, default=None, help="defaults to $BIPERM_CHECK_SEED, then 0")
    p.add_argument("--max-size", type=_nonneg, default=4)
    p.add_argument("--max-add-len", type=_nonneg, default=2)
    p.add_argument("--max-mul-len", type=_nonneg, default=2)
    p.add_argument("--max-alphabet-size", type=_nonneg, default=2, help="object bound for alphabets of Bs objects")
    p.add_argument("--samples", type=_nonneg, default=1000, help="seeded cases per law")
    p.add_argument("--exhaustive", action="store_true", help="lift the cap on the exhaustive object tier")
    p.add_argument("--mutate", choices=sorted(MUTATIONS), default=None, help="run against a deliberately broken variant")
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    return p


def build_replay_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biperm-check replay", description="re-evaluate the failures recorded in a JSON report")
    p.add_argument("report", help="path to a JSON report")
    return p


def resolve_suites(names) -> list:
    out = []
    for n in names:
        if n == "all":
            out.extend(SUITES)
        elif n in SUITES:
            out.append(n)
        else:
            raise UsageError(f"unknown suite {n!r}; expected 'all' or one of {', '.join(SUITES)}")
    return sorted(set(out), key=SUITES.index)


def load_instance(name: str):
    try:
        return instance_from_name(name)
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad --instance {name!r}: {exc}") from exc


def make_report(suites, instance, config, mutation, reports) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "tool_version": TOOL_VERSION,
        "instance": instance,
        "mutation": mutation,
        "suite_names": suites,
        "config": config.to_json(),
        "suites": {r.suite: r.to_json() for r in reports},
        "passed": all(r.passed for r in reports),
    }


def render_text(report: dict) -> str:
    lines = [f"biperm-check {report['tool_version']}  instance={report['instance']}  seed={report['config']['seed']}"]
    if report["mutation"]:
        lines.append(f"mutation: {report['mutation']}")
    for name, r in report["suites"].items():
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{status}  {name}: {len(r['laws'])} laws, {r['cases']} cases, {len(r['failures'])} failures")
        for f in r["failures"]:
            lines.append(f"      {f['law']} case {f['case']} [{f['kind']}]: {f['message']}")
        for s in r["skipped"]:
            lines.append(f"      skipped {s['law']}: {s['reason']}")
    lines.append("overall: " + ("PASS" if report["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"


def dump_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_check(argv) -> int:
    args = build_parser().parse_args(argv)
    suites = resolve_suites(args.suites)
    cat = load_instance(args.instance)
    config = SamplerConfig(
        seed=seed_from_env() if args.seed is None else args.seed,
        max_size=args.max_size,
        max_add_len=args.max_add_len,
        max_mul_len=args.max_mul_len,
        max_alphabet_size=args.max_alphabet_size,
        samples=args.samples,
        exhaustive=args.exhaustive,
    )
    reports = [run_suite(name, cat, config, args.mutate) for name in suites]
    report = make_report(suites, args.instance, config, args.mutate, reports)
    _emit(dump_json(report) if args.report == "json" else render_text(report), args.output)
    return 0 if report["passed"] else 1


def run_replay(argv) -> int:
    args = build_replay_parser().parse_args(argv)
    try:
        with open(args.report, encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("schema") != REPORT_SCHEMA:
            raise UsageError(f"unsupported report schema {data.get('schema')!r}")
        config = SamplerConfig(**data["config"])
        mutation = data.get("mutation")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read report {args.report!r}: {exc}") from exc
    cat = load_instance(data["instance"])
    reproduced = 0
    total = 0
    for suite, rep in sorted(data["suites"].items()):
        if not rep["failures"]:
            continue
        groups, _ = build_groups(suite, cat, config, mutation)
        for f in rep["failures"]:
            total += 1
            found = find_law(groups, f["law"])
            if found is None:
                print(f"{suite}: {f['law']} case {f['case']}: law no longer exists")
                continue
            law, sampler = found
            inputs = deserialize_inputs(sampler.cat, f["inputs"])
            result = evaluate(law, inputs)
            still = result is not None
            reproduced += still
            print(f"{suite}: {f['law']} case {f['case']}: {'reproduced' if still else 'now passes'}")
    print(f"{reproduced} of {total} recorded failures reproduce")
    return 1 if reproduced else 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "replay":
            return run_replay(argv[1:])
        return run_check(argv)
    except UsageError as exc:
        print(f"biperm-check: error: {exc}", file=sys.stderr)
        return 2
    except SemiringLawError as exc:
        print(f"biperm-check: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
