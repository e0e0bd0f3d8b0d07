"""Command-line entry point: ``levicivita {eval,enumerate,verify,identities,bench}``.

Exit status is 0 on success, 1 on a usage or domain error and 2 when a
verification (backend sweep or identity suite) finds a mismatch. Data goes to
stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from levicivita.backends import (
    PRESETS,
    Backend,
    BackendKind,
    GeneratorKind,
    GeneratorSpec,
    all_backends,
    generalized_backend,
    parse_backend,
    random_generator,
)
from levicivita.backends.generalized import GeneralizedEvaluator
from levicivita.backends.special import R2Form, R3Form
from levicivita.bench import BenchConfig, run_bench, to_csv, to_jsonl
from levicivita.core import validate_multi_index
from levicivita.enumeration import default_jobs, enumerate_all, iter_signs, verify_backend
from levicivita.errors import EnumerationError
from levicivita.identities import run_identity_suite
from levicivita.specfun import Family, PolynomialFamily

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt_sign(s: int) -> str:
    return f"{s:+d}" if s else "0"


def _add_backend_options(p):
    p.add_argument("--backend", default="oracle",
                   help="backend name, e.g. oracle, rational-product, r3-special:sin")
    p.add_argument("--form", help="form for r2-special / r3-special")
    p.add_argument("--generator", choices=[k.value for k in GeneratorKind],
                   help="generator family for --backend generalized")
    p.add_argument("--polynomial", choices=[f.value for f in Family],
                   help="polynomial family for --generator polynomial")
    p.add_argument("--order", type=int, default=2, help="polynomial order (default 2)")
    p.add_argument("--lambda", dest="lam", type=float, help="real part of lambda")
    p.add_argument("--lambda-imag", dest="lam_imag", type=float, default=0.0,
                   help="imaginary part of lambda")
    p.add_argument("--preset", choices=sorted(PRESETS), help="named generator instance")
    p.add_argument("--random-lambda", action="store_true",
                   help="draw lambda at random until the generator is valid (see --seed)")
    p.add_argument("--seed", type=int, default=0)


def _backend_from_args(args, n: int) -> Backend:
    name = args.backend
    if ":" in name:
        return parse_backend(name)
    kind = BackendKind(name) if name in {k.value for k in BackendKind} else None
    if kind is None:
        return parse_backend(name)
    if kind in (BackendKind.R2_SPECIAL, BackendKind.R3_SPECIAL):
        if not args.form:
            raise UsageError(f"--backend {name} needs --form")
        forms = R2Form if kind is BackendKind.R2_SPECIAL else R3Form
        return Backend(kind, form=forms(args.form))
    if kind is not BackendKind.GENERALIZED:
        return Backend(kind)
    if args.preset:
        return generalized_backend(args.preset)
    if not args.generator:
        raise UsageError("--backend generalized needs --generator or --preset")
    gkind = GeneratorKind(args.generator)
    poly = None
    if gkind is GeneratorKind.POLYNOMIAL:
        if not args.polynomial:
            raise UsageError("--generator polynomial needs --polynomial")
        poly = PolynomialFamily(Family(args.polynomial), args.order)
    if args.random_lambda:
        return generalized_backend(random_generator(gkind, n, seed=args.seed, polynomial=poly))
    if args.lam is None:
        lam = 1
    elif args.lam_imag:
        lam = complex(args.lam, args.lam_imag)
    else:
        lam = args.lam
    return generalized_backend(GeneratorSpec(gkind, lam, poly))


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise UsageError(f"--indices must be comma-separated integers, got {text!r}") from None


def cmd_eval(args, out, err) -> int:
    idx = validate_multi_index(args.n, _parse_indices(args.indices))
    backend = _backend_from_args(args, args.n)
    backend.check(args.n)
    if args.diagnostics and backend.kind is BackendKind.GENERALIZED:
        sign, diag = GeneralizedEvaluator(backend.generator, args.n).evaluate(idx.indices)
        print(_fmt_sign(sign), file=out)
        print(f"raw={diag.raw_value!r} deviation={diag.deviation:.3e}", file=err)
        return EXIT_OK
    print(_fmt_sign(backend.evaluate(idx)), file=out)
    return EXIT_OK


def _record_line(t, s, fmt):
    if fmt == "jsonl":
        return json.dumps({"indices": list(t), "sign": s})
    if fmt == "csv":
        return ",".join(map(str, t)) + f",{s}"
    return "(" + ",".join(map(str, t)) + f") {_fmt_sign(s)}"


def cmd_enumerate(args, out, err) -> int:
    n = args.n
    backend = _backend_from_args(args, n)
    if args.counts_only:
        report = enumerate_all(n, backend, jobs=args.jobs)
        _print_counts(report, args.format, out)
        return EXIT_OK
    if args.format == "csv":
        print(",".join(f"i{k}" for k in range(1, n + 1)) + ",sign", file=out)
    if args.nonzero_only:
        report = enumerate_all(n, backend, list_nonzero=True, jobs=args.jobs)
        for t, s in report.nonzero:
            print(_record_line(t, s, args.format), file=out)
        print(f"{backend.name} n={n}: +1={report.count_plus} -1={report.count_minus} "
              f"0={report.count_zero}", file=err)
        return EXIT_OK
    plus = minus = zero = 0
    for t, s in iter_signs(n, backend):
        if s == 1:
            plus += 1
        elif s == -1:
            minus += 1
        else:
            zero += 1
        print(_record_line(t, s, args.format), file=out)
    print(f"{backend.name} n={n}: +1={plus} -1={minus} 0={zero}", file=err)
    return EXIT_OK


def _print_counts(report, fmt, out):
    c = report.counts()
    if fmt == "jsonl":
        print(json.dumps(c), file=out)
    elif fmt == "csv":
        print(",".join(c), file=out)
        print(",".join(str(v) for v in c.values()), file=out)
    else:
        print(f"{c['backend']} n={c['n']}: +1={c['plus']} -1={c['minus']} 0={c['zero']} "
              f"disagreements={c['disagreements']}", file=out)


def cmd_verify(args, out, err) -> int:
    n = args.n
    if args.backends == "all":
        backends = all_backends(n, seed=args.seed)
    else:
        backends = [parse_backend(b) for b in args.backends.split(",") if b.strip()]
        for b in backends:
            b.check(n)
    failed = False
    if args.format == "csv":
        print("n,backend,plus,minus,zero,disagreements", file=out)
    for b in backends:
        try:
            report = verify_backend(n, b, jobs=args.jobs)
        except EnumerationError as exc:
            print(f"{'FAILED':8s} {b.name} n={n}: {exc}", file=err)
            failed = True
            continue
        c = report.counts()
        if args.format == "jsonl":
            print(json.dumps(c), file=out)
        elif args.format == "csv":
            print(f"{n},{b.name},{c['plus']},{c['minus']},{c['zero']},{c['disagreements']}",
                  file=out)
        else:
            status = "ok" if report.ok else "MISMATCH"
            print(f"{status:8s} {b.name} n={n} +1={c['plus']} -1={c['minus']} 0={c['zero']}",
                  file=out)
        for t, got, want in report.disagreements[:5]:
            print(f"  {b.name}: {t} gave {got}, oracle {want}", file=err)
        failed |= not report.ok
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_identities(args, out, err) -> int:
    results = run_identity_suite(seed=args.seed, count=args.count)
    for r in results:
        if args.format == "jsonl":
            print(json.dumps({"check": r.name, "passed": r.passed, "cases": r.cases,
                              "detail": r.detail}), file=out)
        else:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases) {r.detail}".rstrip(),
                  file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def cmd_bench(args, out, err) -> int:
    backends = [parse_backend(b) for b in args.backends.split(",") if b.strip()]
    cfg = BenchConfig(args.n_min, args.n_max, tuple(backends), repetitions=args.reps,
                      warmup_sweeps=args.warmup, jobs=args.jobs, seed=args.seed)
    records = run_bench(cfg)
    out.write(to_jsonl(records) if args.format == "jsonl" else to_csv(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="levicivita", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one multi-index")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--indices", required=True, help="comma-separated, 1-based")
    p.add_argument("--diagnostics", action="store_true",
                   help="report the pre-rounding value on stderr (generalized backend)")
    _add_backend_options(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("enumerate", help="sweep all n**n tuples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nonzero-only", action="store_true")
    p.add_argument("--counts-only", action="store_true")
    p.add_argument("--format", choices=["plain", "csv", "jsonl"], default="plain")
    p.add_argument("--jobs", type=int, default=None)
    _add_backend_options(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare backends with the oracle exhaustively")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--backends", default="all", help="'all' or a comma-separated list")
    p.add_argument("--format", choices=["plain", "csv", "jsonl"], default="plain")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--seed", type=int, default=0, help="seed for the random-lambda backend")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identities", help="run the epsilon-product and determinant checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="random matrices per dimension")
    p.add_argument("--format", choices=["plain", "jsonl"], default="plain")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("bench", help="time full sweeps")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--backends", default="oracle,rational-product,straub-determinant")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) is None:
            args.jobs = default_jobs()
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"levicivita: usage error: {exc} (argv: {' '.join(argv)})", file=err)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"levicivita: error: {exc} (argv: {' '.join(argv)})", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
