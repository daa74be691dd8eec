"""Command-line interface.

Exit codes: 0 success, 1 usage or domain error, 2 a proof gate failed,
3 a resource limit was hit. ◊ is typed as ``*``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib import resources
from pathlib import Path

from . import chemistry, fst, io, machines, theorems
from .machines import A, B

EXIT_OK, EXIT_USAGE, EXIT_GATE, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def golden_dir(arg: str | None) -> Path:
    """``AUDIOACTIVE_GOLDEN`` beats ``--golden``, which beats the bundled files."""
    env = os.environ.get("AUDIOACTIVE_GOLDEN")
    if env:
        return Path(env)
    if arg:
        return Path(arg)
    return Path(str(resources.files("audioactive") / "golden"))


def load_golden(directory: Path, name: str) -> dict | None:
    path = directory / f"{name}.json"
    if not path.exists():
        return None
    return json.loads(path.read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_derive(args) -> int:
    text = args.word.replace("d", "[4]")
    try:
        word = chemistry.parse_int_word(text)
    except (ValueError, chemistry.DomainError) as exc:
        raise UsageError(str(exc)) from None
    if not word:
        raise UsageError("empty word")
    for _ in range(args.steps):
        word = chemistry.derive(word)
        print(chemistry.format_int_word(word))
    return EXIT_OK


def _encode(table, text: str):
    try:
        return table.encode(text)
    except fst.ContractError as exc:
        raise UsageError(str(exc)) from None


def cmd_audio(args) -> int:
    marked = "*" in args.word or fst.DIAMOND in args.word
    machine = machines.build_audio_plus() if marked else machines.build_audio()
    table = B if marked else A
    outputs = fst.transduce(machine, _encode(table, args.word))
    if not outputs:
        print("no output (input is not day-one or has a misplaced mark)")
    for w in sorted(outputs, key=lambda w: (len(w), w)):
        print(table.decode(w, ascii=True))
    return EXIT_OK


def cmd_split(args) -> int:
    word = _encode(B, args.word)
    if word.count(machines.MARK) != 1:
        raise UsageError("mark the split point with exactly one '*'")
    report = theorems.prove_splitting(max(args.depth, 2))
    for n in range(1, args.depth + 1):
        if not fst.accepts(report.recognizer(n), word):
            print(f"not a splitting (fails at depth {n})")
            return EXIT_OK
    print("valid splitting")
    return EXIT_OK


def cmd_factorize(args) -> int:
    m = theorems.standard_machines()
    splits, is_atom = theorems.automaton_predicates(m["splitting"], m["atom"])
    try:
        factors = chemistry.atomic_factorization(args.word, splits, is_atom)
    except chemistry.DomainError as exc:
        raise UsageError(str(exc)) from None
    names = []
    for f in factors:
        try:
            names.append(chemistry.lookup_element(f).name)
        except chemistry.ElementNotFound:
            names.append(None)
    if args.format == "json":
        print(json.dumps({"word": args.word, "factors": factors, "names": names}))
    elif len(factors) == 1:
        print(f"{args.word} = {names[0]}" if names[0] else f"{args.word} (atom)")
    else:
        joined = "·".join(factors)
        print(f"{args.word} = {joined} ({' '.join(n or '?' for n in names)})")
    return EXIT_OK


def cmd_elements(args) -> int:
    table = chemistry.PERIODIC_TABLE
    if args.format == "json":
        print(table.to_json())
        return EXIT_OK
    for e in table:
        print(f"{e.atomic_number:3d}  {e.name:<2}  {e.word:<44}  {' '.join(e.decay)}")
    return EXIT_OK


def cmd_growth(args) -> int:
    g = chemistry.growth_rate()
    if args.format == "json":
        print(json.dumps({"lambda": g.lam, "iterations": g.iterations, "residual": g.residual}))
    else:
        print(f"lambda = {g.lam:.10f} (residual {g.residual:.2e}, {g.iterations} iterations)")
    return EXIT_OK


def _compare_golden(report_json: dict, golden: dict | None, failures: list[str]) -> None:
    if golden is None:
        return
    for key, value in golden.items():
        got = report_json.get(key)
        if key == "sizes":
            n = min(len(got), len(value))
            got, value = got[:n], value[:n]
        if key in report_json and got != value:
            failures.append(f"{key} differs from the golden file")


def cmd_prove(args) -> int:
    start = time.perf_counter()
    failures: list[str] = []
    gdir = golden_dir(args.golden)
    if args.which == "splitting":
        max_n = args.max_n or 10
        report = theorems.prove_splitting(max(max_n, 2))
        data = report.to_json()
        if report.fixed_point_n is None:
            failures.append(f"no fixed point within n={max_n}")
        else:
            if report.fixed_point_n != theorems.SPLITTING_FIXED_POINT:
                failures.append(f"fixed point at n={report.fixed_point_n}")
            split = report.splitting_recognizer
            atom = theorems.build_atom_recognizer(split)
            data["splitting_states"] = split.num_states
            data["atom_states"] = atom.num_states
            if not fst.isomorphic(split, fst.canonical(theorems.parse_table(theorems.SPLITTING_TABLE, B))):
                failures.append("splitting recognizer differs from the reference table")
            if not fst.isomorphic(atom, fst.canonical(theorems.parse_table(theorems.ATOM_TABLE, A))):
                failures.append("atom recognizer differs from the reference table")
        if tuple(report.sizes[:9]) != theorems.SPLITTING_SIZES:
            failures.append(f"sizes {report.sizes[:9]} differ from {list(theorems.SPLITTING_SIZES)}")
        summary = (
            f"fixed point n={report.fixed_point_n}"
            if report.fixed_point_n
            else f"no fixed point within bound (n<={max_n})"
        )
    else:
        max_n = args.max_n or 25
        m = theorems.standard_machines()
        report = theorems.prove_cosmological(m["atomicf"], max_n)
        verdict = theorems.verify_periodic_table(report, splitting=m["splitting"], atom=m["atom"])
        data = report.to_json()
        data["verdict"] = verdict.to_json()
        if report.fixed_point_n is None:
            failures.append(f"no fixed point within bound (n<={max_n})")
            summary = f"no fixed point within bound (n<={max_n})"
        else:
            summary = f"E stabilizes at n={report.fixed_point_n} with {len(report.elements)} elements"
            if report.fixed_point_n != theorems.COSMOLOGY_FIXED_POINT:
                failures.append(f"fixed point at n={report.fixed_point_n}")
            if len(report.elements) != theorems.ELEMENT_COUNT:
                failures.append(f"{len(report.elements)} elements")
            failures += verdict.failures
        for n in (1, 6, 24, 25):
            if len(report.sizes) >= n and report.sizes[n - 1] != theorems.COSMOLOGY_SIZES[n - 1]:
                failures.append(f"size at n={n} is {report.sizes[n - 1]}")
    if report.fixed_point_n is not None:
        _compare_golden(data, load_golden(gdir, args.which), failures)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        data["gates_passed"] = not failures
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(f"sizes: {' '.join(map(str, report.sizes))}")
        print(summary)
        for f in failures:
            print(f"FAIL: {f}")
        print(f"{'all gates pass' if not failures else 'gate failure'} ({elapsed:.2f}s)")
    return EXIT_OK if not failures else EXIT_GATE


def _load_machine(name: str) -> fst.Transducer:
    if name.endswith(".json") and Path(name).exists():
        return io.loads(Path(name).read_text(encoding="utf-8"))
    try:
        return machines.build(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def cmd_export(args) -> int:
    t = _load_machine(args.machine)
    if args.format == "dot":
        _emit(io.to_dot(t, Path(args.machine).stem), args.output)
    else:
        _emit(io.dumps(t), args.output)
    return EXIT_OK


def cmd_verify_table(args) -> int:
    m = theorems.standard_machines()
    report = theorems.prove_cosmological(m["atomicf"], args.max_n or 25)
    verdict = theorems.verify_periodic_table(report, splitting=m["splitting"], atom=m["atom"])
    if report.fixed_point_n is None:
        verdict.failures.insert(0, "no fixed point within bound")
    if args.format == "json":
        print(json.dumps(verdict.to_json(), indent=2))
    else:
        for f in verdict.failures:
            print(f"FAIL: {f}")
        if verdict.passed:
            print(f"periodic table verified: {len(report.elements)} elements, all decays match")
    return EXIT_OK if verdict.passed else EXIT_GATE


def cmd_audit(args) -> int:
    if args.steps is None or not 1 <= args.steps <= 25:
        raise UsageError("audit-audio-src needs -n between 1 and 25")
    try:
        count = theorems.audit_audio_src(args.steps, args.limit_states)
    except theorems.ResourceLimitExceeded as exc:
        print(f"audit aborted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MemoryError:
        print("audit aborted: out of memory", file=sys.stderr)
        return EXIT_RESOURCE
    print(f"Audio^{args.steps} . Src: {count} states")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="audioactive", description="Audioactive decay via finite-state transducers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("human", "json", "dot"), default="human")
        return sp

    sp = add("derive", cmd_derive, "print the derivation chain of a word")
    sp.add_argument("word")
    sp.add_argument("-n", "--steps", type=int, default=1)
    sp = add("audio", cmd_audio, "run Audio (or Audio+ when the word has a '*') on a word")
    sp.add_argument("word")
    sp = add("split", cmd_split, "test whether u*v is a splitting")
    sp.add_argument("word")
    sp.add_argument("--depth", type=int, default=10)
    sp = add("factorize", cmd_factorize, "split a day-one word into atoms")
    sp.add_argument("word")
    add("elements", cmd_elements, "list the 94 elements")
    add("growth", cmd_growth, "growth ratio of the common elements")
    sp = add("prove", cmd_prove, "run a proof pipeline and check its gates")
    sp.add_argument("which", choices=("splitting", "cosmological"))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--golden")
    sp = add("export", cmd_export, "write a machine (name or .json file) as JSON or DOT")
    sp.set_defaults(format="json")
    sp.add_argument("machine")
    sp.add_argument("-o", "--output")
    sp = add("verify-table", cmd_verify_table, "check the element table against the enumeration")
    sp.add_argument("--max-n", type=int)
    sp = add("audit-audio-src", cmd_audit, "state count of minimized Audio^n . Src")
    sp.add_argument("-n", "--steps", type=int, default=25)
    sp.add_argument("--limit-states", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("steps", "max_n", "depth", "limit_states"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "steps" else 1):
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
