"""Command-line front end.

Subcommands::

    wordgf gf --input problem.json [--method cluster|recursive] [--series N] [--check-oracle N]
    wordgf ingest --corpus words.txt --alphabet letters.txt [--skip-invalid] --out model.json
    wordgf avoid --model model.json --forbidden '[["SP","t","h","e"]]' [--series N]

Exit codes: 0 success, 2 validation error, 3 solver error, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from .algebra import RationalFunction, Role, SeriesPrefix, VariableName, parse_variable, series_in_t
from .corpus import CharModel, format_probability, ingest_word_list, model_to_problem, read_alphabet, read_corpus
from .errors import SchemaError, SolverError, ValidationError
from .gj import generating_function
from .language import Alphabet, validate_or_reduce
from .oracle import OracleRequest, brute_force_series, first_mismatch
from .problem import MarkPolicy, Problem, Variant
from .recursive import RecursiveEngine

EXIT_OK, EXIT_VALIDATION, EXIT_SOLVER, EXIT_MISMATCH = 0, 2, 3, 4

_GROUPS = {"single": (Role.SINGLE, 1), "pair": (Role.PAIR, 2), "triple": (Role.TRIPLE, 3), "final": (Role.FINAL, 1)}


def _rational(value, path) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(path, "expected a rational, got a boolean")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(path, f"not an exact rational: {value!r}") from None
    raise SchemaError(path, f"expected a rational string, got {type(value).__name__}")


def _string_list(value, path) -> list:
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise SchemaError(path, "expected a list of strings")
    return value


def parse_problem(document: dict) -> Problem:
    """Validated :class:`Problem` from a JSON problem document."""
    if not isinstance(document, dict):
        raise SchemaError("$", "problem document must be an object")
    unknown = set(document) - {"alphabet", "forbidden", "variant", "mark", "weights", "auto_reduce"}
    if unknown:
        raise SchemaError("$", f"unknown keys {sorted(unknown)}")
    if "alphabet" not in document:
        raise SchemaError("$.alphabet", "required")
    alphabet = Alphabet(tuple(_string_list(document["alphabet"], "$.alphabet")))

    raw = document.get("forbidden", [])
    if not isinstance(raw, list):
        raise SchemaError("$.forbidden", "expected a list of words")
    words = []
    for i, w in enumerate(raw):
        tokens = _string_list(w, f"$.forbidden[{i}]")
        for j, tok in enumerate(tokens):
            if tok not in alphabet.symbols:
                raise SchemaError(f"$.forbidden[{i}][{j}]", f"unknown letter {tok!r}")
        words.append(alphabet.word(tokens))
    auto = document.get("auto_reduce", False)
    if not isinstance(auto, bool):
        raise SchemaError("$.auto_reduce", "expected a boolean")
    forbidden = validate_or_reduce(words, alphabet, auto)

    try:
        variant = Variant(document.get("variant", "single"))
    except ValueError:
        raise SchemaError("$.variant", f"unknown variant {document.get('variant')!r}") from None
    try:
        mark = MarkPolicy(document.get("mark", "neg"))
    except ValueError:
        raise SchemaError("$.mark", f"expected 'neg' or 's', got {document.get('mark')!r}") from None

    bindings = {}
    weights = document.get("weights", {})
    if not isinstance(weights, dict):
        raise SchemaError("$.weights", "expected an object")
    for key, value in weights.items():
        path = f"$.weights.{key}"
        if key in _GROUPS:
            role, arity = _GROUPS[key]
            if not isinstance(value, dict):
                raise SchemaError(path, "expected an object of letter keys")
            for letters, q in value.items():
                parts = [p.strip() for p in letters.split(",")]
                if len(parts) != arity or any(p not in alphabet.symbols for p in parts):
                    raise SchemaError(f"{path}.{letters}", f"expected {arity} alphabet letter(s)")
                bindings[VariableName(role, tuple(alphabet.index(p) for p in parts))] = _rational(q, f"{path}.{letters}")
        else:
            try:
                v = parse_variable(key, alphabet.symbols)
            except ValueError as exc:
                raise SchemaError(path, str(exc)) from None
            bindings[v] = _rational(value, path)
    return Problem(alphabet, forbidden, variant, mark, bindings)


def render_problem(problem: Problem) -> dict:
    """Inverse of :func:`parse_problem`."""
    sym = problem.alphabet.symbols
    doc = {
        "alphabet": list(sym),
        "forbidden": [problem.alphabet.spell(w) for w in problem.forbidden.words],
        "variant": problem.variant.value,
        "mark": problem.mark.value,
    }
    if problem.bindings:
        groups = {}
        names = {role: name for name, (role, _) in _GROUPS.items()}
        for v, q in sorted(problem.bindings.items()):
            text = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
            if v.role in names:
                groups.setdefault(names[v.role], {})[",".join(sym[i] for i in v.letters)] = text
            else:
                groups[v.render(sym)] = text
        doc["weights"] = groups
    return doc


def _decimal(q: Fraction, digits: int) -> str:
    return format_probability(q, digits) if q >= 0 else "-" + format_probability(-q, digits)


def format_output(f: RationalFunction, series: SeriesPrefix | None = None, symbols=None,
                  extra: dict | None = None, decimal_digits: int | None = None) -> str:
    out = {"numerator": f.num.render(symbols), "denominator": f.den.render(symbols)}
    if series is not None:
        out["series"] = series.render(symbols)
        if decimal_digits:
            out["series_decimal"] = [
                _decimal(c.constant_value(), decimal_digits) if c.is_constant() else None
                for c in series
            ]
    if extra:
        out.update(extra)
    return json.dumps(out, indent=2)


def _load_json(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        text = path.read_text(encoding="utf-8") if path.exists() else source
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None


def _emit(text: str, out: str | None):
    if out and out != "-":
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _solve(problem: Problem, method: str) -> tuple[RationalFunction, RecursiveEngine | None]:
    if method == "recursive":
        engine = RecursiveEngine(problem)
        return engine.generating_function(), engine
    return generating_function(problem), None


def _oracle_check(problem, f, n) -> tuple[dict, bool]:
    expected = brute_force_series(OracleRequest(problem, n))
    got = series_in_t(f, n)
    k = first_mismatch(expected, got)
    sym = problem.alphabet.symbols
    if k is None:
        return {"oracle": {"max_length": n, "ok": True}}, True
    report = {"max_length": n, "ok": False, "first_mismatch": k,
              "expected": expected[k].render(sym), "got": got[k].render(sym)}
    return {"oracle": report}, False


def cmd_gf(args) -> int:
    problem = parse_problem(_load_json(args.input))
    f, engine = _solve(problem, args.method)
    sym = problem.alphabet.symbols
    if args.dump_states:
        if engine is None:
            engine = RecursiveEngine(problem)
        Path(args.dump_states).write_text(json.dumps(engine.graph.to_json(), indent=2) + "\n", encoding="utf-8")
    series = series_in_t(f, args.series) if args.series is not None else None
    extra, ok = {}, True
    if args.check_oracle is not None:
        extra, ok = _oracle_check(problem, f, args.check_oracle)
    _emit(format_output(f, series, sym, extra, args.decimal), args.output)
    if not ok:
        print(f"oracle mismatch at t^{extra['oracle']['first_mismatch']}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_ingest(args) -> int:
    alphabet = read_alphabet(args.alphabet)
    words, skipped = read_corpus(args.corpus, alphabet, args.skip_invalid)
    model = ingest_word_list(words, alphabet)
    model.save(args.out)
    print(f"ingested {model.word_count} words ({skipped} invalid lines skipped) -> {args.out}", file=sys.stderr)
    if args.show:
        for a in model.alphabet.symbols:
            row = model.row(a)
            if row:
                cells = "  ".join(f"pr({a},{b})={format_probability(p, args.digits)}" for b, p in row.items())
                print(cells)
    return EXIT_OK


def _forbidden_strings(data) -> list:
    if not isinstance(data, list):
        raise SchemaError("$", "forbidden strings must be a JSON list")
    out = []
    for i, w in enumerate(data):
        if isinstance(w, str):
            out.append(list(w))
        else:
            out.append(_string_list(w, f"$[{i}]"))
    return out


def cmd_avoid(args) -> int:
    model = CharModel.load(args.model)
    problem = model_to_problem(model, _forbidden_strings(_load_json(args.forbidden)))
    f = generating_function(problem)
    series = series_in_t(f, args.series) if args.series is not None else None
    extra, ok = {}, True
    if args.check_oracle is not None:
        extra, ok = _oracle_check(problem, f, args.check_oracle)
    _emit(format_output(f, series, problem.alphabet.symbols, extra, args.decimal), args.output)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordgf", description="Generating functions for words avoiding forbidden factors.")
    sub = parser.add_subparsers(dest="command", required=True)

    gf = sub.add_parser("gf", help="generating function of a problem document")
    gf.add_argument("--input", required=True, help="problem JSON file, or - for stdin")
    gf.add_argument("--method", choices=("cluster", "recursive"), default="cluster")
    gf.add_argument("--series", type=int, metavar="N", help="also print coefficients of t^0..t^N")
    gf.add_argument("--check-oracle", type=int, metavar="N", help="compare with brute force up to length N")
    gf.add_argument("--dump-states", metavar="FILE", help="write the recursive state graph as JSON")
    gf.add_argument("--decimal", type=int, metavar="DIGITS", help="add decimal renderings of constant coefficients")
    gf.add_argument("--output", metavar="FILE")
    gf.set_defaults(func=cmd_gf)

    ing = sub.add_parser("ingest", help="build a character model from a word list")
    ing.add_argument("--corpus", required=True)
    ing.add_argument("--alphabet", required=True)
    ing.add_argument("--skip-invalid", action="store_true")
    ing.add_argument("--out", required=True)
    ing.add_argument("--show", action="store_true", help="print the transition rows in decimal")
    ing.add_argument("--digits", type=int, default=5)
    ing.set_defaults(func=cmd_ingest)

    av = sub.add_parser("avoid", help="avoidance probabilities under a character model")
    av.add_argument("--model", required=True)
    av.add_argument("--forbidden", required=True, help="JSON file or literal list of strings")
    av.add_argument("--series", type=int, metavar="N")
    av.add_argument("--check-oracle", type=int, metavar="N")
    av.add_argument("--decimal", type=int, metavar="DIGITS")
    av.add_argument("--output", metavar="FILE")
    av.set_defaults(func=cmd_avoid)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
