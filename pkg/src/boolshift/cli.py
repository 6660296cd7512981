"""Command-line interface.

Subcommands: analyze, pgm, shifts, support, dtree, randstat, bounds,
selftest.  Output is a single JSON object with a schema version field
(floats carry 17 significant digits, exact rationals appear as "p/q"
strings, bit strings as hex); CSV emission is available behind --csv.
Identical argv and seed produce byte-identical output.  The environment
variable BOOLSHIFT_SEED supplies the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import (
    boolfn,
    bounds as bounds_mod,
    dtree as dtree_mod,
    fourier,
    pgm as pgm_mod,
    randstat,
    shifts as shifts_mod,
    spectral,
)

SCHEMA = 1


# ---------------------------------------------------------------------------
# JSON rendering with explicit float formatting.
# ---------------------------------------------------------------------------


def render_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [
            f'{pad}  {json.dumps(str(k))}: {render_json(v, indent + 1)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{pad}  {render_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, Fraction):
        return json.dumps(f"{obj.numerator}/{obj.denominator}")
    if isinstance(obj, float):
        return format(obj, ".17g")
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot render {type(obj)!r}")


def emit(obj) -> None:
    sys.stdout.write(render_json(obj) + "\n")


def _hex(value: int) -> str:
    return format(value, "#x")


def _default_seed(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("BOOLSHIFT_SEED")
    return int(env) if env else 0


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------


def _shift_structure_json(f):
    struct = shifts_mod.find_b_shifts(f)
    witness = shifts_mod.exact_one_query_feasible(f)
    return {
        "n": f.n,
        "undetectable_basis": [_hex(b) for b in struct.undetectable_basis],
        "anti_shift": _hex(struct.anti_shift) if struct.anti_shift is not None else None,
        "bent": shifts_mod.is_bent(f),
        "exact_one_query": {
            "feasible": witness.feasible,
            "p_empty": witness.p_empty,
            "k": witness.k,
        },
    }


def cmd_shifts(args) -> int:
    f = boolfn.parse_function_spec(args.function)
    out = {"schema": SCHEMA}
    out.update(_shift_structure_json(f))
    emit(out)
    return 0


def _spectrum_csv(spec: fourier.Spectrum) -> str:
    lines = ["w,value"]
    if spec.is_exact:
        rendered = spec.rational_strings()
    else:
        rendered = [format(v, ".17g") for v in spec.values]
    for w, text in enumerate(rendered):
        lines.append(f"{_hex(w)},{text}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    f = boolfn.parse_function_spec(args.function)
    if args.csv:
        if args.spectrum == "signed":
            spec = fourier.wht(f)
        elif args.spectrum == "autocorrelation":
            spec = fourier.autocorrelation(f)
        else:
            spec = fourier.tfold_spectrum(f, args.t)
        sys.stdout.write(_spectrum_csv(spec))
        return 0
    weight = boolfn.hamming_weight(f)
    size = 1 << f.n
    u = fourier.signed_numerators(f)
    nonzero = int((u != 0).sum())
    p_success = {str(t): pgm_mod.success_probability(f, t) for t in range(1, 5)}
    qrs = {}
    for t in range(1, 5):
        params = spectral.qrs_params(f, t)
        qrs[str(t)] = {"p_min": params.p_min, "p_max": params.p_max}
    effective = min(weight, size - weight)
    if effective >= 1:
        upper, note = bounds_mod.grover_upper_bound(f.n, effective)
        bound_obj = {
            "weight_used": effective,
            "upper_leading": upper,
            "upper_note": note,
            "lower_leading": bounds_mod.search_lower_bound(f.n, effective),
        }
    else:
        bound_obj = None
    out = {
        "schema": SCHEMA,
        "function": args.function,
        "n": f.n,
        "weight": weight,
        "spectrum": {"nonzero_coefficients": nonzero, "zero_coefficients": size - nonzero},
        "bent": shifts_mod.is_bent(f),
        "shift_structure": _shift_structure_json(f),
        "p_success": p_success,
        "qrs": qrs,
        "minimal_full_support_t": spectral.minimal_full_support_t(f),
        "bounds": bound_obj,
    }
    emit(out)
    return 0


def cmd_pgm(args) -> int:
    f = boolfn.parse_function_spec(args.function)
    dist = pgm_mod.outcome_distribution(f, args.t, args.shift)
    out = {
        "schema": SCHEMA,
        "n": f.n,
        "t": args.t,
        "shift": _hex(args.shift),
        "p_success": float(dist.probs[args.shift]),
        "p_inconclusive": dist.p_inconclusive,
    }
    if args.shots:
        seed = _default_seed(args.seed)
        hist = pgm_mod.sample_measurement(f, args.t, args.shift, args.shots, seed)
        rendered = {}
        for key in sorted(k for k in hist if k != pgm_mod.INCONCLUSIVE):
            rendered[_hex(key)] = hist[key]
        if pgm_mod.INCONCLUSIVE in hist:
            rendered["*"] = hist[pgm_mod.INCONCLUSIVE]
        out["seed"] = seed
        out["shots"] = args.shots
        out["histogram"] = rendered
    emit(out)
    return 0


def cmd_support(args) -> int:
    f = boolfn.parse_function_spec(args.function)
    size = 1 << f.n
    t_max = min(f.n, args.t_max)
    rows = []
    for t in range(1, t_max + 1):
        sup = spectral.support(f, t)
        rows.append((t, sup.size, sup.size / size))
    minimal = spectral.minimal_full_support_t(f)
    if args.csv:
        lines = ["t,support_size,fraction"]
        for t, count, frac in rows:
            lines.append(f"{t},{count},{format(frac, '.17g')}")
        lines.append(f"minimal_full_support_t,{minimal if minimal is not None else ''},")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    out = {
        "schema": SCHEMA,
        "n": f.n,
        "fractions": {str(t): frac for t, _, frac in rows},
        "support_sizes": {str(t): count for t, count, _ in rows},
        "minimal_full_support_t": minimal,
    }
    emit(out)
    return 0


def cmd_dtree(args) -> int:
    tree = dtree_mod.read_tree_file(args.file)
    f = dtree_mod.tree_to_function(tree)
    height = dtree_mod.tree_height(tree)
    size = 1 << tree.n
    u = fourier.signed_numerators(f)
    zeros = int((u == 0).sum())
    lemma_ok = all(
        int(u[w]) == 0
        for w in range(size)
        if int(w).bit_count() > height
    )
    fractions = []
    for t in range(1, 5):
        fractions.append(spectral.support(f, t).size / size)
    exact, entropy = dtree_mod.sparsity_bound(tree.n, height)
    struct = shifts_mod.find_b_shifts(f)
    degenerate = bool(struct.undetectable_basis) or struct.anti_shift is not None
    out = {
        "schema": SCHEMA,
        "file": args.file,
        "n": tree.n,
        "height": height,
        "weight": boolfn.hamming_weight(f),
        "zero_coefficients": zeros,
        "support_fraction": fractions,
        "tree_lemma_ok": lemma_ok,
        "degenerate": degenerate,
        "sparsity": {"exact_fraction": exact, "entropy_bound": entropy},
        "minimal_full_support_t": spectral.minimal_full_support_t(f),
    }
    emit(out)
    return 0


def cmd_randstat(args) -> int:
    seed = _default_seed(args.seed)
    estimate, stderr = randstat.expected_success_mc(args.n, args.t, args.samples, seed)
    try:
        bound1 = randstat.random1_bound(args.n)
    except ValueError:
        bound1 = None
    moments = None
    if args.n <= 3 or (args.n == 4 and args.slow):
        report = randstat.brute_force_moments(args.n, args.t, slow=args.slow)
        moments = {
            "mean": report.mean,
            "variance": report.variance,
            "closed_form_variance": report.closed_form_variance,
        }
    out = {
        "schema": SCHEMA,
        "n": args.n,
        "t": args.t,
        "samples": args.samples,
        "seed": seed,
        "estimate": estimate,
        "stderr": stderr,
        "bound_random1": bound1,
        "bound_random2": randstat.random2_bound(args.n),
        "moments": moments,
    }
    emit(out)
    return 0


def cmd_bounds(args) -> int:
    upper, note = bounds_mod.grover_upper_bound(args.n, args.weight)
    out = {
        "schema": SCHEMA,
        "n": args.n,
        "weight": args.weight,
        "upper_leading": upper,
        "upper_note": note,
        "lower_leading": bounds_mod.search_lower_bound(args.n, args.weight),
    }
    emit(out)
    return 0


# ---------------------------------------------------------------------------
# Self test: golden values recomputed from scratch.
# ---------------------------------------------------------------------------


def _selftest_checks():
    import itertools

    from fractions import Fraction as Fr

    def f10_golden():
        tree = dtree_mod.example_tree()
        f = dtree_mod.tree_to_function(tree)
        assert dtree_mod.tree_height(tree) == 5
        u = fourier.signed_numerators(f)
        assert int((u == 0).sum()) == 928
        fracs = [round(spectral.support(f, t).size / 1024, 2) for t in range(1, 5)]
        assert fracs == [0.09, 0.61, 0.94, 1.0], fracs
        assert spectral.minimal_full_support_t(f) == 4

    def bent_families():
        for n in (2, 4):
            ip = boolfn.make_inner_product(n)
            assert shifts_mod.is_bent(ip)
            assert abs(pgm_mod.success_probability(ip, 1) - 1.0) < 1e-12
            witness = shifts_mod.exact_one_query_feasible(ip)
            assert witness.feasible and witness.k == 0
        assert not shifts_mod.is_bent(boolfn.make_delta(3, 0))
        assert not shifts_mod.is_bent(boolfn.random_function(3, 7))
        assert not shifts_mod.is_bent(boolfn.random_function(5, 7))

    def delta_forms():
        for n in range(2, 6):
            for x0 in (0, (1 << n) - 1):
                f = boolfn.make_delta(n, x0)
                for t in range(1, 9):
                    got = pgm_mod.success_probability(f, t)
                    want = pgm_mod.delta_closed_form(n, t)
                    assert abs(got - want) < 1e-10, (n, t, got, want)

    def one_query_n1():
        f = boolfn.make_function(1, "01")
        witness = shifts_mod.exact_one_query_feasible(f)
        assert witness.feasible and witness.k == 2
        assert witness.p_empty == Fr(1, 2)

    def n2_sweep():
        bent_count = 0
        for mask in range(16):
            f = boolfn.make_function(2, [(mask >> i) & 1 for i in range(4)])
            bent = shifts_mod.is_bent(f)
            bent_count += bent
            feasible = shifts_mod.exact_one_query_feasible(f).feasible
            u = fourier.signed_numerators(f)
            exact_one = int(np.abs(u).sum()) ** 2 == 4**3
            assert bent == feasible == exact_one
        assert bent_count == 8

    def moments_n2():
        for t in (1, 2, 3):
            report = randstat.brute_force_moments(2, t)
            assert report.mean == Fr(1, 4)
        report = randstat.brute_force_moments(2, 2)
        assert report.variance == report.closed_form_variance == Fr(3, 32)

    def walks():
        assert randstat.walk_expectation(2) == 1
        assert randstat.walk_expectation(4) == Fr(3, 2)
        for steps in range(2, 13, 2):
            vals = np.arange(1 << steps)
            dist = np.abs(steps - 2 * np.bitwise_count(vals).astype(np.int64))
            assert Fr(int(dist.sum()), 1 << steps) == randstat.walk_expectation(steps)
        for m in range(1, 65):
            val = randstat.walk_expectation(2 * m)
            assert val * val >= m
        assert randstat.random1_bound(1) == 0.5

    def pairings():
        assert randstat.pairing_indicator(["a", "a", "b", "b"]) == 1
        assert randstat.pairing_indicator(["a", "b", "c", "d"]) == 0
        total = sum(
            randstat.pairing_indicator(t) for t in itertools.product("ab", repeat=4)
        )
        assert total == 8

    def distinguishing():
        result = bounds_mod.distinguishing_sweep(4, 4)
        assert result.ok, result
        rng = boolfn.substream(11, 0)
        strings = set()
        while len(strings) < 50:
            strings.add("".join(str(b) for b in rng.integers(0, 2, 64)))
        strings = sorted(strings)
        idx = bounds_mod.distinguishing_index_set(strings)
        assert len(idx) <= 49
        projected = {"".join(s[i] for i in idx) for s in strings}
        assert len(projected) == 50

    def pgm_consistency():
        for trial in range(3):
            f = boolfn.random_function(3, 100 + trial)
            s = trial % 8
            a = pgm_mod.outcome_distribution(f, 2, s)
            b = pgm_mod.outcome_distribution_statevector(f, 2, s)
            assert np.abs(a.probs - b.probs).max() < 1e-9
        h1 = pgm_mod.sample_measurement(boolfn.make_delta(3, 0), 1, 5, 1000, 42)
        h2 = pgm_mod.sample_measurement(boolfn.make_delta(3, 0), 1, 5, 1000, 42)
        assert h1 == h2

    def parity_structure():
        f = boolfn.make_function(2, "0110")
        struct = shifts_mod.find_b_shifts(f)
        assert struct.undetectable_basis == (3,)
        assert struct.anti_shift == 1

    def exact_identities():
        for trial in range(50):
            f = boolfn.random_function(6, 900 + trial)
            u = fourier.signed_numerators(f)
            assert int((u.astype(np.int64) ** 2).sum()) == 4**6
            assert fourier.inverse_wht(fourier.wht(f)) == f

    return [
        ("f10 golden values", f10_golden),
        ("bent families", bent_families),
        ("delta closed form", delta_forms),
        ("one-query n=1 witness", one_query_n1),
        ("n=2 exhaustive equivalence", n2_sweep),
        ("moments at n=2", moments_n2),
        ("random-walk expectations", walks),
        ("pairing combinatorics", pairings),
        ("distinguishing index sets", distinguishing),
        ("measurement consistency", pgm_consistency),
        ("parity shift structure", parity_structure),
        ("exact transform identities", exact_identities),
    ]


def cmd_selftest(args) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            check()
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    if failures:
        print(f"{failures} check(s) failed")
        return 1
    print("all checks passed")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolshift",
        description="Spectral analysis of Boolean functions and hidden-shift "
        "measurement simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full spectral/shift report for a function")
    p.add_argument("function", help="@file.tt | delta:<n>:<x0> | ip:<n> | random:<n>:<seed> | tree:<file>")
    p.add_argument("--csv", action="store_true", help="dump a spectrum as CSV instead")
    p.add_argument(
        "--spectrum",
        choices=("signed", "autocorrelation", "tfold"),
        default="signed",
        help="which spectrum to dump with --csv",
    )
    p.add_argument("--t", type=int, default=2, help="fold count for --spectrum tfold")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("pgm", help="measurement statistics and sampling")
    p.add_argument("--function", required=True)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--shots", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_pgm)

    p = sub.add_parser("shifts", help="b-shift structure and one-query feasibility")
    p.add_argument("function")
    p.set_defaults(func=cmd_shifts)

    p = sub.add_parser("support", help="t-fold support fractions")
    p.add_argument("function")
    p.add_argument("--t-max", type=int, default=4)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("dtree", help="decision-tree report")
    p.add_argument("file")
    p.set_defaults(func=cmd_dtree)

    p = sub.add_parser("randstat", help="random-function statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--slow", action="store_true", help="allow n=4 brute-force moments")
    p.set_defaults(func=cmd_randstat)

    p = sub.add_parser("bounds", help="query-count calculators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("selftest", help="run the built-in golden checks")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        emit({"schema": SCHEMA, "error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
