"""Command-line entry point: run one benchmark sweep and write CSV/JSON.

Exit codes: 0 on success, 2 for configuration or argument problems
(argparse uses the same code), 3 when a numerical routine fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import ConfigError, NumericalError, SpinQrcError
from .config import PRESET_NAMES, TASKS, build_config
from .io import write_csv, write_json_sidecar
from .sweeps import run_sweep

_FLOAT_LIST_FLAGS = {"disorder_grid", "tau_grid", "alpha_grid"}
_INT_LIST_FLAGS = {"horizons"}


def _parse_list(text: str, cast):
    try:
        return tuple(cast(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad list {text!r}: {exc}") from None


def _float_list(text: str):
    return _parse_list(text, float)


def _int_list(text: str):
    return _parse_list(text, int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinqrc",
        description=(
            "Spin-reservoir benchmarks: memory/parity/forecasting capacity and "
            "operator-spreading curves over a disorder grid."
        ),
    )
    subparsers = parser.add_subparsers(dest="task", required=True, metavar="task")
    descriptions = {
        "stm": "short-term memory capacity (recall the input k_delta steps back)",
        "pc": "parity-check capacity (parity of the last k_delta+1 inputs)",
        "mg": "closed-loop forecasting of the chaotic benchmark sequence",
        "otoc": "operator-spreading curves and threshold times",
    }
    for task in TASKS:
        sub = subparsers.add_parser(task, help=descriptions[task])
        _add_common_flags(sub)
    return parser


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--preset", choices=PRESET_NAMES, default="desk",
                     help="parameter preset to start from (default: desk)")
    sub.add_argument("--config", type=Path, default=None, metavar="FILE",
                     help="key=value file overriding the preset")
    sub.add_argument("--out", type=Path, default=None, metavar="FILE",
                     help="output CSV path (default: <task>.csv)")
    sub.add_argument("--n-qubits", type=int, dest="n_qubits")
    sub.add_argument("--alpha", type=float)
    sub.add_argument("--tau", type=float)
    sub.add_argument("--subintervals", type=int)
    sub.add_argument("--k-delta", type=int, dest="k_delta")
    sub.add_argument("--disorder", type=_float_list, dest="disorder_grid",
                     metavar="W1,W2,...", help="disorder strengths to sweep")
    sub.add_argument("--tau-grid", type=_float_list, dest="tau_grid",
                     metavar="T1,T2,...")
    sub.add_argument("--alpha-grid", type=_float_list, dest="alpha_grid",
                     metavar="A1,A2,...")
    sub.add_argument("--horizons", type=_int_list, metavar="L1,L2,...")
    sub.add_argument("--threshold", type=float)
    sub.add_argument("--washout", type=int, dest="n_washout")
    sub.add_argument("--train", type=int, dest="n_train")
    sub.add_argument("--test", type=int, dest="n_test")
    sub.add_argument("--samples", type=int, dest="n_samples")
    sub.add_argument("--seed", type=int, dest="master_seed")
    sub.add_argument("--noise-sigma", type=float, dest="noise_sigma")
    sub.add_argument("--ridge", type=float)
    sub.add_argument("--w-c", type=float, dest="w_c",
                     help="reference disorder for the W/W_c column in the JSON sidecar")
    sub.add_argument("--workers", type=int)
    sub.add_argument("--timing", action="store_true", default=None,
                     help="fill the wall_ms column (off by default so reruns are byte-identical)")


_NON_CONFIG_ARGS = {"task", "preset", "config", "out"}


def _overrides_from(args: argparse.Namespace) -> dict:
    return {
        key: value
        for key, value in vars(args).items()
        if key not in _NON_CONFIG_ARGS and value is not None
    }


def _print_summary(result, out_path: Path) -> None:
    print(f"wrote {out_path} ({len(result.records)} records)")
    if result.task == "otoc":
        for agg in result.aggregates:
            mean = agg["tau_th_mean"]
            shown = "censored" if mean is None else f"{mean:.4f}"
            print(
                f"  alpha={agg['alpha']:g} W={agg['W']:g}: "
                f"tau_th mean={shown} (censored {agg['n_censored']})"
            )
    elif result.task == "mg":
        for agg in result.aggregates:
            l_c = agg["l_c"]
            shown = "undefined" if l_c is None else f"{l_c:.2f}"
            flag = " (censored)" if agg["censored"] else ""
            print(f"  W={agg['W']:g}: l_c={shown}{flag}")
    else:
        for agg in result.aggregates:
            if agg["mean"] is None:
                print(f"  W={agg['W']:g}: all samples degenerate")
            else:
                print(
                    f"  W={agg['W']:g}: C mean={agg['mean']:.4f} "
                    f"stderr={agg['stderr']:.4f} (n={agg['n']})"
                )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_config(
            args.task,
            preset=args.preset,
            config_path=args.config,
            **_overrides_from(args),
        )
        result = run_sweep(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except SpinQrcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out_path = args.out if args.out is not None else Path(f"{args.task}.csv")
    write_csv(out_path, result.columns, result.records)
    write_json_sidecar(out_path, result.json_payload(config))
    if result.summary_records:
        summary_path = out_path.with_name(out_path.stem + "_tau_th.csv")
        write_csv(summary_path, result.summary_columns, result.summary_records)
        print(f"wrote {summary_path}")
    _print_summary(result, out_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
