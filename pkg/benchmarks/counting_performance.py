"""Performance benchmark for the p_{3,2} counting methods.

This script times each available method over ``n = 1..n_max`` and the
``d_{ell,3}`` table, and checks that all methods return the same column.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Tuple

# Repository root on the path so the ``app`` package resolves
repo_root = Path(__file__).parent.parent
sys.path.insert(0, str(repo_root))

try:
    from app.counting import methods  # type: ignore[import]
except ImportError as e:
    print(f"Error importing counting modules: {e}")
    sys.exit(1)


def benchmark_method(method: Callable[[int], List[int]], n_max: int, repeats: int) -> Tuple[Dict[str, float], List[int]]:
    """Best-of-``repeats`` wall time for one method."""
    method(min(n_max, 4))

    best = float("inf")
    values: List[int] = []
    for _ in range(repeats):
        start_time = time.perf_counter()
        values = method(n_max)
        best = min(best, time.perf_counter() - start_time)

    return {"time": best, "terms_per_second": n_max / best if best else float("inf")}, values


def print_results(results: List[Tuple[str, Dict[str, float]]], n_max: int, agree: bool):
    """Print benchmark results in a formatted table."""
    print("")
    print(f"Counting Performance Benchmark (n_max: {n_max})")
    print("=" * 60)
    print(f"{'Method':<15} {'Time (s)':<14} {'Terms/s':<14}")
    print("-" * 60)

    for name, result in results:
        print(f"{name:<15} {result['time']:<14.6f} {result['terms_per_second']:<14,.0f}")

    fastest = min(results, key=lambda x: x[1]["time"])
    slowest = max(results, key=lambda x: x[1]["time"])
    speedup = slowest[1]["time"] / fastest[1]["time"] if fastest[1]["time"] else float("inf")

    print("-" * 60)
    print(f"Fastest: {fastest[0]} ({speedup:.2f}x speedup over {slowest[0]})")
    print(f"Methods agree: {'yes' if agree else 'NO'}")


def main():
    """Run performance benchmarks."""
    parser = argparse.ArgumentParser(
        description="Benchmark p_{3,2} counting methods",
    )
    parser.add_argument(
        "--n-max",
        type=int,
        default=200,
        help="Largest n to count (default: 200)",
    )
    parser.add_argument(
        "--quick",
        action="store_true",
        help="Run quick benchmark with n_max=10 (oracle included)",
    )
    parser.add_argument(
        "--methods",
        nargs="+",
        choices=["rec", "sum", "dp", "oracle", "all"],
        default=["all"],
        help="Methods to benchmark (default: all available)",
    )
    parser.add_argument(
        "--repeats",
        type=int,
        default=3,
    )

    args = parser.parse_args()

    if args.quick:
        args.n_max = 10

    info = methods.get_method_info(args.n_max)
    print(f"Available methods: {', '.join(info['available_methods'])}")
    print(f"Current best: {info['best_method']}")

    if "all" in args.methods:
        to_test = info["available_methods"]
    else:
        to_test = [name for name in args.methods if name in info["available_methods"]]

    results = []
    columns = []
    for name in to_test:
        try:
            method = methods.get_method_by_name(name, args.n_max)
            result, values = benchmark_method(method, args.n_max, args.repeats)
            results.append((name, result))
            columns.append(values)
        except Exception as exc:  # pragma: no cover - diagnostic output only
            print(f"Error benchmarking {name}: {exc}")

    if results:
        print_results(results, args.n_max, all(c == columns[0] for c in columns))
    else:
        print("No benchmarks completed successfully")

    start_time = time.perf_counter()
    methods.d_table((1, 2, 3), 3, args.n_max)
    print(f"d table (ell=1..3, k=3): {time.perf_counter() - start_time:.6f} s")


if __name__ == '__main__':
    main()
