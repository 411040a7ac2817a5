"""Time each kernel under every available backend.

Run after an editable install::

    python3 benchmarks/bench_kernels.py --repeat 5
"""
import argparse
import sys
import timeit
from itertools import combinations

from mfbounds import kernels
from mfbounds.constructions import construct_S
from mfbounds.homology import boundary_matrix


def _workloads(scale):
    s = construct_S(1, 6 + scale)
    facets = [sum(1 << (v - 1) for v in f) for f in s.facets]
    # dense Bareiss on large random matrices overflows int64, so use a boundary matrix
    matrix = boundary_matrix(construct_S(2, 3 + scale), 2).to_dense()
    n = 6
    tops = len(list(combinations(range(n), 2)))
    masks = list(range(1, 1 << tops, 3))
    return {
        "all_faces": lambda m: m.all_faces(facets),
        "face_counts": lambda m: m.face_counts(facets),
        "bareiss_rank": lambda m: m.bareiss_rank(matrix),
        "scan_complexes": lambda m: m.scan_complexes(n, 1, 1, 0, 1 << tops),
        "scan_face_numbers": lambda m: m.scan_face_numbers(n, 1, masks),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats; best is reported")
    parser.add_argument("--scale", type=int, default=1, choices=(1, 2), help="workload size")
    args = parser.parse_args(argv)

    impls = kernels.implementations()
    if "cython" not in impls:
        print("compiled extension not built; timing the Python backend only", file=sys.stderr)
    work = _workloads(args.scale)
    names = sorted(impls)
    print(f"{'kernel':<20}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for kernel, fn in work.items():
        results = {n: fn(impls[n]) for n in names}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"{kernel}: backends disagree")
        best = {n: min(timeit.repeat(lambda: fn(impls[n]), number=1, repeat=args.repeat)) for n in names}
        row = f"{kernel:<20}" + "".join(f"{best[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{best['python'] / best['cython']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
