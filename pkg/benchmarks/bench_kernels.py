"""Compare the compiled kernels against the pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import itertools
import timeit

from qcatalan.kernels import backends
from qcatalan.lattice import gen_paths, path_to_word


def workloads(k):
    perms9 = [list(p) for p in itertools.permutations(range(1, 10))][:60000]
    perms8 = [list(p) for p in itertools.permutations(range(1, 9))]
    paths = [g.steps for g in gen_paths(10, 10)]
    words = [list(path_to_word(g).bits) for g in gen_paths(10, 10)]
    return {
        "312-filter, 60000 perms of 9": lambda: sum(not k.contains_pattern(p, (3, 1, 2))
                                                    for p in perms9),
        "ends-with 231, 40320 perms of 8": lambda: sum(k.ends_with_pattern(p, (2, 3, 1))
                                                       for p in perms8),
        "inversions, 40320 perms of 8": lambda: sum(k.inversions(p) for p in perms8),
        "residue inversions mu=3, 40320 perms": lambda: [k.inversions_by_residue(p, 3)
                                                         for p in perms8],
        "area, 16796 paths of (10,10)": lambda: sum(k.path_area(s) for s in paths),
        "word inversions, 16796 words": lambda: sum(k.word_inversions(w) for w in words),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    mods = backends()
    if "cython" not in mods:
        print("compiled backend not built; only the Python timings are shown")
    table = {name: workloads(mod) for name, mod in mods.items()}
    names = list(table["python"])
    print(f"{'workload':40s} " + " ".join(f"{b:>10s}" for b in mods) + "   speedup")
    for w in names:
        times = {b: min(timeit.repeat(table[b][w], number=1, repeat=args.repeat)) for b in mods}
        row = " ".join(f"{times[b] * 1000:8.1f}ms" for b in mods)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
        print(f"{w:40s} {row} {speed}")


if __name__ == "__main__":
    main()
