"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--enumerate N]

Each kernel is timed on identical inputs with both backends; the
enumeration benchmark runs the full isomorphism-class search in a fresh
interpreter per backend so dispatch happens at import, as in real use.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from srlci import _pykernels
from srlci.complex import maximal_masks

try:
    from srlci import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat=3):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_facets(rng, n, k):
    return maximal_masks([1 << v for v in range(n)] + [rng.randrange(1, 1 << n) for _ in range(k)])


def kernel_cases(rng):
    cf = [(n, random_facets(rng, n, 6)) for n in (5, 6, 7) for _ in range(300)]
    mats = [([[rng.randint(-3, 3) for _ in range(40)] for _ in range(40)], 40) for _ in range(30)]
    faces = list(range(1 << 12))
    wits = [[rng.randrange(1, 1 << 12) for _ in range(20)] for _ in range(40)]
    return {
        "canonical_form (900 complexes, n<=7)": lambda k: [k.canonical_form(n, f) for n, f in cf],
        "rank_mod_p (30 x 40x40, p=3)": lambda k: [k.rank_mod_p(r, c, 3) for r, c in mats],
        "filter_faces (40 x 4096 faces)": lambda k: [k.filter_faces(faces, 1, w) for w in wits],
    }


def enumeration_time(n, pure):
    env = dict(os.environ)
    if pure:
        env["SRLCI_PURE_PYTHON"] = "1"
    code = (
        "import time; from srlci.enumeration import complexes_up_to_iso as e\n"
        f"t=time.perf_counter(); c=sum(1 for _ in e({n})); print(c, time.perf_counter()-t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    count, secs = out.stdout.split()
    return int(count), float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--enumerate", type=int, default=5, help="vertex count for the enumeration run")
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation` first")

    rng = random.Random(0)
    print(f"{'kernel':<40}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, fn in kernel_cases(rng).items():
        tp = best_of(lambda: fn(_pykernels))
        tc = best_of(lambda: fn(_ckernels))
        print(f"{name:<40}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")

    cp, tp = enumeration_time(args.enumerate, pure=True)
    cc, tc = enumeration_time(args.enumerate, pure=False)
    assert cp == cc
    label = f"enumerate complexes n={args.enumerate} ({cc})"
    print(f"{label:<40}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
