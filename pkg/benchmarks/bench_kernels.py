"""Compare the pure-Python and compiled kernel backends.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--corpus N]

Micro-benchmarks call each backend's functions directly; the end-to-end rows
rebind the names exported by ``pkaequiv.kernels`` so the whole library runs on
one backend at a time.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from pkaequiv import _purekernels as pure, kernels
from pkaequiv.decide import DecideConfig, decide
from pkaequiv.groebner import buchberger

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
import corpus  # noqa: E402
import laws  # noqa: E402

EXPORTED = ("mono_mul", "mono_divides", "mono_quo", "mono_lcm", "mono_coprime", "mono_degree",
            "mono_cmp", "sort_monomials", "leading", "poly_add", "poly_mul", "axpy_inplace",
            "normal_form")


@contextmanager
def backend(mod):
    saved = {name: getattr(kernels, name) for name in EXPORTED}
    for name in EXPORTED:
        setattr(kernels, name, getattr(mod, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def rand_terms(rng, n, nvars=4, maxexp=3):
    out = {}
    for _ in range(n):
        vs = sorted(rng.sample(range(nvars), rng.randint(1, nvars)))
        out[tuple((v, rng.randint(1, maxexp)) for v in vs)] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    return out


def micro(mod, repeat):
    rng = random.Random(0)
    p, q = rand_terms(rng, 30), rand_terms(rng, 30)
    order = mod.GREVLEX
    basis = []
    for _ in range(4):
        g = rand_terms(rng, 3, maxexp=2)
        lm = mod.leading(g, order)
        basis.append((lm, g[lm], g))
    big = mod.poly_mul(p, q)
    monos = list(big)
    return {
        "poly_mul 30x30": timeit.timeit(lambda: mod.poly_mul(p, q), number=repeat),
        "sort_monomials": timeit.timeit(lambda: mod.sort_monomials(monos, order), number=repeat),
        # ~900-term dividend; far slower per call than the others
        f"normal_form (x{max(1, repeat // 20)})": timeit.timeit(
            lambda: mod.normal_form(big, basis, order), number=max(1, repeat // 20)),
    }


def end_to_end(n_cases):
    rng = random.Random(1)
    ideals = [laws.rand_ideal(rng, 3) for _ in range(200)]
    cases = corpus.corpus(n_cases, seed=7)
    cfg = DecideConfig(find_witness=False)

    def groebner():
        for F in ideals:
            buchberger(F)

    def deciding():
        for c in cases:
            decide(c.aut, c.left - c.right, cfg)

    return {
        "buchberger x200": timeit.timeit(groebner, number=1),
        f"decide corpus x{n_cases}": timeit.timeit(deciding, number=1),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--corpus", type=int, default=120)
    args = ap.parse_args(argv)

    if kernels.compiled is None:
        print("compiled extension not built; only the pure backend is available")
    backends = [("pure", pure)] + ([("compiled", kernels.compiled)] if kernels.compiled else [])

    results = {}
    for name, mod in backends:
        row = micro(mod, args.repeat)
        with backend(mod):
            row.update(end_to_end(args.corpus))
        results[name] = row

    width = max(len(k) for k in results["pure"])
    header = f"{'workload':<{width}}  " + "  ".join(f"{n:>10}" for n, _ in backends)
    if len(backends) == 2:
        header += "  speedup"
    print(header)
    for key in results["pure"]:
        cells = "  ".join(f"{results[n][key]:>9.3f}s" for n, _ in backends)
        line = f"{key:<{width}}  {cells}"
        if len(backends) == 2:
            line += f"  {results['pure'][key] / results['compiled'][key]:>6.2f}x"
        print(line)


if __name__ == "__main__":
    main()
