"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Shapes follow a training batch of 100 MNIST images through the first stage
of the Simple trunk, plus the batch-all triplet reduction on 100 embeddings.
Prints one row per kernel and checks that both backends agree.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from siamssl._kernels import compiled, python


def cases(rng):
    x = rng.random((100, 34, 34, 1), dtype=np.float32)       # 28x28 padded for a 7x7 conv
    cols = python.im2col(x, 7, 7, 1)
    a = rng.random((100, 28, 28, 32), dtype=np.float32)
    pooled, arg = python.maxpool_forward(a, 2, 2, 0, 0, 0, 0)
    dout = rng.random(pooled.shape, dtype=np.float32)
    emb = rng.normal(size=(100, 16))
    dist = np.sqrt(((emb[:, None] - emb[None]) ** 2).sum(-1))
    labels = rng.integers(0, 10, 100).astype(np.int64)
    return {
        "im2col 7x7": lambda k: k.im2col(x, 7, 7, 1),
        "col2im 7x7": lambda k: k.col2im(cols, x.shape, 7, 7, 1),
        "maxpool fwd": lambda k: k.maxpool_forward(a, 2, 2, 0, 0, 0, 0),
        "maxpool bwd": lambda k: k.maxpool_backward(dout, arg, a.shape),
        "triplet B=100": lambda k: k.triplet_batch_all(dist, labels, 0.3),
    }


def _same(u, v):
    if isinstance(u, tuple):
        return all(_same(p, q) for p, q in zip(u, v))
    return np.allclose(np.asarray(u, dtype=np.float64), np.asarray(v, dtype=np.float64), rtol=1e-5, atol=1e-6)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if compiled is None:
        raise SystemExit("compiled kernels not built; run `python setup.py build_ext --inplace`")
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}  agree")
    for name, fn in cases(np.random.default_rng(0)).items():
        t_py = min(timeit.repeat(lambda: fn(python), number=1, repeat=args.repeat)) * 1e3
        t_c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<16}{t_py:>12.2f}{t_c:>12.2f}{t_py / t_c:>9.1f}x  {_same(fn(python), fn(compiled))}")


if __name__ == "__main__":
    main()
