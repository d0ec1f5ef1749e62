"""Emit a small reproducible instance corpus into a directory.

Usage:
    python scripts/make_corpus.py [--out corpus] [--seed 0]

Writes one .rtvd file per (class, size) combination, plus two instances
obtained through the hardness constructions, all with provenance comment
headers.  Re-running with the same seed reproduces the files bit for bit.
"""

from __future__ import annotations

import argparse
import itertools
import pathlib

from rtvd.cli import emit_instance
from rtvd.generators import (
    gen_acyclic_local_tournament,
    gen_dag,
    gen_in_tournament,
    gen_out_tournament,
    gen_tournament,
    random_reach_function,
)
from rtvd.oracle import Instance
from rtvd.reductions import MulticutInstance, UndirectedGraph, multicut_to_tvd, vc_to_rtvd
from rtvd.digraph import Digraph


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="corpus")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    builders = {
        "tournament": lambda n, s: gen_tournament(n, s),
        "alt": lambda n, s: gen_acyclic_local_tournament(random_reach_function(n, s)),
        "in": lambda n, s: gen_in_tournament(n, s, structured=n > 9),
        "out": lambda n, s: gen_out_tournament(n, s, structured=n > 9),
        "dag": lambda n, s: gen_dag(n, 0.3, s),
    }
    for (cls, build), n in itertools.product(builders.items(), (6, 10)):
        D = build(n, args.seed)
        inst = Instance(digraph=D, k=min(2, D.n), ell=0)
        path = out / f"{cls}_n{n}.rtvd"
        path.write_text(
            emit_instance(inst, [f"generated class={cls} n={n} seed={args.seed}"])
        )
        print(f"wrote {path}")

    k4 = UndirectedGraph.build(4, list(itertools.combinations(range(4), 2)))
    inst = vc_to_rtvd(k4, 3, 1)
    (out / "vc_k4.rtvd").write_text(
        emit_instance(inst, ["reduction=vertex-cover source=K4 k=3 ell=1"])
    )
    print(f"wrote {out / 'vc_k4.rtvd'}")

    mc = MulticutInstance(
        dag=Digraph(5, [(0, 2), (2, 3), (3, 1), (2, 4), (4, 1)]),
        terminals=((0, 1),),
        k=1,
    )
    (out / "multicut_diamond.rtvd").write_text(
        emit_instance(multicut_to_tvd(mc), ["reduction=multicut diamond k=1"])
    )
    print(f"wrote {out / 'multicut_diamond.rtvd'}")


if __name__ == "__main__":
    main()
