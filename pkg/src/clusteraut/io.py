"""JSON reading and writing for seeds, matrices and quivers.

Matrix JSON: ``{"n": 3, "b": [[0,1,0],[-1,0,-1],[0,1,0]]}``.
Quiver JSON: ``{"n": 3, "arrows": [{"from": 1, "to": 2, "v": [1, 1]}, ...]}``
with 1-based vertices; ``v`` defaults to ``[1, 1]``.
Either may carry ``"cluster"`` (one term list per variable, as written by
:meth:`LabeledSeed.to_json`); otherwise the initial cluster ``x1..xn`` is used.
"""

from __future__ import annotations

import json
from pathlib import Path

from .builtin import builtin_quiver
from .laurent import LaurentPolynomial
from .matrices import Arrow, ExchangeMatrix, ValuedQuiver, quiver_to_matrix
from .seeds import LabeledSeed


def matrix_from_json(data: dict) -> ExchangeMatrix:
    if "b" in data:
        B = ExchangeMatrix(data["b"])
        if "n" in data and data["n"] != B.n:
            raise ValueError(f"declared n={data['n']} but the matrix has rank {B.n}")
        return B
    if "arrows" in data:
        return quiver_to_matrix(quiver_from_json(data))
    raise ValueError("seed JSON needs either 'b' or 'arrows'")


def quiver_from_json(data: dict) -> ValuedQuiver:
    if "arrows" not in data:
        return _matrix_quiver(matrix_from_json(data))
    arrows = []
    for a in data["arrows"]:
        v = a.get("v", [1, 1])
        arrows.append(Arrow(int(a["from"]) - 1, int(a["to"]) - 1, int(v[0]), int(v[1])))
    return ValuedQuiver(int(data["n"]), tuple(arrows))


def _matrix_quiver(B: ExchangeMatrix) -> ValuedQuiver:
    from .matrices import matrix_to_quiver

    return matrix_to_quiver(B)


def seed_from_json(data: dict) -> LabeledSeed:
    B = matrix_from_json(data)
    if "cluster" not in data:
        return LabeledSeed.initial(B)
    cluster = tuple(LaurentPolynomial.from_term_list(B.n, t) for t in data["cluster"])
    return LabeledSeed(cluster, B)


def load_seed(path: str | Path | None = None, builtin: str | None = None) -> LabeledSeed:
    if builtin is not None:
        return LabeledSeed.initial(builtin_quiver(builtin))
    if path is None:
        raise ValueError("need a seed file or a builtin name")
    return seed_from_json(json.loads(Path(path).read_text()))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)
