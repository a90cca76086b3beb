"""Named quivers: Dynkin diagrams, the rank-3 mutation-finite examples and the
exceptional mutation-finite quivers.

Arrows below are written with 1-based vertex labels as in the figures they
come from. Where a worked example fixes a particular orientation (``a3``,
``b3``, ``c3``, ``f4``) that orientation is used.
"""

from __future__ import annotations

import re

from .matrices import ExchangeMatrix, ValuedQuiver, quiver_to_matrix


def _q(n: int, arrows) -> ValuedQuiver:
    shifted = []
    for a in arrows:
        s, t = a[0] - 1, a[1] - 1
        shifted.append((s, t) + tuple(a[2:]))
    return ValuedQuiver.from_arrows(n, shifted)


def _path(n: int):
    return [(i, i + 1) for i in range(1, n)]


def type_a(n: int) -> ValuedQuiver:
    return _q(n, _path(n))


def type_b(n: int) -> ValuedQuiver:
    if n == 2:
        return _q(2, [(1, 2, (2, 1))])
    return _q(n, _path(n - 1) + [(n, n - 1, (2, 1))])


def type_c(n: int) -> ValuedQuiver:
    if n == 2:
        return _q(2, [(1, 2, (1, 2))])
    return _q(n, _path(n - 1) + [(n, n - 1, (1, 2))])


def type_d(n: int) -> ValuedQuiver:
    if n < 4:
        raise ValueError("type D needs rank at least 4")
    return _q(n, _path(n - 2) + [(n - 2, n - 1), (n - 2, n)])


def type_e(n: int) -> ValuedQuiver:
    if n not in (6, 7, 8):
        raise ValueError("type E exists only in ranks 6, 7, 8")
    return _q(n, _path(n - 1) + [(3, n)])


_FIXED = {
    "a3": lambda: _q(3, [(1, 2), (3, 2)]),
    "b3": lambda: _q(3, [(1, 2), (3, 2, (2, 1))]),
    "c3": lambda: _q(3, [(1, 2), (3, 2, (1, 2))]),
    "f4": lambda: _q(4, [(1, 2), (3, 2, (2, 1)), (3, 4)]),
    "g2": lambda: _q(2, [(1, 2, (3, 1))]),
    "markov": lambda: _q(3, [(1, 2, 2), (2, 3, 2), (3, 1, 2)]),
    "atilde2": lambda: _q(3, [(1, 2), (1, 3), (3, 2)]),
    "atilde2p": lambda: _q(3, [(1, 2, 2), (2, 3), (3, 1)]),
    "kronecker": lambda: _q(2, [(1, 2, 2)]),
    "triple3": lambda: _q(3, [(1, 2, 3), (2, 3), (3, 1)]),
    "x6": lambda: _q(6, [(3, 1), (1, 2, 2), (2, 3), (5, 3), (4, 5, 2), (3, 4), (6, 3)]),
    "x7": lambda: _q(7, [(3, 1), (1, 2, 2), (2, 3), (5, 3), (4, 5, 2), (3, 4),
                         (6, 3), (3, 7), (7, 6, 2)]),
    "te6": lambda: _q(7, _path(5) + [(3, 6), (6, 7)]),
    "te7": lambda: _q(8, _path(7) + [(4, 8)]),
    "te8": lambda: _q(9, _path(8) + [(3, 9)]),
    "e66": lambda: _q(8, [(1, 2), (3, 4), (5, 6), (8, 7, 2), (7, 2), (2, 8),
                          (7, 3), (3, 8), (7, 5), (5, 8)]),
    "e77": lambda: _q(9, [(1, 2), (2, 3), (5, 6), (6, 7), (9, 8, 2), (8, 3), (3, 9),
                          (8, 4), (4, 9), (8, 5), (5, 9)]),
    "e88": lambda: _q(10, [(1, 2), (4, 5), (5, 6), (6, 7), (7, 8), (10, 9, 2), (9, 2),
                           (2, 10), (9, 3), (3, 10), (9, 4), (4, 10)]),
}

_FAMILIES = {"a": type_a, "b": type_b, "c": type_c, "d": type_d, "e": type_e}

BUILTIN_NAMES = (
    "a2", "a3", "b2", "b3", "c3", "d4", "f4", "g2", "e6", "e7", "e8",
    "markov", "atilde2", "x6", "x7", "e66", "e77", "e88", "te6", "te7", "te8",
)


def builtin_quiver(name: str) -> ValuedQuiver:
    """Look up a named quiver; ``a<n>``, ``b<n>``, ``c<n>``, ``d<n>`` work for any rank."""
    key = name.lower().replace("_", "")
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"([abcde])(\d+)", key)
    if m:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    raise KeyError(f"unknown builtin quiver {name!r}")


def builtin_matrix(name: str) -> ExchangeMatrix:
    return quiver_to_matrix(builtin_quiver(name))
