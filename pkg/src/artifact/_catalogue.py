"""Fixed cross-check instances shared by the test suite and ``verify-all``."""

from __future__ import annotations

from typing import NamedTuple

from .cartan import Weight
from .flags import grassmannian_projection
from .matunits import CoeffMatrix
from .repbuild import Rep, build_irrep
from .scalar import ONE, ZERO


class Instance(NamedTuple):
    name: str
    rep: Rep
    c: CoeffMatrix


def _units(rep: Rep, tag: str) -> list:
    return [Instance(f"{tag}:e{k + 1}{k + 1}", rep, CoeffMatrix.unit(rep.dim, k, k)) for k in range(rep.dim)]


def zero_block_idempotent(rep: Rep) -> CoeffMatrix:
    """``e_zz + e_zz'`` on the first two zero-weight vectors (a non-diagonal idempotent)."""
    z = rep.indices_of_weight(Weight.zero(rep.rs.rank))
    if len(z) < 2:
        raise ValueError("needs a zero weight space of dimension >= 2")
    rows = [[ZERO] * rep.dim for _ in range(rep.dim)]
    rows[z[0]][z[0]] = ONE
    rows[z[0]][z[1]] = ONE
    return CoeffMatrix(rows)


def catalogue(include_grassmannians: bool = True) -> list:
    out = []
    for n in range(1, 5):
        out += _units(build_irrep("A1", [n]), f"A1({n})")
    out += _units(build_irrep("A2", [1, 0]), "A2(1,0)")
    adj = build_irrep("A2", [1, 1])
    out += _units(adj, "A2(1,1)")
    out.append(Instance("A2(1,1):zero-block", adj, zero_block_idempotent(adj)))
    out += _units(build_irrep("A3", [1, 0, 0]), "A3(1,0,0)")
    if include_grassmannians:
        for r, N in ((1, 2), (1, 3), (2, 4)):
            P, _, c = grassmannian_projection(r, N)
            out.append(Instance(f"Gr({r},{N})", P.rep, c))
    return out
