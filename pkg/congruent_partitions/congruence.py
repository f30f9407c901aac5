#  Copyright The congruent-partitions Authors. All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License").
#    You may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Congruence of polygons through canonical cyclic edge/turn signatures.

A signature token pairs the squared length of an outgoing edge with the exact turn taken at
the edge's end vertex. Two polygons are congruent under translation and rotation exactly when
their token sequences agree up to a cyclic shift; reflections additionally allow the mirrored
sequence.
"""

import dataclasses
from typing import NamedTuple, Sequence, Tuple, TypeVar

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.geometry import Point, Polygon, Scalar, is_close
from congruent_partitions.geometry._utils import sign

T = TypeVar("T")


class TurnCode(NamedTuple):
    """Exact encoding of the exterior turn between two consecutive edges

    ``cross_sign`` is the sign of the cross product and ``signed_cos_sq`` is
    ``dot * |dot| / (|e1|² |e2|²)``, a monotone function of the turn's cosine. Together they
    identify the angle in (-π, π] without leaving the rationals: two turns are equal exactly
    when their (cross, dot) pairs are positive multiples of each other.
    """

    cross_sign: int
    signed_cos_sq: Scalar


class Token(NamedTuple):
    sq_len: Scalar
    turn: TurnCode


@dataclasses.dataclass(frozen=True)
class Signature:
    tokens: Tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)


def _edge(a: Point, b: Point) -> Tuple[Scalar, Scalar]:
    return b.x - a.x, b.y - a.y


def _turn(e1: Tuple[Scalar, Scalar], e2: Tuple[Scalar, Scalar], eps: float) -> TurnCode:
    cross = e1[0] * e2[1] - e1[1] * e2[0]
    dot = e1[0] * e2[0] + e1[1] * e2[1]
    norms = (e1[0] * e1[0] + e1[1] * e1[1]) * (e2[0] * e2[0] + e2[1] * e2[1])
    return TurnCode(sign(cross, eps), dot * abs(dot) / norms)


def signature(poly: Polygon, eps: float = 0.0) -> Signature:
    """One token per vertex of a normalized polygon

    Token i holds the squared length of edge (v_i, v_i+1) and the turn at v_i+1.
    """
    vs = poly.vertices
    n = len(vs)
    edges = [_edge(vs[i], vs[(i + 1) % n]) for i in range(n)]
    tokens = tuple(
        Token(edges[i][0] * edges[i][0] + edges[i][1] * edges[i][1], _turn(edges[i], edges[(i + 1) % n], eps))
        for i in range(n)
    )
    return Signature(tokens)


def least_rotation(seq: Sequence[T]) -> int:
    """Start index of the lexicographically least cyclic rotation, in linear time"""
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a, b = seq[(i + k) % n], seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:  # type: ignore[operator]
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def _rotate(seq: Sequence[T], start: int) -> Tuple[T, ...]:
    return tuple(seq[start:]) + tuple(seq[:start])


def mirror(sig: Signature) -> Signature:
    """Signature of the mirror image, re-normalized to counterclockwise order

    Reflecting reverses the traversal, so edge j of the image is edge -j-1 of the original and
    the turn at its end is the original turn -j-2. Turn signs are kept because both outlines
    are counterclockwise.
    """
    tokens = sig.tokens
    k = len(tokens)
    return Signature(
        tuple(Token(tokens[(-j - 1) % k].sq_len, tokens[(-j - 2) % k].turn) for j in range(k))
    )


def canonical(sig: Signature, mode: CongruenceMode = CongruenceMode()) -> Signature:
    """Least cyclic rotation of the tokens, also over the mirrored sequence if reflections count"""
    best = _rotate(sig.tokens, least_rotation(sig.tokens))
    if mode.allow_reflection:
        mirrored = mirror(sig).tokens
        candidate = _rotate(mirrored, least_rotation(mirrored))
        best = min(best, candidate)
    return Signature(best)


def _tokens_close(a: Token, b: Token, eps: float) -> bool:
    return (
        a.turn.cross_sign == b.turn.cross_sign
        and is_close(a.sq_len, b.sq_len, eps)
        and is_close(a.turn.signed_cos_sq, b.turn.signed_cos_sq, eps)
    )


def _matches_some_rotation(a: Sequence[Token], b: Sequence[Token], eps: float) -> bool:
    k = len(a)
    return any(all(_tokens_close(a[i], b[(i + shift) % k], eps) for i in range(k)) for shift in range(k))


def congruent(a: Polygon, b: Polygon, mode: CongruenceMode = CongruenceMode(), eps: float = 0.0) -> bool:
    """Decide whether two normalized polygons coincide after a permitted rigid motion

    In exact mode (``eps == 0``) canonical signatures are compared for equality. In approximate
    mode every cyclic alignment is tried with ε-equality on each token.
    """
    if len(a) != len(b):
        return False
    sig_a, sig_b = signature(a, eps), signature(b, eps)
    if not eps:
        return canonical(sig_a, mode) == canonical(sig_b, mode)
    if _matches_some_rotation(sig_a.tokens, sig_b.tokens, eps):
        return True
    if mode.allow_reflection:
        LOGGER.debug("Trying mirrored alignment for %s-gons", len(a))
        return _matches_some_rotation(mirror(sig_a).tokens, sig_b.tokens, eps)
    return False