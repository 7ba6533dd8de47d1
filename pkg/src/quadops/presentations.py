"""Presentations of binary quadratic regular operads.

A regular (nonsymmetric) operad generated by binary operations op_0, ...,
op_{k-1} subject to quadratic relations keeps its relation space inside the
2*k^2 dimensional span of the parenthesized quadratic monomials. The
coordinate convention is fixed once for the whole package:

* ``(x op_i y) op_j z`` sits at index ``i*k + j`` (the left block),
* ``x op_i (y op_j z)`` sits at index ``k*k + i*k + j`` (the right block).

A relation "sum of left monomials = sum of right monomials" is stored as
the vector "left side minus right side". The duality pairing is +1 on the
left block and -1 on the right block; the dual presentation carries the
orthogonal complement of the relation space under this pairing, with a
star appended to each generator name. Complementing twice restores the
original relation space.

The square product of two presentations has one generator per ordered pair
of generators (pair (i, l) at index ``i*k_q + l``) and one relation per
pair of relations, with left coefficients multiplied on the left block and
right coefficients multiplied on the right block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    _IntBasis,
    _scalar,
    complement_under_form,
    span,
)

__all__ = [
    "GeneratorSet",
    "RelVector",
    "Presentation",
    "GeneratorMap",
    "SignedRelabeling",
    "left_index",
    "right_index",
    "relation_vector",
    "pairing_form",
    "pairing_value",
    "dual",
    "square",
    "quotient",
    "push_relation",
    "is_morphism",
    "compose_maps",
    "apply_relabeling",
    "find_relabeling_iso",
]


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered list of binary operation names; order is part of the data."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("a presentation needs at least one operation")
        if len(set(self.names)) != len(self.names):
            raise ValueError("operation names must be pairwise distinct")
        if any(not n for n in self.names):
            raise ValueError("operation names must be nonempty")

    @property
    def size(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class RelVector:
    """A quadratic relation as a coordinate vector of length 2*k^2."""

    coordinates: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        k = isqrt(len(self.coordinates) // 2)
        if len(self.coordinates) == 0 or 2 * k * k != len(self.coordinates):
            raise DimensionError(
                f"relation vector length {len(self.coordinates)} is not 2*k^2"
            )

    @property
    def num_ops(self) -> int:
        return isqrt(len(self.coordinates) // 2)


def left_index(k: int, i: int, j: int) -> int:
    """Coordinate of the monomial (x op_i y) op_j z."""
    return i * k + j


def right_index(k: int, i: int, j: int) -> int:
    """Coordinate of the monomial x op_i (y op_j z)."""
    return k * k + i * k + j


def relation_vector(
    k: int,
    left_terms: Iterable[tuple],
    right_terms: Iterable[tuple],
) -> RelVector:
    """Build the vector of the relation ``sum(left) = sum(right)``.

    Each term is a triple ``(coeff, i, j)``; on the left side it stands for
    ``coeff * (x op_i y) op_j z``, on the right side for
    ``coeff * x op_i (y op_j z)``. The result is left side minus right side.
    """
    coords = [Fraction(0)] * (2 * k * k)
    for c, i, j in left_terms:
        coords[left_index(k, i, j)] += _scalar(c)
    for c, i, j in right_terms:
        coords[right_index(k, i, j)] -= _scalar(c)
    return RelVector(tuple(coords))


@dataclass(frozen=True)
class Presentation:
    """Binary quadratic presentation: generators plus a relation subspace."""

    generators: GeneratorSet
    relations: Subspace

    def __post_init__(self) -> None:
        k = self.generators.size
        if self.relations.ambient_dim != 2 * k * k:
            raise DimensionError(
                f"relation space must live in dimension {2 * k * k}, "
                f"got {self.relations.ambient_dim}"
            )

    @property
    def num_ops(self) -> int:
        return self.generators.size

    @property
    def ambient_dim(self) -> int:
        return self.relations.ambient_dim

    def relation_rows(self) -> list[RelVector]:
        return [RelVector(row) for row in self.relations.basis.row_list()]


@dataclass(frozen=True)
class GeneratorMap:
    """Linear assignment of source operations to target combinations.

    Row i of ``matrix`` gives the coefficients of the image of source
    operation i in the target operations.
    """

    source: GeneratorSet
    target: GeneratorSet
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.source.size or self.matrix.cols != self.target.size:
            raise DimensionError("map matrix shape does not match its endpoints")


@dataclass(frozen=True)
class SignedRelabeling:
    """A signed permutation of the operations: op_i maps to signs[i] * op_perm[i]."""

    permutation: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.permutation)
        if sorted(self.permutation) != list(range(k)):
            raise ValueError("not a permutation")
        if len(self.signs) != k or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1, one per operation")

    @property
    def size(self) -> int:
        return len(self.permutation)


def pairing_form(k: int) -> Matrix:
    """Duality pairing on the quadratic span: +1 left block, -1 right block."""
    return Matrix.diagonal([1] * (k * k) + [-1] * (k * k))


def pairing_value(v: RelVector, w: RelVector) -> Fraction:
    """Evaluate the duality pairing on two relation vectors."""
    if len(v.coordinates) != len(w.coordinates):
        raise DimensionError("relation vectors live in different spaces")
    half = len(v.coordinates) // 2
    acc = Fraction(0)
    for idx, (x, y) in enumerate(zip(v.coordinates, w.coordinates)):
        if x and y:
            acc += x * y if idx < half else -x * y
    return acc


def dual(p: Presentation) -> Presentation:
    """Dual presentation: starred names, orthogonal relation space."""
    names = tuple(n + "*" for n in p.generators.names)
    relations = complement_under_form(p.relations, pairing_form(p.num_ops))
    return Presentation(GeneratorSet(names), relations)


def _square_vector(
    u: Sequence[Fraction], kp: int, v: Sequence[Fraction], kq: int
) -> list[Fraction]:
    k = kp * kq
    k2 = k * k
    kp2 = kp * kp
    kq2 = kq * kq
    out = [Fraction(0)] * (2 * k2)
    for i in range(kp):
        for j in range(kp):
            ul = u[i * kp + j]
            ur = u[kp2 + i * kp + j]
            if not ul and not ur:
                continue
            for a in range(kq):
                ia = i * kq + a
                for b in range(kq):
                    jb = j * kq + b
                    if ul:
                        vl = v[a * kq + b]
                        if vl:
                            out[ia * k + jb] = ul * vl
                    if ur:
                        vr = v[kq2 + a * kq + b]
                        if vr:
                            # both stored blocks are "minus the right side",
                            # so the product needs one more sign flip
                            out[k2 + ia * k + jb] = -ur * vr
    return out


def square(p: Presentation, q: Presentation) -> Presentation:
    """Square product: pairs of generators, products of relations."""
    names = tuple(f"{a}.{b}" for a in p.generators.names for b in q.generators.names)
    kp, kq = p.num_ops, q.num_ops
    k = kp * kq
    vecs = []
    for u in p.relations.basis.row_list():
        for v in q.relations.basis.row_list():
            vecs.append(_square_vector(u, kp, v, kq))
    return Presentation(GeneratorSet(names), span(vecs, 2 * k * k))


def quotient(p: Presentation, extra: Iterable[RelVector]) -> Presentation:
    """Presentation with extra relations added to the span."""
    vecs: list[Sequence[Fraction]] = list(p.relations.basis.row_list())
    for rv in extra:
        if len(rv.coordinates) != p.ambient_dim:
            raise DimensionError("extra relation has the wrong ambient dimension")
        vecs.append(rv.coordinates)
    return Presentation(p.generators, span(vecs, p.ambient_dim))


def push_relation(phi: GeneratorMap, v: RelVector) -> RelVector:
    """Image of a relation vector under a generator map, block by block."""
    ks = phi.source.size
    kt = phi.target.size
    if v.num_ops != ks:
        raise DimensionError("relation vector does not match the map source")
    ks2 = ks * ks
    kt2 = kt * kt
    out = [Fraction(0)] * (2 * kt2)
    for block in (0, ks2):
        tblock = 0 if block == 0 else kt2
        for i in range(ks):
            for j in range(ks):
                c = v.coordinates[block + i * ks + j]
                if not c:
                    continue
                for a in range(kt):
                    fia = phi.matrix.at(i, a)
                    if not fia:
                        continue
                    base = tblock + a * kt
                    cf = c * fia
                    for b in range(kt):
                        fjb = phi.matrix.at(j, b)
                        if fjb:
                            out[base + b] += cf * fjb
    return RelVector(tuple(out))


def is_morphism(
    phi: GeneratorMap, from_ops_of: Presentation, to_ops_of: Presentation
) -> bool:
    """Whether pushing every relation of the source lands in the target space.

    True means every algebra over ``to_ops_of`` becomes an algebra over
    ``from_ops_of`` by reading each source operation through the map.
    """
    if phi.source != from_ops_of.generators:
        raise DimensionError("map source does not match the source presentation")
    if phi.target != to_ops_of.generators:
        raise DimensionError("map target does not match the target presentation")
    target = _IntBasis(to_ops_of.relations)
    for row in from_ops_of.relations.basis.row_list():
        image = push_relation(phi, RelVector(row))
        if not target.contains(image.coordinates):
            return False
    return True


def compose_maps(f: GeneratorMap, g: GeneratorMap) -> GeneratorMap:
    """Composite map: first f, then g."""
    if f.target != g.source:
        raise DimensionError("maps do not compose: target and source differ")
    return GeneratorMap(f.source, g.target, f.matrix.matmul(g.matrix))


def _transport(
    row: Sequence[Fraction], imap: Sequence[int], smap: Sequence[int], out_len: int
) -> list[Fraction]:
    out = [Fraction(0)] * out_len
    for idx, x in enumerate(row):
        if x:
            s = smap[idx]
            out[imap[idx]] = x if s == 1 else -x
    return out


def _relabel_maps(sigma: SignedRelabeling, k: int) -> tuple[list[int], list[int]]:
    """Coordinate index map and sign map induced on the quadratic span."""
    k2 = k * k
    perm = sigma.permutation
    signs = sigma.signs
    imap = [0] * (2 * k2)
    smap = [1] * (2 * k2)
    for i in range(k):
        for j in range(k):
            new = perm[i] * k + perm[j]
            s = signs[i] * signs[j]
            imap[i * k + j] = new
            imap[k2 + i * k + j] = k2 + new
            smap[i * k + j] = s
            smap[k2 + i * k + j] = s
    return imap, smap


def apply_relabeling(sigma: SignedRelabeling, p: Presentation) -> Presentation:
    """Rename operation i to position perm[i] with sign signs[i]."""
    k = p.num_ops
    if sigma.size != k:
        raise DimensionError("relabeling size does not match the presentation")
    names: list[str] = [""] * k
    for i, name in enumerate(p.generators.names):
        names[sigma.permutation[i]] = name
    imap, smap = _relabel_maps(sigma, k)
    vecs = [
        _transport(row, imap, smap, 2 * k * k) for row in p.relations.basis.row_list()
    ]
    return Presentation(GeneratorSet(tuple(names)), span(vecs, 2 * k * k))


def find_relabeling_iso(
    p: Presentation, q: Presentation
) -> SignedRelabeling | None:
    """Exhaustive search for a signed relabeling carrying p onto q.

    Candidates are tried in lexicographic order: permutations first, then
    sign patterns with all +1 first. Returns the first match, or None.
    """
    k = p.num_ops
    if q.num_ops != k:
        raise DimensionError("presentations have different numbers of operations")
    if p.relations.dimension != q.relations.dimension:
        return None
    k2 = k * k
    ambient = 2 * k2
    target = _IntBasis(q.relations)
    rows = p.relations.basis.row_list()
    for perm in itertools.permutations(range(k)):
        base = [0] * ambient
        for i in range(k):
            for j in range(k):
                new = perm[i] * k + perm[j]
                base[i * k + j] = new
                base[k2 + i * k + j] = k2 + new
        for signs in itertools.product((1, -1), repeat=k):
            sigma = SignedRelabeling(tuple(perm), signs)
            _, smap = _relabel_maps(sigma, k)
            ok = True
            for row in rows:
                if not target.contains(_transport(row, base, smap, ambient)):
                    ok = False
                    break
            if ok:
                return sigma
    return None
