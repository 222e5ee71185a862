"""Torus bundles over the circle, modeled by their monodromy matrices.

A bundle is determined by a matrix in GL_n(Z); conjugate monodromies give
homeomorphic bundles, so everything computed here is a class function of the
monodromy up to conjugation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from . import ck, sft
from .abelian import FgAbelianGroup, cokernel, direct_sum, format_group, is_isomorphic
from .intmat import (
    IntMatrix,
    IntPolynomial,
    NotUnimodular,
    charpoly,
    det,
    matmul,
    trace,
)

__all__ = [
    "NotUnimodular",
    "TorusBundle",
    "NormalizedMonodromy",
    "Outcome",
    "ComparisonVerdict",
    "CKFunctorImage",
    "make_bundle",
    "normalize_monodromy",
    "nonnegative_representative",
    "h1",
    "alexander_polynomial",
    "ck_functor",
    "theorem1_check",
    "compare_bundles",
    "random_unimodular",
]


@dataclass(frozen=True)
class TorusBundle:
    """Fiber torus dimension n plus the monodromy matrix in GL_n(Z); the
    total space has dimension n + 1."""

    monodromy: IntMatrix
    dimension: int


@dataclass(frozen=True)
class NormalizedMonodromy:
    """Monodromy with trace made nonnegative; flipped records whether a
    global sign change was applied."""

    matrix: IntMatrix
    flipped: bool


def make_bundle(a: IntMatrix) -> TorusBundle:
    """Validate a as a monodromy matrix (square, determinant +/-1)."""
    if not a.is_square:
        raise ValueError(f"monodromy must be square, got {a.shape}")
    d = det(a)
    if d not in (1, -1):
        raise NotUnimodular(f"monodromy has determinant {d}, expected +/-1")
    return TorusBundle(monodromy=a, dimension=a.rows)


def normalize_monodromy(b: TorusBundle) -> NormalizedMonodromy:
    """Flip the global sign exactly when the trace is negative; trace zero
    keeps the given sign."""
    if trace(b.monodromy) < 0:
        return NormalizedMonodromy(-b.monodromy, flipped=True)
    return NormalizedMonodromy(b.monodromy, flipped=False)


def nonnegative_representative(
    b: TorusBundle, search_depth: int = 4
) -> tuple[IntMatrix, IntMatrix] | None:
    """Bounded search for (u, a') with a' = u @ A @ u^{-1} entrywise
    nonnegative, where A is the normalized monodromy.

    Returns the first hit in word-enumeration order, or None; a None is not
    a proof that no nonnegative conjugate exists.
    """
    a = normalize_monodromy(b).matrix
    for u, u_inv in sft.unimodular_words(b.dimension, search_depth):
        candidate = matmul(matmul(u, a), u_inv)
        if candidate.is_nonnegative:
            return u, candidate
    return None


def h1(b: TorusBundle) -> FgAbelianGroup:
    """First homology of the bundle: Z + coker(A - I) in canonical form."""
    a = b.monodromy
    return direct_sum(
        FgAbelianGroup.free(1), cokernel(a - IntMatrix.identity(b.dimension))
    )


def alexander_polynomial(b: TorusBundle) -> IntPolynomial:
    """det(tI - A): the characteristic polynomial of the monodromy."""
    return charpoly(b.monodromy)


@dataclass(frozen=True)
class CKFunctorImage:
    """K-theory of the algebra assigned to the bundle, evaluated on the
    normalized monodromy."""

    normalized: NormalizedMonodromy
    k0: FgAbelianGroup
    k1: FgAbelianGroup


def ck_functor(b: TorusBundle) -> CKFunctorImage:
    """Object map of the bundle-to-algebra functor: normalize the monodromy,
    then read off K0 and K1."""
    normalized = normalize_monodromy(b)
    return CKFunctorImage(
        normalized=normalized,
        k0=ck.k0(normalized.matrix),
        k1=ck.k1(normalized.matrix),
    )


def theorem1_check(b: TorusBundle) -> bool:
    """Verify that H1 of the bundle is isomorphic to Z + K0, with K0 taken on
    the bundle's own monodromy.

    Evaluating K0 on the raw matrix keeps this an identity for every sign of
    the trace (a flipped matrix can change K0, e.g. at -I). A false return
    therefore indicates a genuine bug and is surfaced, never swallowed.
    """
    z_plus_k0 = direct_sum(FgAbelianGroup.free(1), ck.k0(b.monodromy))
    return is_isomorphic(h1(b), z_plus_k0)


class Outcome(Enum):
    DISTINCT = "Distinct"
    HOMEOMORPHIC = "Homeomorphic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Comparison outcome plus its evidence: a named invariant mismatch for
    Distinct, an explicit conjugator certificate for Homeomorphic."""

    outcome: Outcome
    witness: str
    certificate: IntMatrix | None = None


def compare_bundles(
    b1: TorusBundle, b2: TorusBundle, search_depth: int = 4
) -> ComparisonVerdict:
    """Distinguish or identify two bundles of the same fiber dimension.

    Distinct requires an invariant mismatch (K0/K1 of the functor images, or
    H1); Homeomorphic requires an explicit unimodular conjugator between the
    monodromies, found by bounded search; anything else is Inconclusive.
    """
    if b1.dimension != b2.dimension:
        raise ValueError(
            f"cannot compare bundles of fiber dimension {b1.dimension} and {b2.dimension}"
        )
    f1, f2 = ck_functor(b1), ck_functor(b2)
    if not is_isomorphic(f1.k0, f2.k0):
        return ComparisonVerdict(
            Outcome.DISTINCT,
            witness=f"K0: {format_group(f1.k0)} vs {format_group(f2.k0)}",
        )
    if not is_isomorphic(f1.k1, f2.k1):
        return ComparisonVerdict(
            Outcome.DISTINCT,
            witness=f"K1: {format_group(f1.k1)} vs {format_group(f2.k1)}",
        )
    h_1, h_2 = h1(b1), h1(b2)
    if not is_isomorphic(h_1, h_2):
        return ComparisonVerdict(
            Outcome.DISTINCT,
            witness=f"H1: {format_group(h_1)} vs {format_group(h_2)}",
        )
    result = sft.conjugacy_search(b1.monodromy, b2.monodromy, search_depth)
    if result.status is sft.ConjugacyStatus.CONJUGATE:
        return ComparisonVerdict(
            Outcome.HOMEOMORPHIC,
            witness=f"monodromies conjugate via {result.conjugator.to_lists()}",
            certificate=result.conjugator,
        )
    if result.status is sft.ConjugacyStatus.NOT_CONJUGATE:
        # non-conjugate monodromies do not prove the bundles distinct
        return ComparisonVerdict(
            Outcome.INCONCLUSIVE,
            witness=f"no invariant differs; monodromies not conjugate ({result.obstruction})",
        )
    return ComparisonVerdict(
        Outcome.INCONCLUSIVE,
        witness=f"no invariant differs; no conjugator found at depth {search_depth}",
    )


def random_unimodular(n: int, word_length: int, rng: random.Random) -> IntMatrix:
    """Random element of GL_n(Z) as a product of word_length elementary
    generators; determinant is exactly +/-1 by construction."""
    gens = sft.elementary_generators(n)
    m = IntMatrix.identity(n)
    for _ in range(word_length):
        m = matmul(m, rng.choice(gens)[0])
    return m
