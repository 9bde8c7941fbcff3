"""Finite-scale certificates for injectivity properties of a morphism.

Every check here inspects periodic orbits of bounded period only.  An empty
report is therefore a necessary condition at the stated bound, never a proof
of the unbounded property; a non-empty report is a genuine counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .language import FactorLanguage
from .morphism import Morphism, apply
from .transfer import DepthError
from .words import Word, is_proper_power, min_rotation, primitive_root


@dataclass(frozen=True)
class ViolationReport:
    """Certificates found by one bounded check.

    kind is "period-preservation" (each certificate a single primitive word
    whose image is a proper power) or "orbit-injectivity" (each certificate a
    pair of primitive non-conjugate words whose image orbits coincide).
    Certificates always re-verify against the defining condition.
    """

    kind: str
    bound: int
    certificates: tuple

    def __bool__(self) -> bool:
        return bool(self.certificates)

    def lines(self) -> list[str]:
        out = []
        for certificate in self.certificates:
            witnesses = (certificate,) if isinstance(certificate, Word) else certificate
            out.append(f"VIOLATION {self.kind} " + " ".join(str(w) for w in witnesses))
        return out

    def render(self) -> str:
        return "\n".join([f"BOUND {self.bound}"] + self.lines())


def _primitive_representatives(language: FactorLanguage, bound: int) -> list[Word]:
    """One canonical representative (least rotation) per rotation class of
    the primitive language words up to the bound."""
    if not 1 <= bound <= language.maxlen:
        raise ValueError(f"bound {bound} outside 1..{language.maxlen}")
    representatives = {
        min_rotation(w)
        for w in language.words
        if len(w) <= bound and not is_proper_power(w)
    }
    return sorted(representatives, key=Word.sort_key)


def check_period_preservation(
    sigma: Morphism, language: FactorLanguage, bound: int
) -> ViolationReport:
    """Witness primitive words whose image is a proper power.

    Image primitivity is a rotation invariant, so one representative per
    class is checked and reported.
    """
    if language.alphabet != sigma.domain:
        raise ValueError("language alphabet must be the domain of the morphism")
    certificates = tuple(
        rep
        for rep in _primitive_representatives(language, bound)
        if is_proper_power(apply(sigma, rep))
    )
    return ViolationReport("period-preservation", bound, certificates)


def check_periodic_orbit_injectivity(
    sigma: Morphism, language: FactorLanguage, bound: int
) -> ViolationReport:
    """Witness pairs of distinct periodic orbits that share an image orbit.

    Two primitive words generate the same image orbit exactly when the
    primitive roots of their images are rotations of each other, so classes
    are grouped by the canonical rotation of that root.
    """
    if language.alphabet != sigma.domain:
        raise ValueError("language alphabet must be the domain of the morphism")
    groups: dict[tuple[int, ...], list[Word]] = {}
    for rep in _primitive_representatives(language, bound):
        root, _ = primitive_root(apply(sigma, rep))
        groups.setdefault(min_rotation(root).letters, []).append(rep)
    pairs = []
    for members in groups.values():
        members.sort(key=Word.sort_key)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append((members[i], members[j]))
    pairs.sort(key=lambda p: (p[0].sort_key(), p[1].sort_key()))
    return ViolationReport("orbit-injectivity", bound, tuple(pairs))


def prolongation_split(
    sigma: Morphism, language: FactorLanguage, w: Word, n: int
) -> tuple[set[Word], set[Word], set[Word]]:
    """Split the n-step two-sided prolongations of w by preimage ambiguity.

    Returns (W, U, A): W holds every uwv in the language with |u| = |v| = n;
    a prolongation is unambiguous (in U) when every language word with the
    same image has the same middle w, and ambiguous (in A) otherwise.  Only
    defined for letter-to-letter morphisms.
    """
    if not sigma.is_letter_to_letter:
        raise ValueError("the prolongation split requires a letter-to-letter morphism")
    if language.alphabet != sigma.domain:
        raise ValueError("language alphabet must be the domain of the morphism")
    if n < 0:
        raise ValueError("prolongation length must be >= 0")
    if len(w) + 2 * n > language.maxlen:
        raise DepthError(len(w) + 2 * n, language.maxlen)
    if w not in language:
        raise ValueError(f"word '{w}' is not in the language")
    middle = w.letters
    total_len = len(w) + 2 * n
    prolongations = {
        x
        for x in language.words
        if len(x) == total_len and x.letters[n : n + len(w)] == middle
    }
    preimages: dict[int, list[int]] = {}
    for i, img in enumerate(sigma.images):
        preimages.setdefault(img.letters[0], []).append(i)
    unambiguous: set[Word] = set()
    ambiguous: set[Word] = set()
    for x in prolongations:
        image = apply(sigma, x)
        options = [preimages.get(b, []) for b in image.letters]
        clean = True
        for combo in itertools.product(*options):
            if combo[n : n + len(w)] != middle and Word(sigma.domain, combo) in language:
                clean = False
                break
        (unambiguous if clean else ambiguous).add(x)
    return prolongations, unambiguous, ambiguous
