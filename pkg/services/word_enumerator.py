"""Breadth-first enumeration of word balls with matrix deduplication."""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from geometry.moebius import compose, inverse
from interfaces.i_word_enumerator import IWordEnumerator
from models.errors import CapExceededError, HyperstretchError
from models.isometry import Isometry
from models.settings import Settings
from models.words import FREE, REFLECTION, BallElement, Representation, Word

logger = logging.getLogger(__name__)


def _bucket(g: Isometry, digits: int) -> Tuple[float, ...]:
    """Canonical entries rounded relative to the matrix scale."""
    scale = max(1.0, math.sqrt(float(g.frobenius_sq)))
    key = [g.orientation]
    for x in g.entries:
        key.append(round(x.real / scale, digits) + 0.0)
        key.append(round((x.imag if isinstance(x, complex) else 0.0) / scale, digits) + 0.0)
    return tuple(key)


class _Seen:
    """Set of group elements: rounded bucket, then an entrywise re-check."""

    def __init__(self, digits: int, recheck: float):
        self.digits = digits
        self.recheck = recheck
        self.buckets: Dict[Tuple[float, ...], List[Isometry]] = {}

    def add(self, g: Isometry) -> bool:
        """Insert g; False when an equal element is already present."""
        bucket = self.buckets.setdefault(_bucket(g, self.digits), [])
        if any(g.is_close(h, self.recheck) for h in bucket):
            return False
        bucket.append(g)
        return True


def _next_letters(rep: Representation, last: Optional[int]) -> List[int]:
    if last is None:
        return rep.letters()
    if rep.mode == REFLECTION:
        return [x for x in rep.letters() if x != last]
    return [x for x in rep.letters() if x != -last]


def _generator_image(rep: Representation, letter: int, inverses: List[Isometry]) -> Isometry:
    return rep.generators[letter - 1] if letter > 0 else inverses[-letter - 1]


def _breadth_first(reps: Sequence[Representation], max_length: int, digits: int, recheck: float,
                   first_letter: Optional[int] = None) -> List[BallElement]:
    """
    Level-by-level ball enumeration.

    Each frontier is kept in lexicographic order and extended letter by
    letter, so the first witness found for an element is the least of its
    shortest words. Free mode trusts the reduced-word normal form; reflection
    mode merges words with equal images under the first representation.
    """
    lead = reps[0]
    dedup = lead.mode == REFLECTION
    inverses = [[inverse(g) for g in rep.generators] for rep in reps]
    identity = tuple(Isometry.identity(rep.generators[0].field) for rep in reps)

    seen = _Seen(digits, recheck)
    seen.add(identity[0])
    root = BallElement(Word(()), identity)
    result = [root] if first_letter is None else []
    frontier = [root]
    for level in range(1, max_length + 1):
        grown = []
        for element in frontier:
            last = element.word.letters[-1] if element.word.letters else None
            letters = _next_letters(lead, last)
            if level == 1 and first_letter is not None:
                letters = [first_letter]
            for letter in letters:
                images = tuple(
                    compose(g, _generator_image(rep, letter, inv))
                    for g, rep, inv in zip(element.images, reps, inverses)
                )
                if dedup and not seen.add(images[0]):
                    continue
                grown.append(BallElement(Word(element.word.letters + (letter,)), images))
        result.extend(grown)
        frontier = grown
        logger.debug("Level %d: %d new elements", level, len(grown))
        if not frontier:
            break
    return result


def _enumerate_prefix(args):
    reps, max_length, digits, recheck, letter = args
    return _breadth_first(reps, max_length, digits, recheck, first_letter=letter)


class WordEnumerator(IWordEnumerator):
    """Enumerates balls of free and reflection groups."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def evaluate(self, rep: Representation, word: Word) -> Isometry:
        """Image of a word under the representation."""
        result = Isometry.identity(rep.generators[0].field)
        for letter in word.letters:
            if abs(letter) > rep.rank:
                raise HyperstretchError(f"Letter {letter} outside a rank-{rep.rank} alphabet")
            g = rep.generators[abs(letter) - 1]
            result = compose(result, g if letter > 0 else inverse(g))
        return result

    def check_representation(self, rep: Representation) -> None:
        """Reflection generators must be involutions."""
        if rep.mode != REFLECTION:
            return
        for k, g in enumerate(rep.generators, start=1):
            if not compose(g, g).is_identity(self.settings.classify_eps):
                raise HyperstretchError(f"Reflection generator {k} does not square to the identity")

    def enumerate_ball(self, rep: Representation, max_length: int) -> List[BallElement]:
        """
        Distinct group elements of word length ≤ max_length, each with its least word.

        Args:
            rep: Representation to enumerate
            max_length: Ball length L, capped by the settings

        Returns:
            Ball elements in deterministic order
        """
        return self.enumerate_pair([rep], max_length)

    def enumerate_pair(self, reps: Sequence[Representation], max_length: int) -> List[BallElement]:
        """Ball words with one image per representation; reflection mode dedups by the first image."""
        reps = list(reps)
        if not reps:
            raise HyperstretchError("No representation given")
        lead = reps[0]
        for rep in reps:
            if rep.rank != lead.rank or rep.mode != lead.mode:
                raise HyperstretchError("Representations must share generators and relation mode")
            self.check_representation(rep)
        self._check_cap(lead, max_length)

        digits, recheck = self.settings.dedup_digits, self.settings.dedup_recheck
        workers = self.settings.enumeration_workers
        if workers <= 1 or max_length == 0:
            ball = _breadth_first(reps, max_length, digits, recheck)
        else:
            ball = self._enumerate_parallel(reps, max_length, digits, recheck, workers)
        logger.info("Enumerated %d elements up to length %d (%s, rank %d)",
                    len(ball), max_length, lead.mode, lead.rank)
        return ball

    def _enumerate_parallel(self, reps, max_length, digits, recheck, workers) -> List[BallElement]:
        """Partition by first letter, then keep the least (length, lex) witness per element."""
        tasks = [(reps, max_length, digits, recheck, letter) for letter in reps[0].letters()]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_enumerate_prefix, tasks))

        identity = tuple(Isometry.identity(rep.generators[0].field) for rep in reps)
        merged = [BallElement(Word(()), identity)]
        for part in parts:
            merged.extend(part)
        merged.sort(key=lambda e: e.word.sort_key)
        if reps[0].mode == FREE:
            return merged

        seen = _Seen(digits, recheck)
        ball = []
        for element in merged:
            if seen.add(element.images[0]):
                ball.append(element)
        return ball

    def _check_cap(self, rep: Representation, max_length: int) -> None:
        if max_length < 0:
            raise HyperstretchError("Word length must be nonnegative")
        # cyclic and dihedral groups grow linearly and are not capped
        if rep.mode == FREE:
            exponential, cap = rep.rank >= 2, self.settings.max_free_length
        else:
            exponential, cap = rep.rank >= 3, self.settings.max_reflection_length
        if exponential and max_length > cap:
            raise CapExceededError(f"Word length {max_length} exceeds the cap of {cap} for {rep.mode} groups")
