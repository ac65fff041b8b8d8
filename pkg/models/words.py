"""Generator words, representations and the per-word records of spectrum scans."""
import string
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.errors import HyperstretchError
from models.isometry import Isometry

FREE = 'free'
REFLECTION = 'reflection'


def letter_key(letter: int) -> Tuple[int, bool]:
    """Alphabet order a < A < b < B < …"""
    return (abs(letter), letter < 0)


def letter_name(letter: int) -> str:
    k = abs(letter)
    if k <= 26:
        name = string.ascii_lowercase[k - 1]
        return name.upper() if letter < 0 else name
    return f"X{k}." if letter < 0 else f"x{k}."


@dataclass(frozen=True)
class Word:
    """Word in signed generator indices ±1, ±2, …; -k is the inverse of generator k."""
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise HyperstretchError("Generator indices start at 1")
        object.__setattr__(self, 'letters', tuple(self.letters))

    @classmethod
    def parse(cls, text: str) -> 'Word':
        """Parse 'aBc' style words; '1' or '' is the identity."""
        letters: List[int] = []
        text = text.strip()
        if text in ('', '1', 'e'):
            return cls(())
        i = 0
        while i < len(text):
            ch = text[i]
            if ch in 'xX' and i + 1 < len(text) and text[i + 1].isdigit():
                j = text.index('.', i)
                k = int(text[i + 1:j])
                letters.append(-k if ch == 'X' else k)
                i = j + 1
                continue
            if ch.lower() not in string.ascii_lowercase:
                raise HyperstretchError(f"Unexpected character {ch!r} in word {text!r}")
            k = string.ascii_lowercase.index(ch.lower()) + 1
            letters.append(-k if ch.isupper() else k)
            i += 1
        return cls(tuple(letters))

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def sort_key(self) -> Tuple:
        """Ball order: length first, then lexicographic in the alphabet order."""
        return (len(self.letters), tuple(letter_key(x) for x in self.letters))

    @property
    def is_reduced(self) -> bool:
        return all(x != -y for x, y in zip(self.letters, self.letters[1:]))

    @property
    def is_cyclically_reduced(self) -> bool:
        if not self.is_reduced:
            return False
        return len(self.letters) < 2 or self.letters[0] != -self.letters[-1]

    def inverse(self) -> 'Word':
        return Word(tuple(-x for x in reversed(self.letters)))

    def rotate(self, k: int) -> 'Word':
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    def cyclic_reduction(self) -> 'Word':
        letters = list(self.letters)
        while len(letters) >= 2 and letters[0] == -letters[-1]:
            letters = letters[1:-1]
        return Word(tuple(letters))

    def class_representative(self) -> 'Word':
        """Least rotation of the word or of its inverse; λ is constant on this class."""
        candidates = [self.rotate(k) for k in range(max(1, len(self.letters)))]
        inv = self.inverse()
        candidates += [inv.rotate(k) for k in range(max(1, len(self.letters)))]
        return min(candidates, key=lambda w: w.sort_key)

    def __str__(self) -> str:
        return ''.join(letter_name(x) for x in self.letters) or '1'


@dataclass(frozen=True)
class Representation:
    """Images of the generators.

    In reflection mode every generator is an involution and words use
    positive letters only.
    """
    generators: Tuple[Isometry, ...]
    mode: str = FREE

    def __post_init__(self):
        if self.mode not in (FREE, REFLECTION):
            raise HyperstretchError(f"Unknown relation mode {self.mode!r}")
        if not self.generators:
            raise HyperstretchError("A representation needs at least one generator")
        object.__setattr__(self, 'generators', tuple(self.generators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def letters(self) -> List[int]:
        """Alphabet in order."""
        if self.mode == REFLECTION:
            return list(range(1, self.rank + 1))
        return sorted([k for i in range(1, self.rank + 1) for k in (i, -i)], key=letter_key)


@dataclass(frozen=True)
class BallElement:
    """Group element with its minimal witness word and its images under each representation."""
    word: Word
    images: Tuple[Isometry, ...]


@dataclass
class RatioReport:
    word: str
    lambda_j: float
    lambda_rho: float
    ratio: float
    length: int


@dataclass
class DriftReport:
    word: str
    mu_j: float
    mu_rho: float
    drift: float
    length: int


@dataclass
class RatioSupResult:
    """Supremum of λ_ρ/λ_j over the scanned classes; ``empty`` when no j(γ) was hyperbolic."""
    value: Optional[float]
    empty: bool
    max_length: int
    classes_scanned: int
    hyperbolic_classes: int
    top: List[RatioReport] = field(default_factory=list)


DRIFT_CAVEAT = (
    "heuristic: properness and admissibility quantify over the whole infinite group; "
    "only words up to the scanned length were examined"
)
LEFT_CONSISTENT = 'admissibility-consistent (left)'
RIGHT_CONSISTENT = 'admissibility-consistent (right)'
NOT_PROPER = 'not consistent with properness'


@dataclass
class DriftScanResult:
    min_drift: float
    violations: int            # elements with μ_j < μ_ρ
    max_violation: float       # largest μ_ρ − μ_j among them, 0 if none
    per_length_minima: Dict[int, float]
    nondecreasing: bool
    verdict: str
    fit_c: float
    fit_d: float
    c_below_one: bool
    fraction_within_fit: float
    max_length: int
    caveat: str = DRIFT_CAVEAT
    records: List[DriftReport] = field(default_factory=list)


@dataclass
class WordlengthBounds:
    """Empirical constants in 2 log(1 + wl) − R′ ≤ d(p, γp) ≤ 2 log(1 + wl) + R."""
    upper_gap: float
    lower_gap: float
    samples: int


@dataclass
class CriticalExponentEstimate:
    value: float
    orbit_points: int
    radius: float
    max_length: int
