"""Interface for word-ball enumeration."""
from abc import ABC, abstractmethod
from typing import List, Sequence

from models.isometry import Isometry
from models.words import BallElement, Representation, Word


class IWordEnumerator(ABC):
    """Protocol for enumerating group elements up to a word length."""

    @abstractmethod
    def evaluate(self, rep: Representation, word: Word) -> Isometry:
        """
        Evaluate a representation on a word.

        Args:
            rep: Representation
            word: Word in the generators of rep

        Returns:
            Product of the generator images, left to right
        """
        pass

    @abstractmethod
    def enumerate_ball(self, rep: Representation, max_length: int) -> List[BallElement]:
        """
        List the group elements of word length at most L.

        Args:
            rep: Representation
            max_length: L, bounded by the configured cap

        Returns:
            One element per group element with its minimal witness, ordered by
            (length, lexicographic)
        """
        pass

    @abstractmethod
    def enumerate_pair(self, reps: Sequence[Representation], max_length: int) -> List[BallElement]:
        """
        Enumerate the ball of the first representation, evaluating the others on each witness.

        Args:
            reps: Representations sharing the generator set; the first one drives deduplication
            max_length: L, bounded by the configured cap

        Returns:
            Ball elements carrying one image per representation
        """
        pass
