"""Shared verdict and stream types for the exact property oracles."""

from __future__ import annotations

from dataclasses import dataclass, field


class TheoremViolation(AssertionError):
    """A verified-by-construction check failed; this would falsify the theory.

    Campaigns record these as violations; the test suite treats them as fatal.
    """


@dataclass
class PropertyVerdict:
    """Outcome of an "every minimal/maximal X is optimal" style predicate.

    ``status`` is "true", "false", or "inconclusive" (the last only from
    budget-limited disprove-only modes).  On "true", ``value`` is the common
    cardinality and ``witness`` one optimal set.  On "false", ``witness`` and
    ``counterexample`` are two minimal/maximal sets of different sizes.
    Certificates are plain tuples so they re-validate independently.
    """

    status: str
    value: int | None = None
    witness: tuple | None = None
    counterexample: tuple | None = None

    @property
    def holds(self) -> bool:
        return self.status == "true"

    @property
    def inconclusive(self) -> bool:
        return self.status == "inconclusive"


class EnumerationStream:
    """Iterator over an enumeration with an explicit truncation flag.

    ``truncated`` flips to True when a count cap stops the stream early;
    callers that need completeness must check it after exhaustion.
    """

    def __init__(self, gen, cap: int | None = None):
        self._gen = gen
        self._cap = cap
        self._count = 0
        self.truncated = False

    def __iter__(self):
        return self

    def __next__(self):
        if self._cap is not None and self._count >= self._cap:
            # peek: only flag truncation if something was actually left
            try:
                next(self._gen)
            except StopIteration:
                raise
            self.truncated = True
            self._gen.close()
            raise StopIteration
        item = next(self._gen)
        self._count += 1
        return item
