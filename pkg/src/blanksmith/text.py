"""Deterministic text primitives: tokenization, vocabulary, similarity, alignment."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import BLANK, RESERVED_TOKENS

TokenSeq = tuple[str, ...]


def tokenize(text: str, lowercase: bool = True) -> TokenSeq:
    """Split on runs of Unicode whitespace, optionally lowercasing first."""
    if lowercase:
        text = text.lower()
    return tuple(text.split())


def join(tokens: Sequence[str]) -> str:
    return " ".join(tokens)


def jaccard(a: Sequence[str], b: Sequence[str]) -> float:
    """Set similarity |a ∩ b| / |a ∪ b|; two empty sequences count as identical."""
    sa, sb = set(a), set(b)
    if not sa and not sb:
        return 1.0
    return len(sa & sb) / len(sa | sb)


def _lcs_table(a: Sequence[str], b: Sequence[str]) -> list[list[int]]:
    # dp[i][j] = LCS length of a[i:], b[j:]
    n, m = len(a), len(b)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row, below = dp[i], dp[i + 1]
        for j in range(m - 1, -1, -1):
            if a[i] == b[j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = below[j] if below[j] >= row[j + 1] else row[j + 1]
    return dp


def lcs_align(a: Sequence[str], b: Sequence[str]) -> list[tuple[int, int]]:
    """Matched index pairs of one longest common subsequence.

    Among all maximum-length alignments the lexicographically earliest is
    chosen: each match takes the smallest feasible position in ``a``, then
    the smallest feasible position in ``b``. Deterministic by construction.
    """
    dp = _lcs_table(a, b)
    n, m = len(a), len(b)
    pairs: list[tuple[int, int]] = []
    i = j = 0
    while i < n and j < m and dp[i][j] > 0:
        need = dp[i][j]
        matched = False
        # earliest feasible partner for a[i]: matching there must still leave
        # room for the remaining `need - 1` matches
        for jj in range(j, m):
            if a[i] == b[jj] and dp[i + 1][jj + 1] + 1 == need:
                pairs.append((i, jj))
                i, j = i + 1, jj + 1
                matched = True
                break
        if not matched:
            i += 1
    return pairs


def lcs(a: Sequence[str], b: Sequence[str]) -> TokenSeq:
    """One longest common subsequence of ``a`` and ``b`` (see lcs_align)."""
    return tuple(a[i] for i, _ in lcs_align(a, b))


def edit_distance(a: Sequence[str], b: Sequence[str]) -> int:
    """Token-level Levenshtein distance (insertions, deletions, substitutions)."""
    n, m = len(a), len(b)
    if n == 0:
        return m
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev = cur
    return prev[m]


@dataclass(frozen=True)
class StopList:
    """A set of tokens to ignore when aligning responses."""

    words: frozenset[str] = frozenset()

    def __contains__(self, token: str) -> bool:
        return token in self.words

    def filter(self, tokens: Sequence[str]) -> TokenSeq:
        return tuple(t for t in tokens if t not in self.words)

    @classmethod
    def from_file(cls, path: str | Path) -> "StopList":
        """Load a UTF-8 stop-word file, one token per line; '#' lines are comments."""
        words = set()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.add(line)
        return cls(frozenset(words))


@dataclass
class Vocab:
    """Token/id bijection with fixed reserved ids <pad>=0 <unk>=1 <bos>=2 <eos>=3 <blank>=4."""

    token_of: list[str] = field(default_factory=lambda: list(RESERVED_TOKENS))
    id_of: dict[str, int] = field(init=False)

    PAD, UNK, BOS, EOS, BLANK_ID = 0, 1, 2, 3, 4

    def __post_init__(self) -> None:
        self.id_of = {tok: i for i, tok in enumerate(self.token_of)}
        if self.token_of[:5] != list(RESERVED_TOKENS):
            raise ValueError("vocabulary must start with the reserved tokens")
        if len(self.id_of) != len(self.token_of):
            raise ValueError("duplicate token in vocabulary")

    def __len__(self) -> int:
        return len(self.token_of)

    def encode(self, tokens: Sequence[str]) -> list[int]:
        unk = self.UNK
        return [self.id_of.get(t, unk) for t in tokens]

    def decode(self, ids: Sequence[int]) -> TokenSeq:
        return tuple(self.token_of[i] for i in ids)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vocab) and self.token_of == other.token_of


def build_vocab(
    pairs: Iterable, max_size: int = 50000, min_freq: int = 1
) -> Vocab:
    """Frequency vocabulary over queries and responses.

    Reserved tokens come first; the rest are ordered by descending frequency
    (ties lexicographic), kept only when frequency >= min_freq, and the whole
    list is truncated to max_size entries.
    """
    if max_size < len(RESERVED_TOKENS):
        raise ValueError(f"max_size must be at least {len(RESERVED_TOKENS)}")
    counts: Counter[str] = Counter()
    for pair in pairs:
        counts.update(pair.query)
        counts.update(pair.response)
    for tok in RESERVED_TOKENS:
        counts.pop(tok, None)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    tokens = list(RESERVED_TOKENS)
    for tok, freq in ranked:
        if freq < min_freq or len(tokens) >= max_size:
            break
        tokens.append(tok)
    return Vocab(tokens)


def mask_tokens(tokens: Sequence[str], labels: Sequence[int]) -> TokenSeq:
    """Replace tokens labeled 0 with the blank placeholder, keeping length."""
    if len(tokens) != len(labels):
        raise ValueError(
            f"labels length {len(labels)} does not match tokens length {len(tokens)}"
        )
    return tuple(t if keep else BLANK for t, keep in zip(tokens, labels))
