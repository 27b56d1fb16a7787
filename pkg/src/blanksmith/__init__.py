"""Retrieval-guided dialogue generation via skeleton extraction.

Pipeline: index a corpus of query-response pairs, retrieve a similar
historical exchange, mask the retrieved response down to a skeleton of
still-relevant tokens, then generate the final response conditioned on
both the query and the skeleton.
"""

__version__ = "0.1.0"

BLANK = "<blank>"
PAD, UNK, BOS, EOS = "<pad>", "<unk>", "<bos>", "<eos>"
RESERVED_TOKENS = (PAD, UNK, BOS, EOS, BLANK)
