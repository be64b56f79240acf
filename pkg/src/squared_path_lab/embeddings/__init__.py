"""Squared path and cycle recognition, exact search and constructive embeddings."""

from .exact import (
    EmbeddingWitness,
    Kind,
    find_octahedron,
    find_squared_cycle,
    find_squared_path,
    longest_cycle,
    longest_squared_cycle,
    longest_squared_path,
    validate_witness,
)
from .nicepath import NicePathBuilder, nice_path_cycle, separated
from .parity import squared_cycle_via_parity_correction
from .qseq import QSequence, concatenation_identity, k4_padding, parity_sum, q_sequence
from .squaring import find_sigma, square_path_lemma

__all__ = [
    "EmbeddingWitness",
    "Kind",
    "NicePathBuilder",
    "QSequence",
    "concatenation_identity",
    "find_octahedron",
    "find_sigma",
    "find_squared_cycle",
    "find_squared_path",
    "k4_padding",
    "longest_cycle",
    "longest_squared_cycle",
    "longest_squared_path",
    "nice_path_cycle",
    "parity_sum",
    "q_sequence",
    "separated",
    "square_path_lemma",
    "squared_cycle_via_parity_correction",
    "validate_witness",
]
