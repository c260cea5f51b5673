"""
TrustProp

Trust inference over bounded-length simple paths in directed social graphs,
with threshold-pruned heuristics and a trust-aware recommender harness.
"""

__version__ = "1.0.0"
