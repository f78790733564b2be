"""Exhaustive checks run small; the counts they confirm are not small."""
