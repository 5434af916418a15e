"""Hypothesis profile: exact rational arithmetic is slow per example, so cap
the example count and drop the deadline instead of letting it flake."""

from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")
