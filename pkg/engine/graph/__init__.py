"""Graph representation, instance formats and generators."""
