"""Cliques and clique-set solutions with coverage accounting."""
