"""Exact reference solver for tiny instances."""
