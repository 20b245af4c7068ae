"""Experiment and sweep tests."""
