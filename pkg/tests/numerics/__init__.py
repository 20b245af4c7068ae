"""Numerics tests."""
