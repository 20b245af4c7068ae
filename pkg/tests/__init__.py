"""Tests for domo-fv."""
