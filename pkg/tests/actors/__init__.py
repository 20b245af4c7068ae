"""Actor system tests."""
