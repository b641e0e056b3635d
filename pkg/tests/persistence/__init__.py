"""Persistence layer test suite."""
