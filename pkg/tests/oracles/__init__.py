"""Tests for rmtsums.oracles."""
