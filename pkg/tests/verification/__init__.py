"""Tests for rmtsums.verification."""
