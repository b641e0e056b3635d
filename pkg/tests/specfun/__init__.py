"""Tests for rmtsums.specfun."""
