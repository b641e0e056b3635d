"""Tests for Monte Carlo ensembles."""
