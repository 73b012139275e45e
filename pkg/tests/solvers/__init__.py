"""Tests for the solvers module."""
