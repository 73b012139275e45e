"""Tests for the reductions module."""
