"""Tests for the oracle module."""
