"""Tests for the data module."""
