"""Tests for the plot module."""
