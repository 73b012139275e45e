"""Tests for the graphs module."""
