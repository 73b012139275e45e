"""Code for the cli module."""
