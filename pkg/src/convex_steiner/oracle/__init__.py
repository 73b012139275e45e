"""Code for the oracle module."""
