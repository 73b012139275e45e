"""Code for the data module."""
