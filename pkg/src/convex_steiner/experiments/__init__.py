"""Code for the experiments module."""
