"""Code for the plot module."""
