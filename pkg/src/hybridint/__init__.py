"""Symbolic-numeric integration of rational functions."""
