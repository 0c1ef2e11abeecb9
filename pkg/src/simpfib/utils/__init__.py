"""Utilities package for simpfib."""
