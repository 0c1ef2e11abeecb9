"""Tests for the core engine."""
