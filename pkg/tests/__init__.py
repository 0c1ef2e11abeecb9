"""Tests for simpfib."""
