"""Tests for the validators."""
