"""Bundled example SES specs."""
