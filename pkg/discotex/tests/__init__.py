"""Test subpackage."""
