"""Tests for the bicellular map engine."""
