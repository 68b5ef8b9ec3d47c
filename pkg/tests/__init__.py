"""Tests for mfsr."""
