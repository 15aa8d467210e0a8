"""Tests for prymcalc."""
