"""Test suite for pdwa."""
